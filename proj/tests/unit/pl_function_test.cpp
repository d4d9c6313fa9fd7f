#include <gtest/gtest.h>

#include "kee/pl_function.hpp"

using kee::AffineMap;
using kee::PLFunction;
using kee::Rat;
using kee::rat;

TEST(PLFunction, RejectsBadKnots) {
  EXPECT_THROW(PLFunction({{0, 0}}), std::invalid_argument);
  EXPECT_THROW(PLFunction({{0, 0}, {0, 1}}), std::invalid_argument);
  EXPECT_THROW(PLFunction({{1, 0}, {0, 1}}), std::invalid_argument);
}

TEST(PLFunction, LowerEnvelopeOfTwoLines) {
  std::vector<AffineMap> maps{{0, 0}, {-1, 0}};
  PLFunction f = PLFunction::lower_envelope(rat(-1, 2), Rat(2), maps);
  EXPECT_EQ(f(rat(-1, 2)), 0);
  EXPECT_EQ(f(Rat(0)), 0);
  EXPECT_EQ(f(Rat(2)), -2);
  EXPECT_EQ(f.breakpoints(), std::vector<Rat>{Rat(0)});
  EXPECT_TRUE(f.is_concave());
}

TEST(PLFunction, EnvelopeCrossingOutsideDomain) {
  std::vector<AffineMap> maps{{0, 0}, {-1, 0}};
  PLFunction f = PLFunction::lower_envelope(Rat(1), Rat(3), maps);
  EXPECT_TRUE(f.breakpoints().empty());
  EXPECT_EQ(f(Rat(2)), -2);
}

TEST(PLFunction, Integrals) {
  PLFunction f = PLFunction::affine(Rat(0), Rat(2), {Rat(1), Rat(0)});
  EXPECT_EQ(f.integral(), 2);
  EXPECT_EQ(f.first_moment(), rat(8, 3));
  EXPECT_EQ(kee::integrate_product(f, f), rat(8, 3));
  PLFunction g({{-1, 0}, {0, 1}, {1, 0}});
  EXPECT_EQ(g.integral(), 1);
  EXPECT_EQ(g.first_moment(), 0);
  EXPECT_EQ(kee::integrate_product(g, g), rat(2, 3));
}

TEST(PLFunction, SumAndScale) {
  PLFunction f({{0, 0}, {1, 1}, {2, 0}});
  PLFunction g = PLFunction::affine(Rat(0), Rat(2), {Rat(-1), Rat(3)});
  PLFunction h = f + g * Rat(2);
  EXPECT_EQ(h(Rat(1)), 1 + 2 * 2);
  EXPECT_EQ(h(rat(1, 2)), rat(1, 2) + 2 * rat(5, 2));
  EXPECT_THROW(f + PLFunction::affine(Rat(0), Rat(1), {0, 0}), std::invalid_argument);
}

TEST(PLFunction, SimplifiedDropsCollinearKnots) {
  PLFunction f({{0, 0}, {1, 1}, {2, 2}, {3, 2}});
  EXPECT_EQ(f.simplified().knots().size(), 3u);
  EXPECT_EQ(f, f.simplified());
}

TEST(PLFunction, ConvexIsNotConcave) {
  PLFunction f({{-1, 1}, {0, 0}, {1, 1}});
  EXPECT_FALSE(f.is_concave());
}
