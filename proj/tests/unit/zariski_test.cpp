#include <gtest/gtest.h>

#include <vector>

#include "kee/sampling.hpp"
#include "kee/zariski.hpp"

using kee::Angles;
using kee::CurveId;
using kee::DivisorClass;
using kee::NegativeComponent;
using kee::Rat;
using kee::rat;
using kee::SurfaceModel;

namespace {

bool nd(int n, int m, std::vector<CurveId> curves) { return kee::is_negative_definite(SurfaceModel({n, m}), curves); }

std::vector<CurveId> all_f(int m) {
  std::vector<CurveId> out;
  for (int i = 1; i <= m; ++i) out.push_back(CurveId::f(i));
  return out;
}

std::vector<CurveId> with(std::vector<CurveId> front, const std::vector<CurveId>& rest) {
  front.insert(front.end(), rest.begin(), rest.end());
  return front;
}

}  // namespace

TEST(NegativeDefinite, SevenFamilies) {
  for (int m = 1; m <= 6; ++m) {
    for (int n = 0; n <= 7; ++n) {
      std::vector<CurveId> es;
      for (int i = 1; i <= m; ++i) es.push_back(CurveId::e(i));
      EXPECT_TRUE(nd(n, m, all_f(m)));
      EXPECT_TRUE(nd(n, m, es));
      for (int i = 1; i <= m; ++i) {
        if (n > 1) EXPECT_TRUE(nd(n, m, {CurveId::c1(), CurveId::f(i)}));
        if (n < m) EXPECT_TRUE(nd(n, m, {CurveId::c2(), CurveId::f(i)}));
        if (1 < n && n < m) EXPECT_TRUE(nd(n, m, {CurveId::c1(), CurveId::c2(), CurveId::f(i)}));
        if (n == 0) {
          std::vector<CurveId> fam{CurveId::c2(), CurveId::f(i)};
          for (int j = 1; j <= m; ++j) {
            if (j != i) fam.push_back(CurveId::e(j));
          }
          EXPECT_TRUE(nd(n, m, fam));
        }
      }
      if (n > m) EXPECT_TRUE(nd(n, m, with({CurveId::c1()}, all_f(m))));
    }
  }
}

TEST(NegativeDefinite, BoundaryViolations) {
  EXPECT_FALSE(nd(1, 1, {CurveId::c1(), CurveId::f(1)}));
  EXPECT_FALSE(nd(1, 3, {CurveId::c1(), CurveId::f(2)}));
  for (int m = 1; m <= 5; ++m) {
    EXPECT_FALSE(nd(m, m, with({CurveId::c1()}, all_f(m))));
    EXPECT_FALSE(nd(m, m, {CurveId::c2(), CurveId::f(1)}));
  }
  EXPECT_FALSE(nd(1, 3, {CurveId::c1(), CurveId::c2(), CurveId::f(1)}));
  EXPECT_FALSE(nd(3, 3, {CurveId::c1(), CurveId::c2(), CurveId::f(1)}));
  EXPECT_TRUE(nd(2, 3, {CurveId::c1(), CurveId::c2(), CurveId::f(1)}));
}

TEST(Zariski, NefClassHasNoNegativePart) {
  SurfaceModel s({0, 2});
  DivisorClass l = s.log_anticanonical({rat(1, 2), rat(1, 2)});
  auto zd = kee::zariski_decompose(s, l);
  EXPECT_TRUE(zd.negative.empty());
  EXPECT_EQ(zd.positive, l);
  EXPECT_EQ(kee::volume(s, l), rat(7, 2));
}

TEST(Zariski, FibresSplitOffPastFirstWall) {
  // L - x C1 for x in (beta1, beta1 + beta2]: N = (x - beta1) sum F_i.
  kee::Sampler rng(21);
  for (int k = 0; k < 50; ++k) {
    kee::SurfaceParams p{static_cast<int>(rng.uniform_int(0, 5)), static_cast<int>(rng.uniform_int(1, 5))};
    Angles a = rng.ample_angles(p);
    SurfaceModel s(p);
    Rat x = a.beta1 + a.beta2 * rng.uniform_int(1, 9) / 10;
    auto zd = kee::zariski_decompose(s, s.log_anticanonical(a) - x * s.class_of(CurveId::c1()));
    std::vector<NegativeComponent> expected;
    for (int i = 1; i <= p.m; ++i) expected.push_back({CurveId::f(i), x - a.beta1});
    EXPECT_EQ(zd.negative, expected);
  }
}

TEST(Zariski, ExceptionalCurvesSplitOffForC2) {
  kee::Sampler rng(22);
  for (int k = 0; k < 50; ++k) {
    kee::SurfaceParams p{static_cast<int>(rng.uniform_int(0, 5)), static_cast<int>(rng.uniform_int(1, 5))};
    Angles a = rng.ample_angles(p);
    SurfaceModel s(p);
    Rat x = a.beta2 + a.beta1 * rng.uniform_int(1, 9) / 10;
    auto zd = kee::zariski_decompose(s, s.log_anticanonical(a) - x * s.class_of(CurveId::c2()));
    std::vector<NegativeComponent> expected;
    for (int i = 1; i <= p.m; ++i) expected.push_back({CurveId::e(i), x - a.beta2});
    EXPECT_EQ(zd.negative, expected);
  }
}

TEST(Zariski, ThirdChamberForExceptionalWhenNAtLeastM) {
  // x in (2 - (n-1) beta1, 2]: N = (beta1 - (2-x)/(n-1)) C1 + ((n x - 2)/(n-1)) F_i.
  kee::SurfaceParams p{4, 2};
  Angles a{rat(1, 3), rat(1, 4)};
  SurfaceModel s(p);
  Rat x = rat(19, 10);
  ASSERT_GT(x, 2 - 3 * a.beta1);
  auto zd = kee::zariski_decompose(s, s.log_anticanonical(a) - x * s.class_of(CurveId::e(1)));
  std::vector<NegativeComponent> expected{{CurveId::c1(), a.beta1 - (2 - x) / 3}, {CurveId::f(1), (4 * x - 2) / 3}};
  EXPECT_EQ(zd.negative, expected);
  EXPECT_EQ(kee::zariski_decompose_bruteforce(s, s.log_anticanonical(a) - x * s.class_of(CurveId::e(1))), zd);
}

TEST(Zariski, LastChamberWhenNZero) {
  // x in (2, 2 + beta1]: N = (beta2 + x - 2) C2 + (x - beta1) F_i + (x - 2) sum_{j != i} E_j.
  kee::SurfaceParams p{0, 3};
  Angles a{rat(1, 2), rat(1, 3)};
  SurfaceModel s(p);
  Rat x = rat(9, 4);
  auto zd = kee::zariski_decompose(s, s.log_anticanonical(a) - x * s.class_of(CurveId::e(1)));
  std::vector<NegativeComponent> expected{{CurveId::c2(), a.beta2 + x - 2},
                                          {CurveId::e(2), x - 2},
                                          {CurveId::e(3), x - 2},
                                          {CurveId::f(1), x - a.beta1}};
  EXPECT_EQ(zd.negative, expected);
}

TEST(Zariski, VolumeVanishesAtThreshold) {
  SurfaceModel s({0, 2});
  Angles a{rat(1, 2), rat(1, 2)};
  EXPECT_EQ(kee::volume(s, s.log_anticanonical(a) - Rat(1) * s.class_of(CurveId::c1())), 0);
}

TEST(Zariski, NotPseudoeffective) {
  SurfaceModel s({0, 2});
  EXPECT_THROW(kee::zariski_decompose(s, -s.class_of(CurveId::generic_fiber())), kee::NotPseudoeffective);
  EXPECT_THROW(kee::zariski_decompose_bruteforce(s, -s.class_of(CurveId::generic_fiber())), kee::NotPseudoeffective);
}

TEST(Zariski, CertificateCatchesBadDecomposition) {
  SurfaceModel s({0, 1});
  DivisorClass d = s.class_of(CurveId::e(1)) + s.class_of(CurveId::generic_fiber());
  auto good = kee::zariski_decompose(s, d);
  EXPECT_NO_THROW(kee::certify_decomposition(s, d, good));
  auto bad = good;
  bad.negative.clear();
  bad.positive = d;
  EXPECT_THROW(kee::certify_decomposition(s, d, bad), kee::InconsistencyError);
}

TEST(Zariski, MatchesBruteForceOnRandomEffectiveClasses) {
  kee::Sampler rng(7);
  for (int k = 0; k < 150; ++k) {
    kee::SurfaceParams p = rng.params(6, 4);
    SurfaceModel s(p);
    DivisorClass d = s.class_of(CurveId::generic_fiber());
    for (const auto& c : s.negative_curve_candidates()) d += rng.unit_coefficient() * s.class_of(c);
    auto fast = kee::zariski_decompose(s, d);
    auto slow = kee::zariski_decompose_bruteforce(s, d);
    EXPECT_EQ(fast, slow);
    EXPECT_EQ(fast.positive + fast.negative_class(s), d);
  }
}

TEST(Zariski, VolumeMonotoneUnderAddingEffective) {
  kee::Sampler rng(8);
  for (int k = 0; k < 100; ++k) {
    kee::SurfaceParams p = rng.params(6, 4);
    SurfaceModel s(p);
    DivisorClass d = s.log_anticanonical(rng.ample_angles(p));
    const auto& cands = s.negative_curve_candidates();
    CurveId e = cands[static_cast<std::size_t>(rng.uniform_int(0, static_cast<long>(cands.size()) - 1))];
    EXPECT_GE(kee::volume(s, d + rng.angle() * s.class_of(e)), kee::volume(s, d));
  }
}
