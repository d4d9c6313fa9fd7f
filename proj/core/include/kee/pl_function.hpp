#pragma once

#include <span>
#include <utility>
#include <vector>

#include "kee/rational.hpp"

namespace kee {

// u -> slope * u + intercept
struct AffineMap {
  Rat slope;
  Rat intercept;

  Rat operator()(const Rat& u) const { return slope * u + intercept; }
};

// Continuous piecewise-linear function on a closed rational interval,
// stored as knots (u_0, y_0), ..., (u_k, y_k) with u_0 < ... < u_k and
// linear interpolation between them.
class PLFunction {
 public:
  struct Knot {
    Rat u;
    Rat y;
    bool operator==(const Knot&) const = default;
  };

  // Throws std::invalid_argument unless there are >= 2 strictly increasing knots.
  explicit PLFunction(std::vector<Knot> knots);

  static PLFunction affine(const Rat& lo, const Rat& hi, const AffineMap& f);
  // Pointwise minimum of finitely many affine maps on [lo, hi].
  static PLFunction lower_envelope(const Rat& lo, const Rat& hi, std::span<const AffineMap> maps);

  const Rat& lo() const { return knots_.front().u; }
  const Rat& hi() const { return knots_.back().u; }
  const std::vector<Knot>& knots() const { return knots_; }
  std::vector<Rat> breakpoints() const;  // interior knots after simplification
  std::vector<Rat> slopes() const;

  Rat operator()(const Rat& u) const;
  bool is_concave() const;

  // Collinear interior knots removed.
  PLFunction simplified() const;

  PLFunction operator+(const PLFunction& other) const;
  PLFunction operator*(const Rat& t) const;

  Rat integral() const;
  // Integral of u * f(u).
  Rat first_moment() const;

  bool operator==(const PLFunction& other) const;

 private:
  std::vector<Knot> knots_;
};

// Integral over the common domain of f * g, exact on the common refinement
// of breakpoints. Throws std::invalid_argument if the domains differ.
Rat integrate_product(const PLFunction& f, const PLFunction& g);

}  // namespace kee
