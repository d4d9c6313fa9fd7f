#pragma once

#include <vector>

#include "kee/errors.hpp"
#include "kee/picard.hpp"

namespace kee {

// q0 + q1 x + q2 x^2
struct Quadratic {
  Rat q0;
  Rat q1;
  Rat q2;

  Rat operator()(const Rat& x) const { return q0 + x * (q1 + x * q2); }
  Rat derivative(const Rat& x) const { return q1 + 2 * q2 * x; }
  Rat integral(const Rat& lo, const Rat& hi) const;
  bool operator==(const Quadratic&) const = default;
};

Quadratic operator+(const Quadratic& p, const Quadratic& q);
Quadratic operator*(const Rat& t, const Quadratic& q);
// (u0 + u1 x)(v0 + v1 x)
Quadratic product_of_linear(const Rat& u0, const Rat& u1, const Rat& v0, const Rat& v1);

struct Chamber {
  Rat lo;
  Rat hi;
  Quadratic volume;
  std::vector<CurveId> negative_support;

  bool operator==(const Chamber&) const = default;
};

// x -> vol(L - x E) on [0, tau], one quadratic per Zariski chamber.
class PiecewiseQuadratic {
 public:
  PiecewiseQuadratic() = default;
  explicit PiecewiseQuadratic(std::vector<Chamber> pieces) : pieces_(std::move(pieces)) {}

  const std::vector<Chamber>& pieces() const { return pieces_; }
  bool empty() const { return pieces_.empty(); }
  const Rat& threshold() const { return pieces_.back().hi; }

  // Value at x in [0, tau]; at a wall, the left chamber is used.
  Rat operator()(const Rat& x) const;
  Rat integral() const;

  // Drops zero-width pieces and merges neighbours with identical
  // polynomials. Supports of merged pieces are those of the left piece.
  PiecewiseQuadratic normalized() const;

  // Same breakpoints and polynomials after normalization (supports ignored).
  bool same_function(const PiecewiseQuadratic& other) const;

 private:
  std::vector<Chamber> pieces_;
};

// Chamber sweep of x -> vol(L - x E) for an arbitrary big class L and an
// effective class E. Throws IrrationalThreshold, NotPseudoeffective.
PiecewiseQuadratic sweep_volume(const SurfaceModel& model, const DivisorClass& l, const DivisorClass& e);

// vol(-K_{S,Delta_beta} - x E). Throws OutsideAmpleRange.
PiecewiseQuadratic volume_curve(CurveId e, const SurfaceParams& params, const Angles& angles);

Rat threshold(CurveId e, const SurfaceParams& params, const Angles& angles);

// S(E) = (1 / vol L) * integral_0^tau vol(L - x E) dx.
Rat expected_vanishing_order(CurveId e, const SurfaceParams& params, const Angles& angles);

// A_{S,Delta}(E) for a prime divisor on S: beta_i on C_i, 1 elsewhere.
Rat log_discrepancy(CurveId e, const Angles& angles);

}  // namespace kee
