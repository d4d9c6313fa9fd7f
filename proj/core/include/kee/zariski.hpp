#pragma once

#include <span>
#include <vector>

#include "kee/errors.hpp"
#include "kee/picard.hpp"

namespace kee {

struct NegativeComponent {
  CurveId curve;
  Rat coefficient;

  bool operator==(const NegativeComponent&) const = default;
};

// D = P + N with P nef, N = sum a_i N_i effective, (N_i.N_j) negative
// definite and P.N_i = 0. Components are kept in canonical CurveId order.
struct ZariskiDecomposition {
  DivisorClass positive;
  std::vector<NegativeComponent> negative;

  DivisorClass negative_class(const SurfaceModel& model) const;
  bool operator==(const ZariskiDecomposition&) const = default;
};

bool is_negative_definite(const SurfaceModel& model, std::span<const CurveId> curves);

// Incremental support growth: add every candidate curve meeting the current
// positive part negatively, re-solve P.N_i = 0, repeat until P is nef.
// The result is certified with certify_decomposition before returning.
// Throws NotPseudoeffective.
ZariskiDecomposition zariski_decompose(const SurfaceModel& model, const DivisorClass& d);

// Oracle: enumerates every subset of the candidate curves and keeps the one
// satisfying all three defining conditions. Exponential in m; refuses m > 8.
// Throws NotPseudoeffective, or InconsistencyError if two subsets qualify.
ZariskiDecomposition zariski_decompose_bruteforce(const SurfaceModel& model, const DivisorClass& d);

// Checks P + N = D, P nef, P.N_i = 0, a_i > 0 and negative definiteness.
// Throws InconsistencyError naming the failed condition.
void certify_decomposition(const SurfaceModel& model, const DivisorClass& d,
                           const ZariskiDecomposition& zd);

// vol(D) = P^2. Throws NotPseudoeffective.
Rat volume(const SurfaceModel& model, const DivisorClass& d);

// --- one-parameter families -------------------------------------------------

// value + slope * x
struct Affine {
  Rat value;
  Rat slope;

  Rat at(const Rat& x) const { return value + slope * x; }
  // Sign on (x, x + eps) for small eps > 0.
  int sign_right_of(const Rat& x) const;
};

// base + x * slope
struct AffineClass {
  DivisorClass base;
  DivisorClass slope;

  DivisorClass at(const Rat& x) const { return base + x * slope; }
};

struct AffineDecomposition {
  std::vector<CurveId> support;
  std::vector<Affine> coefficients;  // parallel to support
  AffineClass positive;
};

// Zariski decomposition of D(x) valid on a right neighbourhood (x0, x0+eps).
// Every comparison is made on x0^+, so ties at chamber walls resolve toward
// the chamber being entered.
AffineDecomposition decompose_right_of(const SurfaceModel& model, const AffineClass& d, const Rat& x0);

}  // namespace kee
