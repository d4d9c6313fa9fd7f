#pragma once

// Complexity-one torus structure of S: the C^*-action along the fibres of
// F_n lifts to S, making it a T-variety over P^1 with one-dimensional
// lattice N = Z. Polyhedra are intervals, the tail fan has the two rays
// +1 (horizontal divisor C1) and -1 (horizontal divisor C2).
//
// Slices:  p_0      : vertex n        (fibre over p_0)
//          p_i, i>0 : vertices -1, 0  (E_i and the proper transform F_i)
//          trivial  : vertex 0        (every other fibre)

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "kee/errors.hpp"
#include "kee/picard.hpp"
#include "kee/pl_function.hpp"

namespace kee {

enum class ValuationKind { RayC1, RayC2, Exceptional, FiberTilde, FiberP0, GenericFiber };

// A T-invariant prime divisor on S, named by its role in the f-divisor.
// The default ordering is the reporting order: C1, C2, E_1..E_m,
// F_1..F_m, fibre over p_0, generic fibre.
struct Valuation {
  ValuationKind kind = ValuationKind::RayC1;
  int index = 0;

  auto operator<=>(const Valuation&) const = default;

  std::string name() const;
  // Divisor class on S carrying this valuation.
  CurveId curve() const;
};

enum class SliceKind { P0, Marked, Trivial };

struct Slice {
  SliceKind kind = SliceKind::Trivial;
  int index = 0;  // i for p_i
  std::vector<Rat> vertices;
};

struct FDivisorModel {
  SurfaceParams params;
  std::vector<Slice> slices;  // p_0, p_1, ..., p_m
  Slice trivial;              // stands for every unmarked point of P^1
  std::vector<Rat> degree;    // always empty for this family

  Valuation valuation_of(const Slice& slice, const Rat& vertex) const;
};

// Smallest mu >= 1 with mu * v integral.
int vertex_multiplicity(const Rat& v);

FDivisorModel build_fdivisor(const SurfaceParams& params);

// Coefficients of a T-invariant divisor sum_rho c_rho D_rho + sum c_{p,v} D_{p,v}.
struct TInvariantDivisor {
  Rat c1;  // on D_{+1} = C1
  Rat c2;  // on D_{-1} = C2
  std::vector<std::vector<Rat>> vertex;  // per slice, per vertex
  std::vector<Rat> trivial_vertex;
};

// Values of h_p at the vertices of one slice.
struct SliceFunction {
  std::vector<Rat> vertices;
  std::vector<Rat> values;
};

struct SupportFunction {
  Rat at_positive_ray;  // h_t(+1)
  Rat at_negative_ray;  // h_t(-1)
  std::vector<SliceFunction> slices;
  SliceFunction trivial;

  // Linear part: h_t(v) = -h_t(-1) * v for v < 0 and h_t(+1) * v for v >= 0.
  Rat linear_part(const Rat& v) const;
  // h_p(v): linear interpolation between vertices, linear part outside.
  Rat evaluate(const SliceFunction& slice, const Rat& v) const;
};

// Inverse of the divisor formula: h_t(n_rho) = -c_rho, h_p(v) = -c_{p,v}/mu(v).
SupportFunction support_function_of(const FDivisorModel& fdiv, const TInvariantDivisor& divisor);

// -K_{S,Delta_beta} = beta1 C1 + beta2 C2 + 2 (fibre over p_0).
SupportFunction anticanonical_support_function(const FDivisorModel& fdiv, const Angles& angles);

// -sum_rho h_t(n_rho) D_rho - sum mu(v) h_p(v) D_{p,v}, as a class on S.
DivisorClass divisor_of(const SurfaceModel& model, const FDivisorModel& fdiv, const SupportFunction& h);

struct DualData {
  Rat box_lo;  // the moment interval [box_lo, box_hi]
  Rat box_hi;
  PLFunction psi_p0;
  PLFunction psi_marked;
  PLFunction psi_trivial;
  PLFunction deg_psi;
  int marked_count = 0;

  const PLFunction& psi(SliceKind kind) const;
};

// Psi_p(u) = min over vertices v of (u v - h_p(v)) on the moment interval.
DualData legendre_dual(const FDivisorModel& fdiv, const SupportFunction& h);

Rat vol_psi(const DualData& d);
Rat barycenter(const DualData& d);
Rat bc_p(const DualData& d, SliceKind point);

struct ValuationTerm {
  Valuation valuation;
  Rat value;  // A/S of the valuation
};

struct DeltaReport {
  Rat delta;
  std::vector<Valuation> witnesses;  // every valuation attaining delta
  std::vector<ValuationTerm> terms;  // reporting order

  const Rat& term(const Valuation& v) const;
};

// Throws OutsideAmpleRange.
DeltaReport delta_tvariety(const SurfaceParams& params, const Angles& angles);

// Sign of beta1^2 - beta2^2 - (n beta1^3 + (n-m) beta2^3)/3, computed as
// -sign(integral of u * deg Psi); zero exactly when the barycenter vanishes.
int futaki_vanishes(const SurfaceParams& params, const Angles& angles);

}  // namespace kee
