#pragma once

// Picard lattice of the blow-up S of the Hirzebruch surface F_n at m points
// on the section C_2, in the fixed basis (pi^*C_2, pi^*F, E_1, ..., E_m).
//
// SIGN CONVENTION: a DivisorClass {a, b, c} denotes
//
//     a * pi^*C_2  +  b * pi^*F  -  sum_i c_i * E_i
//
// i.e. c_i is the coefficient of -E_i. The exceptional curve E_i itself has
// c_i = -1, and the log anticanonical class has c_i = beta_2 > 0.

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kee/linalg.hpp"
#include "kee/rational.hpp"

namespace kee {

struct SurfaceParams {
  int n = 0;  // C_1^2 = -n on F_n
  int m = 0;  // number of blown-up points

  bool operator==(const SurfaceParams&) const = default;
};

// Cone angles 2*pi*beta_i along the proper transforms of C_1 and C_2.
struct Angles {
  Rat beta1;
  Rat beta2;

  bool operator==(const Angles&) const = default;
};

struct DivisorClass {
  Rat a;
  Rat b;
  std::vector<Rat> c;

  bool operator==(const DivisorClass&) const = default;

  DivisorClass& operator+=(const DivisorClass& other);
  DivisorClass& operator-=(const DivisorClass& other);
  DivisorClass& operator*=(const Rat& t);
};

DivisorClass operator+(DivisorClass lhs, const DivisorClass& rhs);
DivisorClass operator-(DivisorClass lhs, const DivisorClass& rhs);
DivisorClass operator*(const Rat& t, DivisorClass d);
DivisorClass operator-(DivisorClass d);

enum class CurveKind { C1Tilde, C2Tilde, Exceptional, FiberTilde, GenericFiber, PullbackC2 };

// A named curve on S. `index` is 1-based and only meaningful for
// Exceptional (E_i) and FiberTilde (proper transform of the fiber through p_i).
struct CurveId {
  CurveKind kind = CurveKind::C1Tilde;
  int index = 0;

  static CurveId c1() { return {CurveKind::C1Tilde, 0}; }
  static CurveId c2() { return {CurveKind::C2Tilde, 0}; }
  static CurveId e(int i) { return {CurveKind::Exceptional, i}; }
  static CurveId f(int i) { return {CurveKind::FiberTilde, i}; }
  static CurveId generic_fiber() { return {CurveKind::GenericFiber, 0}; }
  static CurveId pullback_c2() { return {CurveKind::PullbackC2, 0}; }

  // Canonical order: C1, C2, E_1..E_m, F_1..F_m, generic fiber, pi^*C_2.
  auto operator<=>(const CurveId&) const = default;

  // "C1tilde", "C2tilde", "E3", "F3tilde", "GenericFiber", "PullbackC2".
  std::string name() const;
  static std::optional<CurveId> parse(std::string_view text);
};

// Intersection theory on S for fixed (n, m).
class SurfaceModel {
 public:
  explicit SurfaceModel(SurfaceParams params);

  const SurfaceParams& params() const { return params_; }
  int n() const { return params_.n; }
  int m() const { return params_.m; }
  std::size_t rank() const { return static_cast<std::size_t>(params_.m) + 2; }

  // Intersection matrix of the basis: [[n,1],[1,0]] (+) (-I_m).
  Matrix gram() const;
  Matrix gram(const std::vector<CurveId>& curves) const;

  DivisorClass zero() const;
  DivisorClass class_of(CurveId id) const;  // throws std::out_of_range
  bool valid(CurveId id) const;

  // n a1 a2 + a1 b2 + a2 b1 - sum c1_i c2_i. Throws std::invalid_argument on
  // a length mismatch.
  Rat intersect(const DivisorClass& d1, const DivisorClass& d2) const;
  Rat self_intersection(const DivisorClass& d) const { return intersect(d, d); }

  // Nef iff D.E_i = c_i >= 0, D.F_i = a - c_i >= 0, D.C_1 = b >= 0,
  // D.C_2 = n a + b - sum c_i >= 0 and D.F = a >= 0 (the last one only
  // matters when m = 0).
  bool is_nef(const DivisorClass& d) const;

  // Curves that can carry a Zariski negative part:
  // C1, C2, E_1..E_m, F_1..F_m in canonical order.
  const std::vector<CurveId>& negative_curve_candidates() const { return candidates_; }

  DivisorClass anticanonical() const;
  DivisorClass boundary_class(const Angles& angles) const;
  DivisorClass log_anticanonical(const Angles& angles) const;

 private:
  SurfaceParams params_;
  std::vector<CurveId> candidates_;
};

SurfaceModel make_surface(SurfaceParams params);  // throws std::invalid_argument

// Ampleness of -K_{S,Delta_beta}: 0 < beta1 (< 2/n if n > 0) and
// 0 < beta2 (< 2/(m-n) if n < m).
bool ample_angle_range(const SurfaceParams& params, const Angles& angles);

// Human-readable description of the first violated ampleness bound, or
// nullopt if the angles are in range.
std::optional<std::string> ample_range_violation(const SurfaceParams& params, const Angles& angles);

// Angles above 1 are accepted; this flags them for diagnostics.
bool angles_exceed_one(const Angles& angles);

}  // namespace kee
