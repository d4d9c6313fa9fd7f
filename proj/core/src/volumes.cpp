#include "kee/volumes.hpp"

#include <algorithm>
#include <optional>

#include "kee/zariski.hpp"

namespace kee {
namespace {

constexpr int kMaxChambers = 64;

std::optional<Rat> first_root_after(const Rat& x, const std::optional<Rat>& bound, const Quadratic& q) {
  // Smallest root r of q with x < r (<= bound when bounded). q > 0 just
  // right of x by construction.
  auto in_range = [&](const Rat& r) { return r > x && (!bound || r <= *bound); };
  if (q.q2 == 0) {
    if (q.q1 == 0) return std::nullopt;
    Rat r = -q.q0 / q.q1;
    return in_range(r) ? std::optional<Rat>(r) : std::nullopt;
  }
  const Rat disc = q.q1 * q.q1 - 4 * q.q0 * q.q2;
  if (disc < 0) return std::nullopt;
  if (auto s = exact_sqrt(disc)) {
    Rat r1 = (-q.q1 - *s) / (2 * q.q2);
    Rat r2 = (-q.q1 + *s) / (2 * q.q2);
    if (r1 > r2) std::swap(r1, r2);
    if (in_range(r1)) return r1;
    if (in_range(r2)) return r2;
    return std::nullopt;
  }
  // Irrational roots: only an error if one lies in the chamber.
  const Rat vertex = -q.q1 / (2 * q.q2);
  bool root_inside;
  if (q.q2 > 0) {
    root_inside = bound ? (q(*bound) < 0 || (vertex > x && vertex < *bound)) : vertex > x;
  } else {
    root_inside = bound ? q(*bound) < 0 : true;
  }
  if (root_inside) throw IrrationalThreshold("volume vanishes at an irrational point");
  return std::nullopt;
}

}  // namespace

Rat Quadratic::integral(const Rat& lo, const Rat& hi) const {
  auto antiderivative = [&](const Rat& x) -> Rat { return x * (q0 + x * (q1 / 2 + x * q2 / 3)); };
  return antiderivative(hi) - antiderivative(lo);
}

Quadratic operator+(const Quadratic& p, const Quadratic& q) { return {p.q0 + q.q0, p.q1 + q.q1, p.q2 + q.q2}; }
Quadratic operator*(const Rat& t, const Quadratic& q) { return {t * q.q0, t * q.q1, t * q.q2}; }
Quadratic product_of_linear(const Rat& u0, const Rat& u1, const Rat& v0, const Rat& v1) {
  return {u0 * v0, u0 * v1 + u1 * v0, u1 * v1};
}

Rat PiecewiseQuadratic::operator()(const Rat& x) const {
  for (const auto& piece : pieces_) {
    if (x >= piece.lo && x <= piece.hi) return piece.volume(x);
  }
  throw std::out_of_range("PiecewiseQuadratic: argument outside [0, tau]");
}

Rat PiecewiseQuadratic::integral() const {
  Rat total = 0;
  for (const auto& piece : pieces_) total += piece.volume.integral(piece.lo, piece.hi);
  return total;
}

PiecewiseQuadratic PiecewiseQuadratic::normalized() const {
  std::vector<Chamber> out;
  for (const auto& piece : pieces_) {
    if (piece.lo == piece.hi) continue;
    if (!out.empty() && out.back().volume == piece.volume && out.back().hi == piece.lo) {
      out.back().hi = piece.hi;
      continue;
    }
    out.push_back(piece);
  }
  return PiecewiseQuadratic(std::move(out));
}

bool PiecewiseQuadratic::same_function(const PiecewiseQuadratic& other) const {
  const auto a = normalized().pieces();
  const auto b = other.normalized().pieces();
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].lo != b[i].lo || a[i].hi != b[i].hi || a[i].volume != b[i].volume) return false;
  }
  return true;
}

PiecewiseQuadratic sweep_volume(const SurfaceModel& model, const DivisorClass& l, const DivisorClass& e) {
  const AffineClass family{l, -e};
  std::vector<Chamber> pieces;
  Rat x = 0;

  for (int guard = 0; guard < kMaxChambers; ++guard) {
    const AffineDecomposition dec = decompose_right_of(model, family, x);
    const AffineClass& p = dec.positive;
    const Quadratic q{model.intersect(p.base, p.base), 2 * model.intersect(p.base, p.slope),
                      model.intersect(p.slope, p.slope)};

    // Next wall: a candidate outside the support whose pairing with P drops
    // to zero, or a negative-part coefficient reaching zero.
    std::optional<Rat> wall;
    auto consider = [&](const Affine& f) {
      if (f.slope >= 0) return;
      Rat root = -f.value / f.slope;
      if (root > x && (!wall || root < *wall)) wall = root;
    };
    for (const auto& id : model.negative_curve_candidates()) {
      if (std::binary_search(dec.support.begin(), dec.support.end(), id)) continue;
      const DivisorClass cls = model.class_of(id);
      consider({model.intersect(p.base, cls), model.intersect(p.slope, cls)});
    }
    for (const auto& coeff : dec.coefficients) consider(coeff);
    consider({p.base.a, p.slope.a});

    if (auto end = first_root_after(x, wall, q)) {
      pieces.push_back({x, *end, q, dec.support});
      return PiecewiseQuadratic(std::move(pieces));
    }
    if (!wall) throw InconsistencyError("volume sweep found neither a wall nor a threshold");
    pieces.push_back({x, *wall, q, dec.support});
    x = *wall;
  }
  throw InconsistencyError("volume sweep exceeded the chamber limit");
}

PiecewiseQuadratic volume_curve(CurveId e, const SurfaceParams& params, const Angles& angles) {
  if (auto why = ample_range_violation(params, angles)) throw OutsideAmpleRange(*why);
  const SurfaceModel model(params);
  return sweep_volume(model, model.log_anticanonical(angles), model.class_of(e));
}

Rat threshold(CurveId e, const SurfaceParams& params, const Angles& angles) {
  return volume_curve(e, params, angles).threshold();
}

Rat expected_vanishing_order(CurveId e, const SurfaceParams& params, const Angles& angles) {
  const auto curve = volume_curve(e, params, angles);
  const SurfaceModel model(params);
  return curve.integral() / model.self_intersection(model.log_anticanonical(angles));
}

Rat log_discrepancy(CurveId e, const Angles& angles) {
  switch (e.kind) {
    case CurveKind::C1Tilde: return angles.beta1;
    case CurveKind::C2Tilde: return angles.beta2;
    default: return 1;
  }
}

}  // namespace kee
