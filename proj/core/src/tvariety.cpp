#include "kee/tvariety.hpp"

#include <algorithm>
#include <stdexcept>

namespace kee {

std::string Valuation::name() const {
  switch (kind) {
    case ValuationKind::RayC1:
      return "C1tilde";
    case ValuationKind::RayC2:
      return "C2tilde";
    case ValuationKind::Exceptional:
      return "E" + std::to_string(index);
    case ValuationKind::FiberTilde:
      return "F" + std::to_string(index) + "tilde";
    case ValuationKind::FiberP0:
      return "Fiber_p0";
    case ValuationKind::GenericFiber:
      return "GenericFiber";
  }
  return "?";
}

CurveId Valuation::curve() const {
  switch (kind) {
    case ValuationKind::RayC1:
      return CurveId::c1();
    case ValuationKind::RayC2:
      return CurveId::c2();
    case ValuationKind::Exceptional:
      return CurveId::e(index);
    case ValuationKind::FiberTilde:
      return CurveId::f(index);
    case ValuationKind::FiberP0:
    case ValuationKind::GenericFiber:
      return CurveId::generic_fiber();
  }
  return CurveId::generic_fiber();
}

Valuation FDivisorModel::valuation_of(const Slice& slice, const Rat& vertex) const {
  switch (slice.kind) {
    case SliceKind::P0:
      return {ValuationKind::FiberP0, 0};
    case SliceKind::Trivial:
      return {ValuationKind::GenericFiber, 0};
    case SliceKind::Marked:
      if (vertex == -1) return {ValuationKind::Exceptional, slice.index};
      if (vertex == 0) return {ValuationKind::FiberTilde, slice.index};
      break;
  }
  throw std::invalid_argument("no vertex " + to_string(vertex) + " on this slice");
}

int vertex_multiplicity(const Rat& v) {
  // The denominator of a canonical rational is the smallest such mu.
  if (!v.get_den().fits_sint_p()) throw std::overflow_error("vertex denominator too large");
  return static_cast<int>(v.get_den().get_si());
}

FDivisorModel build_fdivisor(const SurfaceParams& params) {
  if (params.n < 0 || params.m < 0) throw std::invalid_argument("n and m must be nonnegative");
  FDivisorModel fdiv;
  fdiv.params = params;
  fdiv.slices.push_back({SliceKind::P0, 0, {Rat(params.n)}});
  for (int i = 1; i <= params.m; ++i) fdiv.slices.push_back({SliceKind::Marked, i, {Rat(-1), Rat(0)}});
  fdiv.trivial = {SliceKind::Trivial, 0, {Rat(0)}};
  return fdiv;
}

Rat SupportFunction::linear_part(const Rat& v) const {
  return v < 0 ? Rat(-at_negative_ray * v) : Rat(at_positive_ray * v);
}

Rat SupportFunction::evaluate(const SliceFunction& slice, const Rat& v) const {
  const auto& xs = slice.vertices;
  const auto& ys = slice.values;
  if (xs.empty()) return linear_part(v);
  if (v <= xs.front()) return ys.front() + linear_part(v - xs.front());
  if (v >= xs.back()) return ys.back() + linear_part(v - xs.back());
  for (std::size_t k = 0; k + 1 < xs.size(); ++k) {
    if (v <= xs[k + 1]) {
      Rat t = (v - xs[k]) / (xs[k + 1] - xs[k]);
      return ys[k] + t * (ys[k + 1] - ys[k]);
    }
  }
  return ys.back();
}

namespace {

SliceFunction slice_function(const Slice& slice, const std::vector<Rat>& coeffs) {
  if (coeffs.size() != slice.vertices.size()) throw std::invalid_argument("coefficient count does not match vertices");
  SliceFunction f;
  f.vertices = slice.vertices;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    f.values.push_back(-coeffs[k] / vertex_multiplicity(slice.vertices[k]));
  }
  return f;
}

void require_ample(const SurfaceParams& params, const Angles& angles) {
  if (auto why = ample_range_violation(params, angles)) throw OutsideAmpleRange(*why);
}

}  // namespace

SupportFunction support_function_of(const FDivisorModel& fdiv, const TInvariantDivisor& divisor) {
  if (divisor.vertex.size() != fdiv.slices.size()) throw std::invalid_argument("slice count mismatch");
  SupportFunction h;
  h.at_positive_ray = -divisor.c1;
  h.at_negative_ray = -divisor.c2;
  for (std::size_t s = 0; s < fdiv.slices.size(); ++s) h.slices.push_back(slice_function(fdiv.slices[s], divisor.vertex[s]));
  h.trivial = slice_function(fdiv.trivial, divisor.trivial_vertex);
  return h;
}

SupportFunction anticanonical_support_function(const FDivisorModel& fdiv, const Angles& angles) {
  TInvariantDivisor d;
  d.c1 = angles.beta1;
  d.c2 = angles.beta2;
  for (const auto& slice : fdiv.slices) {
    d.vertex.emplace_back(slice.vertices.size(), Rat(0));
    if (slice.kind == SliceKind::P0) d.vertex.back().front() = 2;
  }
  d.trivial_vertex.assign(fdiv.trivial.vertices.size(), Rat(0));
  return support_function_of(fdiv, d);
}

DivisorClass divisor_of(const SurfaceModel& model, const FDivisorModel& fdiv, const SupportFunction& h) {
  if (h.slices.size() != fdiv.slices.size()) throw std::invalid_argument("slice count mismatch");
  DivisorClass out = model.zero();
  out += -h.at_positive_ray * model.class_of(CurveId::c1());
  out += -h.at_negative_ray * model.class_of(CurveId::c2());
  auto add_slice = [&](const Slice& slice, const SliceFunction& f) {
    for (std::size_t k = 0; k < slice.vertices.size(); ++k) {
      Rat coeff = -vertex_multiplicity(slice.vertices[k]) * f.values[k];
      out += coeff * model.class_of(fdiv.valuation_of(slice, slice.vertices[k]).curve());
    }
  };
  for (std::size_t s = 0; s < fdiv.slices.size(); ++s) add_slice(fdiv.slices[s], h.slices[s]);
  add_slice(fdiv.trivial, h.trivial);
  return out;
}

const PLFunction& DualData::psi(SliceKind kind) const {
  switch (kind) {
    case SliceKind::P0:
      return psi_p0;
    case SliceKind::Marked:
      if (marked_count == 0) throw std::invalid_argument("no marked points when m = 0");
      return psi_marked;
    case SliceKind::Trivial:
      return psi_trivial;
  }
  return psi_trivial;
}

namespace {

PLFunction dual_of(const Rat& lo, const Rat& hi, const SliceFunction& f) {
  std::vector<AffineMap> maps;
  for (std::size_t k = 0; k < f.vertices.size(); ++k) maps.push_back({f.vertices[k], -f.values[k]});
  return PLFunction::lower_envelope(lo, hi, maps);
}

}  // namespace

DualData legendre_dual(const FDivisorModel& fdiv, const SupportFunction& h) {
  // u in the moment interval iff u * n_rho >= h_t(n_rho) for both rays.
  Rat lo = h.at_positive_ray;
  Rat hi = -h.at_negative_ray;
  if (!(lo < hi)) throw std::invalid_argument("empty moment interval");
  DualData d{lo, hi, PLFunction::affine(lo, hi, {0, 0}), PLFunction::affine(lo, hi, {0, 0}),
             PLFunction::affine(lo, hi, {0, 0}), PLFunction::affine(lo, hi, {0, 0}), 0};
  d.psi_trivial = dual_of(lo, hi, h.trivial);
  PLFunction deg = d.psi_trivial;
  bool have_marked = false;
  for (std::size_t s = 0; s < fdiv.slices.size(); ++s) {
    PLFunction psi = dual_of(lo, hi, h.slices[s]);
    deg = deg + psi;
    if (fdiv.slices[s].kind == SliceKind::P0) {
      d.psi_p0 = psi;
    } else {
      // All marked slices share the same data; keep one representative.
      if (have_marked && !(psi == d.psi_marked)) throw InconsistencyError("marked slices differ");
      d.psi_marked = psi;
      have_marked = true;
      ++d.marked_count;
    }
  }
  d.deg_psi = deg.simplified();
  return d;
}

Rat vol_psi(const DualData& d) { return d.deg_psi.integral(); }

Rat barycenter(const DualData& d) { return d.deg_psi.first_moment() / vol_psi(d); }

Rat bc_p(const DualData& d, SliceKind point) {
  const PLFunction& psi = d.psi(point);
  Rat num = integrate_product(d.deg_psi, d.deg_psi) / 2 - integrate_product(psi, d.deg_psi);
  return num / vol_psi(d);
}

const Rat& DeltaReport::term(const Valuation& v) const {
  for (const auto& t : terms) {
    if (t.valuation == v) return t.value;
  }
  throw std::out_of_range("no term for " + v.name());
}

DeltaReport delta_tvariety(const SurfaceParams& params, const Angles& angles) {
  require_ample(params, angles);
  FDivisorModel fdiv = build_fdivisor(params);
  SupportFunction h = anticanonical_support_function(fdiv, angles);
  DualData d = legendre_dual(fdiv, h);
  Rat bc = barycenter(d);

  DeltaReport report;
  // Boundary rays: A = beta, S = <bc, n_rho> - h_t(n_rho).
  report.terms.push_back({{ValuationKind::RayC1, 0}, angles.beta1 / (bc - h.at_positive_ray)});
  report.terms.push_back({{ValuationKind::RayC2, 0}, angles.beta2 / (-bc - h.at_negative_ray)});

  // Vertical divisors: A = mu(v), S = mu(v) (bc_p + <bc, v> - h_p(v)).
  auto vertex_term = [&](const Slice& slice, const SliceFunction& f, std::size_t k) {
    const Rat& v = slice.vertices[k];
    int mu = vertex_multiplicity(v);
    if (mu != 1) throw InconsistencyError("vertex " + to_string(v) + " has multiplicity " + std::to_string(mu));
    Rat s = mu * (bc_p(d, slice.kind) + bc * v - f.values[k]);
    return ValuationTerm{fdiv.valuation_of(slice, v), Rat(mu) / s};
  };
  for (std::size_t s = 0; s < fdiv.slices.size(); ++s) {
    for (std::size_t k = 0; k < fdiv.slices[s].vertices.size(); ++k) {
      report.terms.push_back(vertex_term(fdiv.slices[s], h.slices[s], k));
    }
  }
  report.terms.push_back(vertex_term(fdiv.trivial, h.trivial, 0));
  std::sort(report.terms.begin(), report.terms.end(),
            [](const ValuationTerm& x, const ValuationTerm& y) { return x.valuation < y.valuation; });

  report.delta = report.terms.front().value;
  for (const auto& t : report.terms) report.delta = std::min(report.delta, t.value);
  for (const auto& t : report.terms) {
    if (t.value == report.delta) report.witnesses.push_back(t.valuation);
  }
  return report;
}

int futaki_vanishes(const SurfaceParams& params, const Angles& angles) {
  require_ample(params, angles);
  FDivisorModel fdiv = build_fdivisor(params);
  DualData d = legendre_dual(fdiv, anticanonical_support_function(fdiv, angles));
  return -sign(d.deg_psi.first_moment());
}

}  // namespace kee
