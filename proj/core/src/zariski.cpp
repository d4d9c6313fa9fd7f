#include "kee/zariski.hpp"

#include <algorithm>
#include <optional>
#include <string>

namespace kee {
namespace {

Affine pair_with(const SurfaceModel& model, const AffineClass& d, const DivisorClass& curve) {
  return {model.intersect(d.base, curve), model.intersect(d.slope, curve)};
}

// Nef test on x0^+. The generic-fiber functional D.F = a is included for the
// m = 0 case where it is not implied by the others.
bool nef_right_of(const SurfaceModel& model, const AffineClass& p, const Rat& x0) {
  for (const auto& id : model.negative_curve_candidates()) {
    if (pair_with(model, p, model.class_of(id)).sign_right_of(x0) < 0) return false;
  }
  return Affine{p.base.a, p.slope.a}.sign_right_of(x0) >= 0;
}

}  // namespace

int Affine::sign_right_of(const Rat& x) const {
  const int s = sign(at(x));
  return s != 0 ? s : sign(slope);
}

DivisorClass ZariskiDecomposition::negative_class(const SurfaceModel& model) const {
  DivisorClass n = model.zero();
  for (const auto& comp : negative) n += comp.coefficient * model.class_of(comp.curve);
  return n;
}

bool is_negative_definite(const SurfaceModel& model, std::span<const CurveId> curves) {
  return is_negative_definite(model.gram(std::vector<CurveId>(curves.begin(), curves.end())));
}

AffineDecomposition decompose_right_of(const SurfaceModel& model, const AffineClass& d, const Rat& x0) {
  const auto& candidates = model.negative_curve_candidates();
  std::vector<CurveId> support;
  std::vector<Affine> coeffs;
  AffineClass p = d;

  // Support only grows; there are finitely many candidates.
  for (std::size_t round = 0; round <= candidates.size(); ++round) {
    std::vector<CurveId> grown = support;
    for (const auto& id : candidates) {
      if (std::binary_search(support.begin(), support.end(), id)) continue;
      if (pair_with(model, p, model.class_of(id)).sign_right_of(x0) < 0) grown.push_back(id);
    }
    if (grown.size() == support.size()) break;
    std::sort(grown.begin(), grown.end());
    support = std::move(grown);

    const Matrix g = model.gram(support);
    if (!is_negative_definite(g)) {
      throw NotPseudoeffective("negative part would need a support without negative definite "
                               "intersection matrix");
    }
    std::vector<Rat> rhs_value, rhs_slope;
    for (const auto& id : support) {
      Affine v = pair_with(model, d, model.class_of(id));
      rhs_value.push_back(v.value);
      rhs_slope.push_back(v.slope);
    }
    auto a0 = solve(g, rhs_value);
    auto a1 = solve(g, rhs_slope);
    if (!a0 || !a1) throw InconsistencyError("negative definite Gram matrix reported singular");

    coeffs.clear();
    p = d;
    for (std::size_t j = 0; j < support.size(); ++j) {
      coeffs.push_back({(*a0)[j], (*a1)[j]});
      const DivisorClass cls = model.class_of(support[j]);
      p.base -= (*a0)[j] * cls;
      p.slope -= (*a1)[j] * cls;
    }
  }

  for (const auto& c : coeffs) {
    if (c.sign_right_of(x0) <= 0) throw NotPseudoeffective("negative part has a nonpositive coefficient");
  }
  if (!nef_right_of(model, p, x0)) throw NotPseudoeffective("no nef positive part on the candidate curves");
  return {std::move(support), std::move(coeffs), std::move(p)};
}

ZariskiDecomposition zariski_decompose(const SurfaceModel& model, const DivisorClass& d) {
  const AffineClass family{d, model.zero()};
  const Rat origin = 0;
  AffineDecomposition ad = decompose_right_of(model, family, origin);

  ZariskiDecomposition zd{ad.positive.base, {}};
  for (std::size_t j = 0; j < ad.support.size(); ++j) {
    zd.negative.push_back({ad.support[j], ad.coefficients[j].value});
  }
  certify_decomposition(model, d, zd);
  return zd;
}

ZariskiDecomposition zariski_decompose_bruteforce(const SurfaceModel& model, const DivisorClass& d) {
  const auto& candidates = model.negative_curve_candidates();
  if (model.m() > 8) throw std::invalid_argument("brute-force Zariski oracle limited to m <= 8");

  std::vector<DivisorClass> classes;
  for (const auto& id : candidates) classes.push_back(model.class_of(id));

  std::optional<ZariskiDecomposition> found;
  const std::size_t subsets = std::size_t{1} << candidates.size();
  for (std::size_t mask = 0; mask < subsets; ++mask) {
    std::vector<CurveId> support;
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < candidates.size(); ++k) {
      if ((mask >> k) & 1U) {
        support.push_back(candidates[k]);
        idx.push_back(k);
      }
    }
    const Matrix g = model.gram(support);
    if (!is_negative_definite(g)) continue;

    std::vector<Rat> rhs;
    for (auto k : idx) rhs.push_back(model.intersect(d, classes[k]));
    auto coeffs = solve(g, rhs);
    if (!coeffs) continue;
    if (std::any_of(coeffs->begin(), coeffs->end(), [](const Rat& a) { return a <= 0; })) continue;

    DivisorClass p = d;
    for (std::size_t j = 0; j < idx.size(); ++j) p -= (*coeffs)[j] * classes[idx[j]];
    if (!model.is_nef(p)) continue;

    ZariskiDecomposition zd{p, {}};
    for (std::size_t j = 0; j < support.size(); ++j) zd.negative.push_back({support[j], (*coeffs)[j]});
    if (found) throw InconsistencyError("two distinct supports satisfy the Zariski conditions");
    found = std::move(zd);
  }
  if (!found) throw NotPseudoeffective("no subset of candidate curves yields a Zariski decomposition");
  return *found;
}

void certify_decomposition(const SurfaceModel& model, const DivisorClass& d,
                           const ZariskiDecomposition& zd) {
  if (zd.positive + zd.negative_class(model) != d) throw InconsistencyError("P + N != D");
  if (!model.is_nef(zd.positive)) throw InconsistencyError("positive part is not nef");
  std::vector<CurveId> support;
  for (const auto& comp : zd.negative) {
    if (comp.coefficient <= 0) {
      throw InconsistencyError("nonpositive coefficient on " + comp.curve.name());
    }
    if (model.intersect(zd.positive, model.class_of(comp.curve)) != 0) {
      throw InconsistencyError("P is not orthogonal to " + comp.curve.name());
    }
    support.push_back(comp.curve);
  }
  if (!is_negative_definite(model.gram(support))) {
    throw InconsistencyError("support of the negative part is not negative definite");
  }
}

Rat volume(const SurfaceModel& model, const DivisorClass& d) {
  const auto zd = zariski_decompose(model, d);
  return model.self_intersection(zd.positive);
}

}  // namespace kee
