#include "kee/verdict.hpp"

#include <algorithm>

#include "kee/volumes.hpp"

namespace kee {

std::string status_name(Status status) {
  switch (status) {
    case Status::KPolystable:
      return "KPolystable";
    case Status::NotKPolystable:
      return "NotKPolystable";
    case Status::OutsideAmpleRange:
      return "OutsideAmpleRange";
  }
  return "?";
}

Rat condition_bracket(const SurfaceParams& params, const Angles& angles) {
  SurfaceModel model(params);
  const Rat c1sq = model.self_intersection(model.class_of(CurveId::c1()));
  const Rat c2sq = model.self_intersection(model.class_of(CurveId::c2()));
  const Rat& b1 = angles.beta1;
  const Rat& b2 = angles.beta2;
  return (b1 * b1 + c1sq * b1 * b1 * b1 / 3) - (b2 * b2 + c2sq * b2 * b2 * b2 / 3);
}

int condition_sign(const SurfaceParams& params, const Angles& angles) {
  return sign(condition_bracket(params, angles));
}

UpperBound delta_upper_bound(const SurfaceParams& params, const Angles& angles) {
  if (auto why = ample_range_violation(params, angles)) throw OutsideAmpleRange(*why);
  std::vector<CurveId> curves{CurveId::c1(), CurveId::c2()};
  for (int i = 1; i <= params.m; ++i) curves.push_back(CurveId::e(i));

  UpperBound out;
  for (const auto& c : curves) {
    out.ratios.emplace_back(c, log_discrepancy(c, angles) / expected_vanishing_order(c, params, angles));
  }
  out.delta = out.ratios.front().second;
  for (const auto& [c, r] : out.ratios) out.delta = std::min(out.delta, r);
  for (const auto& [c, r] : out.ratios) {
    if (r == out.delta) out.witnesses.push_back(c);
  }
  return out;
}

namespace {

bool is_vertical(const Valuation& v) {
  return v.kind != ValuationKind::RayC1 && v.kind != ValuationKind::RayC2;
}

// Hypotheses under which delta = 1 at a condition point means polystable.
std::optional<std::string> polystable_hypothesis_failure(const SurfaceParams& params, const DeltaReport& report) {
  for (const auto& t : report.terms) {
    const bool ray = !is_vertical(t.valuation);
    bool ok = true;
    if (params.m >= 3) {
      ok = ray ? t.value == 1 : t.value > 1;
    } else if (params.m == 2) {
      ok = (t.valuation.kind == ValuationKind::FiberP0 || t.valuation.kind == ValuationKind::GenericFiber)
               ? t.value >= 1
               : t.value == 1;
    } else if (params.m == 0) {
      ok = t.value == 1;
    }
    if (!ok) return t.valuation.name() + " has ratio " + to_string(t.value);
  }
  return std::nullopt;
}

}  // namespace

Verdict k_polystable(const SurfaceParams& params, const Angles& angles) {
  Verdict v;
  v.condition_sign = condition_sign(params, angles);
  if (auto why = ample_range_violation(params, angles)) {
    v.status = Status::OutsideAmpleRange;
    v.notes.push_back(*why);
    return v;
  }

  const int futaki = futaki_vanishes(params, angles);
  if (futaki != v.condition_sign) {
    throw InconsistencyError("condition sign " + std::to_string(v.condition_sign) + " but barycenter sign " +
                             std::to_string(futaki));
  }

  DeltaReport report = delta_tvariety(params, angles);
  v.delta = report.delta;
  v.witnesses = report.witnesses;
  if (report.delta > 1) throw InconsistencyError("delta " + to_string(report.delta) + " exceeds 1");

  if (params.m == 1) {
    if (!(report.delta < 1)) throw InconsistencyError("m = 1 but delta = " + to_string(report.delta));
    v.status = Status::NotKPolystable;
    v.notes.push_back("m = 1 exclusion");
    if (v.condition_sign != 0) v.notes.push_back("condition bracket " + to_string(condition_bracket(params, angles)));
  } else if (v.condition_sign != 0) {
    v.status = Status::NotKPolystable;
    v.notes.push_back("condition bracket " + to_string(condition_bracket(params, angles)));
  } else {
    if (report.delta != 1) throw InconsistencyError("condition holds but delta = " + to_string(report.delta));
    if (auto failure = polystable_hypothesis_failure(params, report)) {
      throw InconsistencyError("polystability hypothesis fails: " + *failure);
    }
    v.status = Status::KPolystable;
  }
  v.report = std::move(report);
  return v;
}

std::optional<ConditionPoint> rational_condition_point(const SurfaceParams& params, const Rat& s, const Rat& width) {
  const int n = params.n;
  const int m = params.m;
  if (n == 0) {
    Angles a;
    if (m == 0) {
      if (s <= 0) return std::nullopt;
      a = {s, s};
    } else {
      if (s <= 0 || s >= 1) return std::nullopt;
      a.beta2 = rat(3, m) * (1 - s * s);
      a.beta1 = s * a.beta2;
    }
    if (!ample_angle_range(params, a)) return std::nullopt;
    return ConditionPoint{a, a.beta1, a.beta1, a.beta2};
  }

  // beta1 -> bracket is increasing on (0, 2/n): derivative beta1 (2 - n beta1).
  if (!ample_angle_range(params, {rat(1, 2 * n), s})) return std::nullopt;
  Rat lo = 0;
  Rat hi = rat(2, n);
  auto g = [&](const Rat& b1) { return condition_bracket(params, {b1, s}); };
  if (g(lo) >= 0 || g(hi) <= 0) return std::nullopt;
  while (hi - lo > width) {
    Rat mid = (lo + hi) / 2;
    int sg = sign(g(mid));
    if (sg == 0) {
      Angles a{mid, s};
      return ConditionPoint{a, mid, mid, s};
    }
    (sg < 0 ? lo : hi) = mid;
  }
  return ConditionPoint{std::nullopt, lo, hi, s};
}

}  // namespace kee
