#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kee/picard.hpp"
#include "kee/tvariety.hpp"

namespace kee {

enum class Status { KPolystable, NotKPolystable, OutsideAmpleRange };

std::string status_name(Status status);

// (beta1^2 + C1^2 beta1^3 / 3) - (beta2^2 + C2^2 beta2^3 / 3), with the
// self-intersections C1^2 = -n and C2^2 = n - m read off the surface.
Rat condition_bracket(const SurfaceParams& params, const Angles& angles);
int condition_sign(const SurfaceParams& params, const Angles& angles);

struct UpperBound {
  Rat delta;
  std::vector<CurveId> witnesses;                 // every curve attaining delta
  std::vector<std::pair<CurveId, Rat>> ratios;    // C1, C2, E_1..E_m
};

// min A/S over C1, C2, E_i from the volume sweep. Throws OutsideAmpleRange.
UpperBound delta_upper_bound(const SurfaceParams& params, const Angles& angles);

struct Verdict {
  Status status = Status::NotKPolystable;
  int condition_sign = 0;
  std::optional<Rat> delta;
  std::vector<Valuation> witnesses;
  std::optional<DeltaReport> report;
  std::vector<std::string> notes;
};

// Throws InconsistencyError when the two routes disagree or the cited
// hypotheses fail at a point where the condition holds.
Verdict k_polystable(const SurfaceParams& params, const Angles& angles);

struct ConditionPoint {
  // Set when an exact rational point on the condition locus was found.
  std::optional<Angles> exact;
  // Otherwise beta2 is fixed and condition_sign changes sign on
  // [beta1_lo, beta1_hi]; this is an interval certificate, not a point.
  Rat beta1_lo;
  Rat beta1_hi;
  Rat beta2;
};

// n = 0, m >= 1: beta2 = (3/m)(1 - s^2), beta1 = s beta2, needs 0 < s < 1
//                and ample angles.
// n = 0, m = 0:  beta1 = beta2 = s, needs s > 0.
// n > 0:         beta2 = s; bisects beta1 on (0, 2/n) down to `width`.
// Returns nullopt when no point exists for this s.
std::optional<ConditionPoint> rational_condition_point(const SurfaceParams& params, const Rat& s,
                                                       const Rat& width = rat(1, 1 << 20));

}  // namespace kee
