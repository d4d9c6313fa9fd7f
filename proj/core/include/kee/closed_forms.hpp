#pragma once

// Closed-form volume curves and expected vanishing orders for the
// log anticanonical class, used as reference values for the generic sweep.

#include <span>
#include <string>

#include "kee/picard.hpp"
#include "kee/volumes.hpp"

namespace kee {

enum class ClosedForm {
  C1,                // x -> vol(L - x C1)
  C2,                // x -> vol(L - x C2)
  ExcNAtLeastM,      // E_i, n >= m
  ExcNBelowMSteep,   // E_i, n < m, (n-1) beta1 >= (m-n) beta2
  ExcNBelowMShallow, // E_i, n >= 1, (n-1) beta1 < (m-n) beta2
  ExcNZero,          // E_i, n = 0
};

std::span<const ClosedForm> all_closed_forms();
std::string closed_form_name(ClosedForm form);
CurveId closed_form_curve(ClosedForm form);

// Hypotheses of the formula together with the ordering of its walls, so
// that every piece is a genuine (possibly empty) interval. Ample angles
// are assumed.
bool closed_form_applies(ClosedForm form, const SurfaceParams& params, const Angles& angles);

// Pieces with empty support annotations. Empty intervals are omitted, so
// no formula is ever evaluated on a degenerate chamber.
// Throws std::invalid_argument when the form does not apply.
PiecewiseQuadratic closed_form_volume(ClosedForm form, const SurfaceParams& params, const Angles& angles);

// 4(beta1 + beta2) - n beta1^2 + (n-m) beta2^2
Rat anticanonical_volume(const SurfaceParams& params, const Angles& angles);

// beta1^2 - beta2^2 - (n beta1^3 + (n-m) beta2^3) / 3
Rat futaki_bracket(const SurfaceParams& params, const Angles& angles);

Rat closed_form_s_c1(const SurfaceParams& params, const Angles& angles);
Rat closed_form_s_c2(const SurfaceParams& params, const Angles& angles);
Rat closed_form_s_exceptional(const SurfaceParams& params, const Angles& angles);

// A/S for C1, C2, E_i and F_i as closed rational functions of the angles.
struct RatioList {
  Rat c1;
  Rat c2;
  Rat exceptional;
  Rat fiber;
};
RatioList closed_form_ratios(const SurfaceParams& params, const Angles& angles);

}  // namespace kee
