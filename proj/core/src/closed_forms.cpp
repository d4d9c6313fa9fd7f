#include "kee/closed_forms.hpp"

#include <array>
#include <stdexcept>

namespace kee {
namespace {

constexpr std::array kForms{ClosedForm::C1, ClosedForm::C2, ClosedForm::ExcNAtLeastM,
                            ClosedForm::ExcNBelowMSteep, ClosedForm::ExcNBelowMShallow, ClosedForm::ExcNZero};

// (c0 + c1 x)^2
Quadratic square(const Rat& c0, const Rat& c1) { return product_of_linear(c0, c1, c0, c1); }

class Builder {
 public:
  void add(const Rat& lo, const Rat& hi, const Quadratic& q) {
    if (lo < hi) pieces_.push_back({lo, hi, q, {}});
  }
  // Formula only built when the interval is nonempty (it may divide by zero otherwise).
  template <class F>
  void add_lazy(const Rat& lo, const Rat& hi, F&& make) {
    if (lo < hi) pieces_.push_back({lo, hi, make(), {}});
  }
  PiecewiseQuadratic done() && { return PiecewiseQuadratic(std::move(pieces_)); }

 private:
  std::vector<Chamber> pieces_;
};

}  // namespace

std::span<const ClosedForm> all_closed_forms() { return kForms; }

std::string closed_form_name(ClosedForm form) {
  switch (form) {
    case ClosedForm::C1:
      return "c1";
    case ClosedForm::C2:
      return "c2";
    case ClosedForm::ExcNAtLeastM:
      return "exc-n-ge-m";
    case ClosedForm::ExcNBelowMSteep:
      return "exc-n-lt-m-steep";
    case ClosedForm::ExcNBelowMShallow:
      return "exc-n-lt-m-shallow";
    case ClosedForm::ExcNZero:
      return "exc-n-zero";
  }
  return "?";
}

CurveId closed_form_curve(ClosedForm form) {
  switch (form) {
    case ClosedForm::C1:
      return CurveId::c1();
    case ClosedForm::C2:
      return CurveId::c2();
    default:
      return CurveId::e(1);
  }
}

bool closed_form_applies(ClosedForm form, const SurfaceParams& params, const Angles& angles) {
  const int n = params.n;
  const int m = params.m;
  const Rat& b1 = angles.beta1;
  const Rat& b2 = angles.beta2;
  switch (form) {
    case ClosedForm::C1:
    case ClosedForm::C2:
      return true;
    case ClosedForm::ExcNAtLeastM:
      return m >= 1 && n >= m;
    case ClosedForm::ExcNBelowMSteep:
      return m >= 1 && n < m && (n - 1) * b1 >= (m - n) * b2;
    case ClosedForm::ExcNBelowMShallow:
      return m >= 1 && n >= 1 && (n - 1) * b1 < (m - n) * b2 && b1 <= 2 - (m - n) * b2;
    case ClosedForm::ExcNZero:
      return m >= 1 && n == 0 && b1 <= 2 - m * b2;
  }
  return false;
}

Rat anticanonical_volume(const SurfaceParams& params, const Angles& angles) {
  const Rat& b1 = angles.beta1;
  const Rat& b2 = angles.beta2;
  return 4 * (b1 + b2) - params.n * b1 * b1 + (params.n - params.m) * b2 * b2;
}

Rat futaki_bracket(const SurfaceParams& params, const Angles& angles) {
  const Rat& b1 = angles.beta1;
  const Rat& b2 = angles.beta2;
  return b1 * b1 - b2 * b2 - (params.n * b1 * b1 * b1 + (params.n - params.m) * b2 * b2 * b2) / 3;
}

PiecewiseQuadratic closed_form_volume(ClosedForm form, const SurfaceParams& params, const Angles& angles) {
  if (!closed_form_applies(form, params, angles)) {
    throw std::invalid_argument("closed form " + closed_form_name(form) + " does not apply");
  }
  const Rat n = params.n;
  const Rat m = params.m;
  const Rat& b1 = angles.beta1;
  const Rat& b2 = angles.beta2;
  const Rat vol = anticanonical_volume(params, angles);
  const Rat t = b1 + b2;
  Builder out;

  // First two chambers shared by every E_i formula.
  const Quadratic e_first{vol, -2 * b2, -1};
  const Quadratic e_second{vol + b1 * b1, -2 * t, 0};
  // (n-1)(b2 + (2-x)/(n-1))^2 - (m-1) b2^2
  auto e_third_high = [&] {
    return Rat(1 / (n - 1)) * square((n - 1) * b2 + 2, -1) + Quadratic{-(m - 1) * b2 * b2, 0, 0};
  };
  // (4 + (m-n)(4-(n-1)b1)b1 - 2(2+(m-n)b1)x + x^2) / (m-n)
  auto e_third_low = [&] {
    return Rat(1 / (m - n)) * Quadratic{4 + (m - n) * (4 - (n - 1) * b1) * b1, -2 * (2 + (m - n) * b1), 1};
  };
  // (m-1) / ((m-n)(n-1)) (x-2)^2
  auto e_last_vanishing = [&] { return Rat((m - 1) / ((m - n) * (n - 1))) * square(-2, 1); };

  switch (form) {
    case ClosedForm::C1:
      out.add(0, b1, Quadratic{vol, -2 * (2 - n * b1), -n});
      // (t - x)(4 - (m-n)(x - b1 + b2))
      out.add(b1, t, product_of_linear(t, -1, 4 + (m - n) * (b1 - b2), -(m - n)));
      break;
    case ClosedForm::C2:
      out.add(0, b2, Quadratic{vol, -2 * (2 - (m - n) * b2), -(m - n)});
      // (t - x)(4 - n(x + b1 - b2))
      out.add(b2, t, product_of_linear(t, -1, 4 - n * (b1 - b2), -n));
      break;
    case ClosedForm::ExcNAtLeastM:
      out.add(0, b1, e_first);
      out.add(b1, 2 - (n - 1) * b1, e_second);
      out.add_lazy(2 - (n - 1) * b1, 2, e_third_high);
      out.add_lazy(2, 2 + (n - m) * b2, [&] { return Rat(1 / (n - m)) * square(2 + (n - m) * b2, -1); });
      break;
    case ClosedForm::ExcNBelowMSteep:
      out.add(0, b1, e_first);
      out.add(b1, 2 - (n - 1) * b1, e_second);
      out.add_lazy(2 - (n - 1) * b1, 2 - (m - n) * b2, e_third_high);
      out.add_lazy(2 - (m - n) * b2, 2, e_last_vanishing);
      break;
    case ClosedForm::ExcNBelowMShallow:
      out.add(0, b1, e_first);
      out.add(b1, 2 - (m - n) * b2, e_second);
      out.add_lazy(2 - (m - n) * b2, 2 - (n - 1) * b1, e_third_low);
      out.add_lazy(2 - (n - 1) * b1, 2, e_last_vanishing);
      break;
    case ClosedForm::ExcNZero:
      out.add(0, b1, e_first);
      out.add(b1, 2 - m * b2, e_second);
      out.add_lazy(2 - m * b2, 2, [&] { return Rat(1 / m) * Quadratic{4 + m * (4 + b1) * b1, -2 * (2 + m * b1), 1}; });
      out.add(2, 2 + b1, square(2 + b1, -1));
      break;
  }
  return std::move(out).done();
}

Rat closed_form_s_c1(const SurfaceParams& params, const Angles& angles) {
  return angles.beta1 - 2 * futaki_bracket(params, angles) / anticanonical_volume(params, angles);
}

Rat closed_form_s_c2(const SurfaceParams& params, const Angles& angles) {
  return angles.beta2 + 2 * futaki_bracket(params, angles) / anticanonical_volume(params, angles);
}

Rat closed_form_s_exceptional(const SurfaceParams& params, const Angles& angles) {
  const Rat n = params.n;
  const Rat m = params.m;
  const Rat& b1 = angles.beta1;
  const Rat& b2 = angles.beta2;
  Rat bracket = -(n - 2) * b1 * b1 + (n - m) * b2 * b2 + (n * (n - 2) * b1 * b1 * b1 + (n - m) * (n - m) * b2 * b2 * b2) / 3;
  return 1 + bracket / anticanonical_volume(params, angles);
}

RatioList closed_form_ratios(const SurfaceParams& params, const Angles& angles) {
  const Rat n = params.n;
  const Rat m = params.m;
  const Rat& b1 = angles.beta1;
  const Rat& b2 = angles.beta2;
  const Rat vol = anticanonical_volume(params, angles);
  RatioList r;
  r.c1 = b1 / closed_form_s_c1(params, angles);
  r.c2 = b2 / closed_form_s_c2(params, angles);
  r.exceptional = 1 / closed_form_s_exceptional(params, angles);
  Rat fiber = -n * b1 * b1 + (n - m + 2) * b2 * b2 + (n * n * b1 * b1 * b1 + (n - m + 2) * (n - m) * b2 * b2 * b2) / 3;
  r.fiber = 1 / (1 + fiber / vol);
  return r;
}

}  // namespace kee
