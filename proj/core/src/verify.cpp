#include "kee/verify.hpp"

#include <array>
#include <functional>
#include <sstream>

#include "kee/closed_forms.hpp"
#include "kee/sampling.hpp"
#include "kee/tvariety.hpp"
#include "kee/verdict.hpp"
#include "kee/volumes.hpp"
#include "kee/zariski.hpp"

namespace kee {
namespace {

constexpr std::array kSuites{Suite::Lemmas,         Suite::SValues, Suite::ZariskiOracle,
                             Suite::RouteAgreement, Suite::Halving, Suite::DeltaBound};

// Give up on a family after this many draws per requested sample.
constexpr std::size_t kDrawsPerSample = 2000;

std::string describe(const SurfaceParams& p, const Angles& a) {
  std::ostringstream out;
  out << "n=" << p.n << " m=" << p.m << " beta1=" << to_string(a.beta1) << " beta2=" << to_string(a.beta2);
  return out.str();
}

std::string describe(const SurfaceParams& p, const DivisorClass& d) {
  std::ostringstream out;
  out << "n=" << p.n << " m=" << p.m << " D=(" << to_string(d.a) << ", " << to_string(d.b) << ";";
  for (const auto& c : d.c) out << " " << to_string(c);
  out << ")";
  return out.str();
}

// Runs `check` on inputs accepted by `wanted` until `samples` of them were
// checked. `check` returns an empty string on success.
using Check = std::function<std::string(const SurfaceParams&, const Angles&)>;
using Filter = std::function<bool(const SurfaceParams&, const Angles&)>;

bool run_family(SuiteResult& result, Sampler& rng, std::size_t samples, const std::string& label,
                const Filter& wanted, const Check& check) {
  std::size_t done = 0;
  for (std::size_t draws = 0; done < samples; ++draws) {
    if (draws >= samples * kDrawsPerSample) {
      result.passed = false;
      result.counterexample = label + ": only " + std::to_string(done) + " applicable inputs drawn";
      return false;
    }
    SurfaceParams p = rng.params();
    Angles a = rng.ample_angles(p);
    if (!wanted(p, a)) continue;
    std::string why;
    try {
      why = check(p, a);
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    ++done;
    ++result.checked;
    if (!why.empty()) {
      result.passed = false;
      result.counterexample = label + ": " + describe(p, a) + ": " + why;
      return false;
    }
  }
  return true;
}

void lemmas(SuiteResult& r, Sampler& rng, std::size_t samples) {
  for (ClosedForm form : all_closed_forms()) {
    auto wanted = [form](const SurfaceParams& p, const Angles& a) { return closed_form_applies(form, p, a); };
    auto check = [form](const SurfaceParams& p, const Angles& a) -> std::string {
      PiecewiseQuadratic swept = volume_curve(closed_form_curve(form), p, a);
      if (!swept.same_function(closed_form_volume(form, p, a))) return "volume curve differs";
      return {};
    };
    if (!run_family(r, rng, samples, closed_form_name(form), wanted, check)) return;
  }
}

void s_values(SuiteResult& r, Sampler& rng, std::size_t samples) {
  auto any = [](const SurfaceParams&, const Angles&) { return true; };
  auto has_e = [](const SurfaceParams& p, const Angles&) { return p.m >= 1; };
  auto c1 = [](const SurfaceParams& p, const Angles& a) -> std::string {
    return expected_vanishing_order(CurveId::c1(), p, a) == closed_form_s_c1(p, a) ? "" : "S(C1) differs";
  };
  auto c2 = [](const SurfaceParams& p, const Angles& a) -> std::string {
    return expected_vanishing_order(CurveId::c2(), p, a) == closed_form_s_c2(p, a) ? "" : "S(C2) differs";
  };
  auto e = [](const SurfaceParams& p, const Angles& a) -> std::string {
    return expected_vanishing_order(CurveId::e(1), p, a) == closed_form_s_exceptional(p, a) ? "" : "S(E1) differs";
  };
  run_family(r, rng, samples, "s-c1", any, c1) && run_family(r, rng, samples, "s-c2", any, c2) &&
      run_family(r, rng, samples, "s-exceptional", has_e, e);
}

void zariski_oracle(SuiteResult& r, Sampler& rng, std::size_t samples) {
  for (std::size_t k = 0; k < samples;) {
    SurfaceParams p = rng.params(6, 4);
    SurfaceModel model(p);
    std::vector<CurveId> generators = model.negative_curve_candidates();
    generators.push_back(CurveId::generic_fiber());
    generators.push_back(CurveId::pullback_c2());
    DivisorClass d = model.zero();
    bool nonzero = false;
    for (const auto& g : generators) {
      // Half of the generators are left out so that sparse classes occur.
      if (rng.uniform_int(0, 1) == 0) continue;
      Rat t = rng.unit_coefficient() * rng.uniform_int(1, 3);
      if (t != 0) nonzero = true;
      d += t * model.class_of(g);
    }
    if (!nonzero) continue;
    ++k;
    ++r.checked;
    std::string why;
    try {
      ZariskiDecomposition fast = zariski_decompose(model, d);
      ZariskiDecomposition slow = zariski_decompose_bruteforce(model, d);
      certify_decomposition(model, d, slow);
      if (!(fast == slow)) why = "incremental and brute-force decompositions differ";
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    if (!why.empty()) {
      r.passed = false;
      r.counterexample = describe(p, d) + ": " + why;
      return;
    }
  }
}

void route_agreement(SuiteResult& r, Sampler& rng, std::size_t samples) {
  auto any = [](const SurfaceParams&, const Angles&) { return true; };
  auto check = [](const SurfaceParams& p, const Angles& a) -> std::string {
    DeltaReport report = delta_tvariety(p, a);
    RatioList closed = closed_form_ratios(p, a);
    auto swept = [&](CurveId c) -> Rat { return log_discrepancy(c, a) / expected_vanishing_order(c, p, a); };
    auto compare = [&](const Valuation& v, const Rat& sweep_value, const Rat* closed_value) -> std::string {
      const Rat& t = report.term(v);
      if (t != sweep_value) return v.name() + ": T-variety " + to_string(t) + " vs sweep " + to_string(sweep_value);
      if (closed_value && t != *closed_value) {
        return v.name() + ": T-variety " + to_string(t) + " vs closed form " + to_string(*closed_value);
      }
      return {};
    };
    std::string why = compare({ValuationKind::RayC1, 0}, swept(CurveId::c1()), &closed.c1);
    if (why.empty()) why = compare({ValuationKind::RayC2, 0}, swept(CurveId::c2()), &closed.c2);
    for (int i = 1; i <= p.m && why.empty(); ++i) {
      why = compare({ValuationKind::Exceptional, i}, swept(CurveId::e(i)), &closed.exceptional);
      if (why.empty()) why = compare({ValuationKind::FiberTilde, i}, swept(CurveId::f(i)), &closed.fiber);
    }
    if (why.empty()) {
      Rat generic = swept(CurveId::generic_fiber());
      why = compare({ValuationKind::GenericFiber, 0}, generic, nullptr);
      if (why.empty()) why = compare({ValuationKind::FiberP0, 0}, generic, nullptr);
    }
    return why;
  };
  run_family(r, rng, samples, "route-agreement", any, check);
}

void halving(SuiteResult& r, Sampler& rng, std::size_t samples) {
  auto any = [](const SurfaceParams&, const Angles&) { return true; };
  auto check = [](const SurfaceParams& p, const Angles& a) -> std::string {
    SurfaceModel model(p);
    DivisorClass l = model.log_anticanonical(a);
    FDivisorModel fdiv = build_fdivisor(p);
    SupportFunction h = anticanonical_support_function(fdiv, a);
    if (!(divisor_of(model, fdiv, h) == l)) return "support function does not round-trip";
    Rat v = vol_psi(legendre_dual(fdiv, h));
    Rat half = model.self_intersection(l) / 2;
    return v == half ? "" : "vol(Psi) " + to_string(v) + " vs " + to_string(half);
  };
  run_family(r, rng, samples, "halving", any, check);
}

void delta_bound(SuiteResult& r, Sampler& rng, std::size_t samples) {
  auto any = [](const SurfaceParams&, const Angles&) { return true; };
  auto check = [](const SurfaceParams& p, const Angles& a) -> std::string {
    Rat d = delta_tvariety(p, a).delta;
    if (d > 1) return "delta " + to_string(d) + " > 1";
    if (d == 1 && (condition_sign(p, a) != 0 || p.m == 1)) return "delta = 1 off the condition locus";
    return {};
  };
  run_family(r, rng, samples, "delta-bound", any, check);
}

}  // namespace

std::span<const Suite> all_suites() { return kSuites; }

std::string suite_name(Suite suite) {
  switch (suite) {
    case Suite::Lemmas:
      return "lemmas";
    case Suite::SValues:
      return "s-values";
    case Suite::ZariskiOracle:
      return "zariski-oracle";
    case Suite::RouteAgreement:
      return "route-agreement";
    case Suite::Halving:
      return "halving";
    case Suite::DeltaBound:
      return "delta-bound";
  }
  return "?";
}

std::optional<Suite> parse_suite(std::string_view name) {
  for (Suite s : kSuites) {
    if (suite_name(s) == name) return s;
  }
  return std::nullopt;
}

SuiteResult run_suite(Suite suite, std::size_t samples, std::uint64_t seed) {
  SuiteResult r;
  r.suite = suite;
  Sampler rng(seed);
  switch (suite) {
    case Suite::Lemmas:
      lemmas(r, rng, samples);
      break;
    case Suite::SValues:
      s_values(r, rng, samples);
      break;
    case Suite::ZariskiOracle:
      zariski_oracle(r, rng, samples);
      break;
    case Suite::RouteAgreement:
      route_agreement(r, rng, samples);
      break;
    case Suite::Halving:
      halving(r, rng, samples);
      break;
    case Suite::DeltaBound:
      delta_bound(r, rng, samples);
      break;
  }
  return r;
}

}  // namespace kee
