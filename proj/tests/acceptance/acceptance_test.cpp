// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "kee/sampling.hpp"
#include "kee/tvariety.hpp"
#include "kee/verdict.hpp"
#include "kee/verify.hpp"
#include "kee/volumes.hpp"
#include "kee/zariski.hpp"
#include "support/oracles.hpp"

using kee::Angles;
using kee::CurveId;
using kee::Rat;
using kee::rat;
using kee::SurfaceModel;
using kee::SurfaceParams;

namespace {

constexpr std::uint64_t kSeed = 20240601;

struct Outcome {
  bool ok = true;
  std::string detail;
};

Outcome suite(kee::Suite s, std::size_t samples) {
  kee::SuiteResult r = kee::run_suite(s, samples, kSeed);
  Outcome o{r.passed, std::to_string(r.checked) + " checks"};
  if (r.counterexample) o.detail += "; " + *r.counterexample;
  return o;
}

Outcome lemma_regression() {
  auto start = std::chrono::steady_clock::now();
  Outcome o = suite(kee::Suite::Lemmas, 200);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  char buf[64];
  std::snprintf(buf, sizeof buf, ", %.2f s", secs);
  o.detail += buf;
  if (secs >= 60) {
    o.ok = false;
    o.detail += " (over 60 s)";
  }
  return o;
}

Outcome s_values() {
  kee::Sampler rng(kSeed);
  int checked = 0;
  for (int k = 0; k < 600; ++k) {
    SurfaceParams p = rng.params();
    Angles a = rng.ample_angles(p);
    const Rat &b1 = a.beta1, &b2 = a.beta2;
    bool ok = kee::expected_vanishing_order(CurveId::c1(), p, a) == oracle::s_c1(p.n, p.m, b1, b2) &&
              kee::expected_vanishing_order(CurveId::c2(), p, a) == oracle::s_c2(p.n, p.m, b1, b2) &&
              (p.m == 0 || kee::expected_vanishing_order(CurveId::e(1), p, a) == oracle::s_e(p.n, p.m, b1, b2));
    ++checked;
    if (!ok) return {false, "mismatch at n=" + std::to_string(p.n) + " m=" + std::to_string(p.m)};
  }
  Outcome suite_run = suite(kee::Suite::SValues, 200);
  suite_run.detail = std::to_string(checked) + " direct samples, " + suite_run.detail;
  return suite_run;
}

Outcome named_points() {
  std::vector<std::string> failures;
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  };
  {
    SurfaceParams p{0, 2};
    Angles a{rat(63, 128), rat(21, 32)};
    auto v = kee::k_polystable(p, a);
    expect(v.delta == Rat(1), "condition point m=2: delta");
    expect(v.status == kee::Status::KPolystable, "condition point m=2: status");
    // All four displayed ratios are 1 here.
    expect(a.beta1 / oracle::s_c1(0, 2, a.beta1, a.beta2) == 1 && a.beta2 / oracle::s_c2(0, 2, a.beta1, a.beta2) == 1 &&
               oracle::s_e(0, 2, a.beta1, a.beta2) == 1 && oracle::s_f(0, 2, a.beta1, a.beta2) == 1,
           "condition point m=2: oracle ratios");
  }
  {
    SurfaceParams p{0, 1};
    Angles a{rat(144, 125), rat(48, 25)};
    auto v = kee::k_polystable(p, a);
    Rat expected = 1 / oracle::s_e(0, 1, a.beta1, a.beta2);
    expect(expected == rat(175, 202), "m=1: oracle value");
    expect(v.delta == expected, "m=1: delta");
    expect(v.status == kee::Status::NotKPolystable, "m=1: status");
    expect(!v.witnesses.empty() && v.witnesses.front().name() == "E1", "m=1: witness");
  }
  {
    SurfaceParams p{0, 2};
    Angles a{rat(1, 2), rat(1, 2)};
    auto v = kee::k_polystable(p, a);
    Rat expected = a.beta2 / oracle::s_c2(0, 2, a.beta1, a.beta2);
    expect(expected == rat(21, 23), "half: oracle value");
    expect(v.delta == expected, "half: delta");
    expect(!v.witnesses.empty() && v.witnesses.front().name() == "C2tilde", "half: witness");
  }
  Outcome o{failures.empty(), failures.empty() ? "3 points" : ""};
  for (const auto& f : failures) o.detail += f + "; ";
  return o;
}

Outcome negative_definite_families() {
  int checked = 0;
  std::string bad;
  auto check = [&](int n, int m, std::vector<CurveId> curves, bool expected, const char* what) {
    ++checked;
    if (kee::is_negative_definite(SurfaceModel({n, m}), curves) != expected && bad.empty()) {
      bad = std::string(what) + " at n=" + std::to_string(n) + " m=" + std::to_string(m);
    }
  };
  for (int m = 1; m <= 6; ++m) {
    for (int n = 0; n <= 7; ++n) {
      std::vector<CurveId> fs, es;
      for (int i = 1; i <= m; ++i) {
        fs.push_back(CurveId::f(i));
        es.push_back(CurveId::e(i));
      }
      check(n, m, fs, true, "family 1");
      check(n, m, es, true, "family 2");
      std::vector<CurveId> c1fs{CurveId::c1()};
      c1fs.insert(c1fs.end(), fs.begin(), fs.end());
      if (n > m) check(n, m, c1fs, true, "family 4");
      if (n == m) check(n, m, c1fs, false, "family 4 violation");
      for (int i = 1; i <= m; ++i) {
        if (n > 1) check(n, m, {CurveId::c1(), CurveId::f(i)}, true, "family 3");
        if (n == 1) check(n, m, {CurveId::c1(), CurveId::f(i)}, false, "family 3 violation");
        if (n < m) check(n, m, {CurveId::c2(), CurveId::f(i)}, true, "family 5");
        if (n == m) check(n, m, {CurveId::c2(), CurveId::f(i)}, false, "family 5 violation");
        if (1 < n && n < m) check(n, m, {CurveId::c1(), CurveId::c2(), CurveId::f(i)}, true, "family 6");
        if (n == 1 || n == m) check(n, m, {CurveId::c1(), CurveId::c2(), CurveId::f(i)}, false, "family 6 violation");
        if (n == 0) {
          std::vector<CurveId> fam{CurveId::c2(), CurveId::f(i)};
          for (int j = 1; j <= m; ++j) {
            if (j != i) fam.push_back(CurveId::e(j));
          }
          check(n, m, fam, true, "family 7");
        }
      }
    }
  }
  return {bad.empty(), bad.empty() ? std::to_string(checked) + " families" : bad};
}

Outcome toric_reduction() {
  int checked = 0;
  for (int n = 0; n <= 2; ++n) {
    SurfaceParams p{n, 0};
    // Grid of ample angles; the sign must match the relation computed directly.
    for (int i = 1; i <= 24; ++i) {
      for (int j = 1; j <= 24; ++j) {
        Angles a{rat(i, 12), rat(j, 12)};
        if (!kee::ample_angle_range(p, a)) continue;
        Rat lhs = a.beta1 * a.beta1 - Rat(n) / 3 * a.beta1 * a.beta1 * a.beta1;
        Rat rhs = a.beta2 * a.beta2 + Rat(n) / 3 * a.beta2 * a.beta2 * a.beta2;
        int s = kee::condition_sign(p, a);
        ++checked;
        if (s != kee::sign(lhs - rhs)) return {false, "sign mismatch at n=" + std::to_string(n)};
        if (n == 0 && (s == 0) != (i == j)) return {false, "n=0 zero set is not the diagonal"};
        if (s == 0 && kee::k_polystable(p, a).status != kee::Status::KPolystable) {
          return {false, "condition point not polystable at n=" + std::to_string(n)};
        }
      }
    }
    // Constructed points on the relation curve.
    for (Rat s : {rat(1, 8), rat(1, 4), rat(1, 3), rat(1, 2)}) {
      auto cp = kee::rational_condition_point(p, s, rat(1, 1 << 24));
      if (!cp) continue;
      ++checked;
      if (cp->exact) {
        if (kee::condition_sign(p, *cp->exact) != 0) return {false, "constructed point off the locus"};
      } else if (kee::condition_sign(p, {cp->beta1_lo, cp->beta2}) != -1 ||
                 kee::condition_sign(p, {cp->beta1_hi, cp->beta2}) != 1) {
        return {false, "interval certificate does not bracket the locus"};
      }
    }
  }
  return {true, std::to_string(checked) + " points"};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"1 lemma regression (200 per closed form, exact)", lemma_regression},
      {"2 expected vanishing orders (exact)", s_values},
      {"3 incremental Zariski vs brute force (m <= 4)", [] { return suite(kee::Suite::ZariskiOracle, 150); }},
      {"4 route agreement (200 samples)", [] { return suite(kee::Suite::RouteAgreement, 200); }},
      {"5 halving identity vol(Psi) = L^2 / 2", [] { return suite(kee::Suite::Halving, 200); }},
      {"6 named-point verdicts", named_points},
      {"7 delta <= 1 (500 samples)", [] { return suite(kee::Suite::DeltaBound, 500); }},
      {"8 negative definite families and violations", negative_definite_families},
      {"9 m = 0 reduction", toric_reduction},
  };
  bool all = true;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    all = all && o.ok;
    std::printf("%s  %s  [%s]\n", o.ok ? "PASS" : "FAIL", c.name, o.detail.c_str());
  }
  return all ? 0 : 1;
}
