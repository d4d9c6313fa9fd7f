#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "kee/errors.hpp"
#include "kee/tvariety.hpp"
#include "kee/verdict.hpp"
#include "kee/verify.hpp"
#include "kee/volumes.hpp"

namespace kee::cli {
namespace {

using Json = nlohmann::ordered_json;

struct RunConfig {
  int n = 0;
  int m = 0;
  std::string beta1;
  std::string beta2;
  std::string divisor;
  std::string suite = "all";
  std::size_t samples = 200;
  std::uint64_t seed = 42;
  std::string beta1_grid;
  std::string beta2_grid;
  std::string out_path;
  bool approx = false;
  bool lossy = false;
};

class UserError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Rat parse_value(const std::string& text, const RunConfig& cfg, const char* what) {
  if (text.empty()) throw UserError(std::string("missing --") + what);
  try {
    return parse_rat(text, cfg.lossy);
  } catch (const std::invalid_argument& e) {
    throw UserError(std::string("--") + what + ": " + e.what());
  }
}

SurfaceParams params_of(const RunConfig& cfg) {
  if (cfg.n < 0 || cfg.m < 0) throw UserError("--n and --m must be nonnegative");
  return {cfg.n, cfg.m};
}

Angles angles_of(const RunConfig& cfg) {
  return {parse_value(cfg.beta1, cfg, "beta1"), parse_value(cfg.beta2, cfg, "beta2")};
}

void require_ample(const SurfaceParams& p, const Angles& a) {
  if (auto why = ample_range_violation(p, a)) throw UserError("not ample: " + *why);
}

Json rat_json(const Rat& r) { return to_string(r); }

void add_approx(Json& j, const char* key, const Rat& r, const RunConfig& cfg) {
  if (cfg.approx) j[std::string(key) + "_approx_lossy"] = to_decimal(r);
}

Json cmd_delta(const RunConfig& cfg) {
  SurfaceParams p = params_of(cfg);
  Angles a = angles_of(cfg);
  require_ample(p, a);
  Verdict v = k_polystable(p, a);
  const DeltaReport& report = *v.report;

  Json j;
  j["n"] = p.n;
  j["m"] = p.m;
  j["beta1"] = rat_json(a.beta1);
  j["beta2"] = rat_json(a.beta2);
  j["delta"] = rat_json(report.delta);
  add_approx(j, "delta", report.delta, cfg);
  j["witness"] = report.witnesses.front().name();
  j["witnesses"] = Json::array();
  for (const auto& w : report.witnesses) j["witnesses"].push_back(w.name());
  j["condition_sign"] = v.condition_sign;
  j["futaki_zero"] = futaki_vanishes(p, a) == 0;
  j["status"] = status_name(v.status);
  Json per = Json::object();
  for (const auto& t : report.terms) {
    Rat area = t.valuation.kind == ValuationKind::RayC1   ? a.beta1
               : t.valuation.kind == ValuationKind::RayC2 ? a.beta2
                                                          : Rat(1);
    Json entry;
    entry["A"] = rat_json(area);
    entry["S"] = rat_json(area / t.value);
    entry["ratio"] = rat_json(t.value);
    add_approx(entry, "ratio", t.value, cfg);
    per[t.valuation.name()] = entry;
  }
  j["per_divisor"] = per;
  j["notes"] = v.notes;
  return j;
}

Json cmd_volume_curve(const RunConfig& cfg) {
  SurfaceParams p = params_of(cfg);
  if (cfg.divisor.empty()) throw UserError("volume-curve needs --divisor");
  auto curve = CurveId::parse(cfg.divisor);
  if (!curve || !SurfaceModel(p).valid(*curve)) throw UserError("unknown divisor '" + cfg.divisor + "'");
  Angles a = angles_of(cfg);
  require_ample(p, a);

  PiecewiseQuadratic pq = volume_curve(*curve, p, a);
  Json j;
  j["divisor"] = curve->name();
  j["n"] = p.n;
  j["m"] = p.m;
  j["beta1"] = rat_json(a.beta1);
  j["beta2"] = rat_json(a.beta2);
  j["pieces"] = Json::array();
  for (const auto& c : pq.pieces()) {
    Json piece;
    piece["x_lo"] = rat_json(c.lo);
    piece["x_hi"] = rat_json(c.hi);
    piece["q0"] = rat_json(c.volume.q0);
    piece["q1"] = rat_json(c.volume.q1);
    piece["q2"] = rat_json(c.volume.q2);
    piece["negative_support"] = Json::array();
    for (const auto& s : c.negative_support) piece["negative_support"].push_back(s.name());
    j["pieces"].push_back(piece);
  }
  Rat s = expected_vanishing_order(*curve, p, a);
  j["tau"] = rat_json(pq.threshold());
  j["S"] = rat_json(s);
  j["A"] = rat_json(log_discrepancy(*curve, a));
  add_approx(j, "S", s, cfg);
  return j;
}

Json cmd_verify(const RunConfig& cfg, bool& all_passed) {
  std::vector<Suite> suites;
  if (cfg.suite == "all") {
    suites.assign(all_suites().begin(), all_suites().end());
  } else if (auto s = parse_suite(cfg.suite)) {
    suites.push_back(*s);
  } else {
    throw UserError("unknown suite '" + cfg.suite + "'");
  }
  Json j;
  j["samples"] = cfg.samples;
  j["seed"] = cfg.seed;
  j["suites"] = Json::array();
  all_passed = true;
  for (Suite s : suites) {
    SuiteResult r = run_suite(s, cfg.samples, cfg.seed);
    Json entry;
    entry["suite"] = suite_name(s);
    entry["passed"] = r.passed;
    entry["checked"] = r.checked;
    entry["counterexample"] = r.counterexample ? Json(*r.counterexample) : Json(nullptr);
    j["suites"].push_back(entry);
    all_passed = all_passed && r.passed;
  }
  j["passed"] = all_passed;
  return j;
}

// "lo:hi:count" -> count evenly spaced points, lo and hi included.
std::vector<Rat> parse_grid(const std::string& text, const RunConfig& cfg, const char* what) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
  if (parts.size() != 3) throw UserError(std::string("--") + what + " must look like lo:hi:count");
  Rat lo = parse_value(parts[0], cfg, what);
  Rat hi = parse_value(parts[1], cfg, what);
  long count;
  try {
    std::size_t used = 0;
    count = std::stol(parts[2], &used);
    if (used != parts[2].size() || count < 0) throw std::invalid_argument("count");
  } catch (const std::exception&) {
    throw UserError(std::string("--") + what + ": count must be a nonnegative integer");
  }
  if (hi < lo) throw UserError(std::string("--") + what + ": hi below lo");
  std::vector<Rat> out;
  for (long k = 0; k < count; ++k) out.push_back(count == 1 ? lo : Rat(lo + (hi - lo) * k / (count - 1)));
  return out;
}

std::string cmd_scan(const RunConfig& cfg) {
  SurfaceParams p = params_of(cfg);
  std::vector<Rat> g1 = parse_grid(cfg.beta1_grid, cfg, "beta1-grid");
  std::vector<Rat> g2 = parse_grid(cfg.beta2_grid, cfg, "beta2-grid");
  std::ostringstream out;
  out << "beta1,beta2,condition_sign,delta,status";
  if (cfg.approx) out << ",beta1_approx_lossy,beta2_approx_lossy,delta_approx_lossy";
  out << "\n";
  for (const auto& b1 : g1) {
    for (const auto& b2 : g2) {
      Angles a{b1, b2};
      Verdict v = k_polystable(p, a);
      out << to_string(b1) << "," << to_string(b2) << "," << v.condition_sign << ","
          << (v.delta ? to_string(*v.delta) : "") << "," << status_name(v.status);
      if (cfg.approx) {
        out << "," << to_decimal(b1) << "," << to_decimal(b2) << "," << (v.delta ? to_decimal(*v.delta) : "");
      }
      out << "\n";
    }
  }
  return out.str();
}

// Relative --out paths land in $KEE_OUTPUT_DIR when it is set.
std::filesystem::path output_path(const std::string& out) {
  std::filesystem::path path(out);
  if (path.is_relative()) {
    if (const char* dir = std::getenv("KEE_OUTPUT_DIR"); dir && *dir) path = std::filesystem::path(dir) / path;
  }
  return path;
}

void emit(const std::string& text, const RunConfig& cfg, std::ostream& out) {
  if (cfg.out_path.empty()) {
    out << text;
    return;
  }
  std::filesystem::path path = output_path(cfg.out_path);
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UserError("cannot write " + path.string());
  file << text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Exact delta-invariants and K-polystability for blow-ups of Hirzebruch surfaces", "kee"};
  app.set_config("--config", "", "key=value file; keys are the long option names");
  app.require_subcommand(1);
  app.add_option("--n", cfg.n, "C1^2 = -n on F_n");
  app.add_option("--m", cfg.m, "number of blown-up points");
  app.add_option("--beta1", cfg.beta1, "cone angle along C1, as p/q");
  app.add_option("--beta2", cfg.beta2, "cone angle along C2, as p/q");
  app.add_option("--divisor", cfg.divisor, "C1tilde, C2tilde, E<i>, F<i>tilde, GenericFiber, PullbackC2");
  app.add_option("--suite", cfg.suite, "lemmas, s-values, zariski-oracle, route-agreement, halving, delta-bound or all");
  app.add_option("--samples", cfg.samples, "samples per checked family");
  app.add_option("--seed", cfg.seed, "random seed");
  app.add_option("--beta1-grid", cfg.beta1_grid, "lo:hi:count");
  app.add_option("--beta2-grid", cfg.beta2_grid, "lo:hi:count");
  app.add_option("--out", cfg.out_path, "output file (relative paths resolve under $KEE_OUTPUT_DIR)");
  app.add_flag("--approx", cfg.approx, "add lossy decimal fields");
  app.add_flag("--lossy", cfg.lossy, "accept decimal input, converted exactly");

  auto* delta = app.add_subcommand("delta", "delta-invariant and verdict as JSON")->fallthrough();
  auto* curve = app.add_subcommand("volume-curve", "x -> vol(-K - xE) as JSON")->fallthrough();
  auto* verify = app.add_subcommand("verify", "oracle suites")->fallthrough();
  auto* scan = app.add_subcommand("scan", "CSV verdicts over a (beta1, beta2) grid")->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "kee: " << e.what() << "\n";
    return kUserError;
  }

  try {
    if (delta->parsed()) {
      emit(cmd_delta(cfg).dump(2) + "\n", cfg, out);
    } else if (curve->parsed()) {
      emit(cmd_volume_curve(cfg).dump(2) + "\n", cfg, out);
    } else if (verify->parsed()) {
      bool passed = false;
      emit(cmd_verify(cfg, passed).dump(2) + "\n", cfg, out);
      if (!passed) {
        err << "kee: verification failed\n";
        return kInconsistency;
      }
    } else if (scan->parsed()) {
      emit(cmd_scan(cfg), cfg, out);
    }
  } catch (const UserError& e) {
    err << "kee: " << e.what() << "\n";
    return kUserError;
  } catch (const InconsistencyError& e) {
    err << "kee: INCONSISTENCY: " << e.what() << "\n";
    return kInconsistency;
  } catch (const IrrationalThreshold& e) {
    err << "kee: " << e.what() << "\n";
    return kInconsistency;
  } catch (const NotPseudoeffective& e) {
    err << "kee: " << e.what() << "\n";
    return kInconsistency;
  } catch (const std::invalid_argument& e) {
    err << "kee: " << e.what() << "\n";
    return kUserError;
  }
  return kOk;
}

}  // namespace kee::cli
