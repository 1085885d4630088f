// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles/ordinal_models.hpp"
#include "sobczyk/campaign.hpp"
#include "sobczyk/error.hpp"

using namespace sobczyk;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

struct Criterion {
  std::string name;
  double budget_s;
  std::function<Outcome()> run;
};

PointId fin(std::uint64_t i) { return PointId::finite(i); }
PointId ord(std::uint64_t a, std::uint64_t b, std::uint64_t c) { return PointId::ordinal(a, b, c); }

const LineDescriptor kFive = LineDescriptor::finite(5);

SignedMeasure atoms(std::initializer_list<std::pair<std::uint64_t, int>> list) {
  SignedMeasure mu(kFive);
  for (const auto& [p, w] : list) mu.add(fin(p), w);
  return mu;
}

CampaignConfig config(std::uint64_t seed, std::size_t trials) {
  CampaignConfig cfg;
  cfg.seed = seed;
  cfg.trials = trials;
  return cfg;
}

/// Every row passes and each trial contributed at least one row.
void require_clean(Outcome& out, const Report& report, std::size_t trials, const std::string& suite) {
  std::set<std::size_t> seen;
  for (const auto& row : report.rows) seen.insert(row.trial);
  out.require(report.all_pass(), suite + ": " + std::to_string(report.failed()) + " failing rows");
  out.require(seen.size() == trials, suite + ": " + std::to_string(seen.size()) + " trials reported");
  if (out.detail.empty()) out.detail = suite + " " + std::to_string(report.rows.size()) + " rows";
}

std::size_t count_rows(const Report& report, const std::string& check) {
  std::size_t n = 0;
  for (const auto& row : report.rows) n += row.check.name == check;
  return n;
}

io::Json read_json(const std::string& name) {
  std::ifstream in(std::string(SOBCZYK_DATA_DIR) + "/golden/" + name);
  if (!in) throw ParseError("missing golden file " + name);
  std::stringstream buf;
  buf << in.rdbuf();
  return io::parse(buf.str());
}

OperatorR coordinate_instance(bool squared) {
  CoordinatePatterns p;
  p.units = CoefficientPattern::constant({}, 1);
  if (squared) p.omega = CoefficientPattern::constant({}, 1);
  return OperatorR::coordinate(LineDescriptor::ordinal(squared ? OrdinalCnf{1, 0, 0} : OrdinalCnf{0, 1, 0}), p);
}

Outcome nbv_isometry() {
  Outcome out;
  const Report report = run_suite("nbv_isometry", config(101, 500));
  require_clean(out, report, 500, "nbv_isometry");
  std::set<std::string> kinds;
  for (const auto& [digest, payload] : report.instances) kinds.insert(payload["measure"]["line"]["kind"]);
  out.require(kinds.size() == 5, "line families covered: " + std::to_string(kinds.size()));
  return out;
}

Outcome stieltjes() {
  Outcome out;
  require_clean(out, run_suite("stieltjes", config(102, 500)), 500, "stieltjes");
  return out;
}

Outcome tilde_and_skeleton() {
  Outcome out;
  require_clean(out, run_suite("tilde", config(103, 500)), 500, "tilde");
  require_clean(out, run_suite("skeleton", config(104, 500)), 500, "skeleton");

  const auto p = ClopenPartition::make(kFive, {fin(1), fin(4)});
  const auto mu = atoms({{0, 1}, {2, 1}, {4, -1}});
  const auto t = tilde_mu(kFive, p, mu);
  out.require(t == atoms({{0, 1}, {1, -1}, {2, 2}, {4, -2}}), "tilde worked example");
  out.require(total_variation(t) == 6, "tilde worked example norm");

  const ClopenInterval whole{std::nullopt, fin(4)};
  const auto h = ClosedSet::from_points(kFive, {fin(1), fin(3)});
  const auto nu = skeleton(whole, h, atoms({{0, 1}, {2, -1}, {4, 1}}));
  out.require(nu == SignedMeasure::dirac(kFive, fin(1)), "skeleton worked example");
  return out;
}

Outcome flower() {
  Outcome out;
  const Report report = run_suite("flower", config(105, 500));
  require_clean(out, report, 500, "flower");
  std::set<std::string> kinds;
  for (const auto& [digest, payload] : report.instances) kinds.insert(payload["operator"]["kind"]);
  out.require(kinds.count("finitebasis") == 1 && kinds.count("coordinate") == 1, "both operator variants");
  out.require(count_rows(report, "flower_dipole_equality") > 0, "no equality witness");

  const auto r = OperatorR::finite_basis(kFive, {TestFunction::indicator(kFive, ClopenInterval{fin(0), fin(2)})});
  const auto fb = flower_bound(r, atoms({{1, 1}, {3, -1}}));
  out.require(fb.lhs == 1 && fb.rhs == 1, "finite example 1 = 1");
  const auto w = coordinate_instance(false);
  SignedMeasure dipole = SignedMeasure::dirac(w.line(), ord(0, 0, 2));
  dipole.add(ord(0, 0, 5), -1);
  const auto fw = flower_bound(w, dipole);
  out.require(fw.lhs == 2 && fw.rhs == 2, "ordinal example 2 = 2");
  return out;
}

Outcome hierarchy() {
  Outcome out;
  const auto omega = coordinate_instance(false);
  const auto omega2 = coordinate_instance(true);
  for (const Rational delta : {Rational(1, 2), Rational(1), Rational(3, 2), Rational(2), Rational(3)}) {
    const auto d = to_string(delta);
    out.require(oracle::hierarchy_disagreements(compute_hierarchy(omega, delta), oracle::omega_model(100), delta) == 0,
                "omega oracle at delta " + d);
    out.require(
        oracle::hierarchy_disagreements(compute_hierarchy(omega2, delta), oracle::omega_squared_model(10), delta) == 0,
        "omega squared oracle at delta " + d);
  }
  const auto h = compute_hierarchy(omega, 1);
  out.require(h.levels.size() == 3, "omega stage");
  if (h.levels.size() == 3) {
    out.require(h.levels[1] == ClosedSet::from_points(omega.line(), {ord(0, 1, 0)}), "H1 = {omega}");
    out.require(h.levels[2].is_empty(), "H2 empty");
  }
  if (out.detail.empty()) out.detail = "oracles agree at 5 deltas";
  return out;
}

Outcome decomposition() {
  Outcome out;
  const Report report = run_suite("decomposition", config(106, 100));
  require_clean(out, report, 100, "decomposition");
  const std::vector<std::pair<std::string, Rational>> bounds{
      {"b_nu_norm", Rational(3, 2)}, {"b_mu_prime_norm", Rational(5, 2)}, {"c_nu_dual_norm", Rational(1, 10)}};
  for (const auto& [name, rhs] : bounds) {
    std::size_t n = 0;
    for (const auto& row : report.rows) {
      if (row.check.name != name) continue;
      ++n;
      out.require(row.check.rhs == rhs, name + " bound " + to_string(row.check.rhs));
    }
    out.require(n == 100, name + " rows " + std::to_string(n));
  }
  out.require(count_rows(report, "a_split") == 100, "a_split rows");
  out.require(count_rows(report, "d_cumulative_zero") == 100, "d_cumulative_zero rows");
  return out;
}

Outcome pipeline_structure() {
  Outcome out;
  const Report report = run_suite("pipeline", config(107, 25));
  require_clean(out, report, 25, "pipeline");
  for (const char* name : {"hard_norm", "s_norm", "operator_identity"}) {
    out.require(count_rows(report, name) == 25, std::string(name) + " rows");
  }
  CampaignConfig cfg = config(1, 1);
  const auto golden = run_pipeline_input(read_json("pipeline_lexdouble_finite3.v1.json"), cfg);
  out.require(golden.report.all_pass(), "golden pipeline instance");
  return out;
}

Outcome counterexample() {
  Outcome out;
  const auto result = run_counterexample(4, 0, config(108, 20));
  out.require(result.report.all_pass(), std::to_string(result.report.failed()) + " failing rows");
  bool hits = false;
  for (const auto& row : result.report.rows) {
    if (row.check.name == "witness_hits") hits = row.check.lhs >= 4 && row.check.detail == PointId::rational(Rational(1, 2)).to_string();
  }
  out.require(hits, "witness 1/2 with 4 hits");
  out.require(count_rows(result.report, "pl_bound") > 0, "pl_bound rows");
  return out;
}

Outcome pipeline_ratio() {
  Outcome out;
  const Report report = run_suite("pipeline", config(109, 25));
  require_clean(out, report, 25, "pipeline");
  const Rational bound = 8 + Rational(1, 10);
  std::size_t ratios = 0;
  for (const auto& row : report.rows) {
    if (row.check.name == "ratio") {
      ++ratios;
      out.require(row.check.lhs <= bound && row.check.rhs == bound, "ratio " + to_string(row.check.lhs));
    }
  }
  out.require(ratios == 25, "ratio rows " + std::to_string(ratios));
  out.require(count_rows(report, "restriction_exact") == 25, "restriction_exact rows");
  return out;
}

Outcome replay() {
  Outcome out;
  const CampaignConfig cfg = config(110, 10);
  const std::string a = to_json(run_verify_lemmas(cfg)).dump();
  const std::string b = to_json(run_verify_lemmas(cfg)).dump();
  out.require(a == b, "verify-lemmas json differs");
  out.require(to_csv(run_verify_lemmas(cfg)) == to_csv(run_verify_lemmas(cfg)), "verify-lemmas csv differs");
  out.require(to_json(run_counterexample(4, 0, cfg).report).dump() == to_json(run_counterexample(4, 0, cfg).report).dump(),
              "counterexample differs");
  const auto input = read_json("decompose_scaled_finite5.v1.json");
  const auto first = run_decompose_input(input, cfg);
  const auto second = run_decompose_input(input, cfg);
  out.require(first.payload.dump() == second.payload.dump(), "decompose payload differs");
  out.require(first.report.all_pass(), "golden decompose instance");
  if (out.detail.empty()) out.detail = std::to_string(a.size()) + " bytes identical";
  return out;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"nbv_isometry", 5, nbv_isometry},
      {"stieltjes_atoms", 5, stieltjes},
      {"tilde_skeleton", 10, tilde_and_skeleton},
      {"flower_bound", 10, flower},
      {"hierarchy_oracle", 5, hierarchy},
      {"decomposition_bounds", 60, decomposition},
      {"pipeline_structure", 30, pipeline_structure},
      {"counterexample_depth4", 5, counterexample},
      {"pipeline_ratio", 60, pipeline_ratio},
      {"replay_determinism", 10, replay},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& c = criteria[i];
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.budget_s) out.require(false, "over time budget");
    failed += !out.pass;
    std::printf("%s %2zu %-22s %7.2fs/%3.0fs  %s\n", out.pass ? "PASS" : "FAIL", i + 1, c.name.c_str(), secs,
                c.budget_s, out.detail.c_str());
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
