#include "sobczyk/campaign.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <sstream>

#include "sobczyk/error.hpp"

namespace sobczyk {

namespace {

using io::Json;

Check make_check(std::string name, Rational lhs, Rational rhs, bool pass, std::string detail = {}) {
  return Check{std::move(name), std::move(lhs), std::move(rhs), pass, std::move(detail)};
}

Check equal_check(std::string name, const Rational& lhs, const Rational& rhs) {
  return make_check(std::move(name), lhs, rhs, lhs == rhs);
}

Check at_most_check(std::string name, const Rational& lhs, const Rational& rhs) {
  return make_check(std::move(name), lhs, rhs, lhs <= rhs);
}

Check zero_count(std::string name, std::size_t bad) { return equal_check(std::move(name), Rational(bad), 0); }

std::uint64_t trial_seed(std::uint64_t seed, std::size_t suite, std::size_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(suite), static_cast<std::uint32_t>(trial)};
  std::uint32_t out[2];
  seq.generate(out, out + 2);
  return (std::uint64_t{out[0]} << 32) | out[1];
}

/// Checks and a replay payload for one trial.
struct TrialOutcome {
  Json payload;
  std::vector<Check> checks;
};

std::vector<PointId> probe_points(InstanceRng& rng, const LineDescriptor& line, const SignedMeasure& mu) {
  std::vector<PointId> out = canonical_points(line, 24);
  for (int i = 0; i < 8; ++i) out.push_back(random_point(rng, line));
  for (const auto& p : mu.support()) out.push_back(p);
  out.push_back(line.min());
  out.push_back(line.max());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

TrialOutcome nbv_trial(InstanceRng& rng, std::size_t trial, const CampaignConfig&) {
  const LineDescriptor line = random_line(rng, kAllLineFamilies[trial % std::size(kAllLineFamilies)]);
  const SignedMeasure mu = random_measure(rng, line);
  TrialOutcome out{Json{{"measure", io::to_json(mu)}}, {}};
  out.checks.push_back(equal_check("bv_norm_equals_variation", bv_norm(NBVProfile(mu)), total_variation(mu)));
  return out;
}

TrialOutcome stieltjes_trial(InstanceRng& rng, std::size_t trial, const CampaignConfig&) {
  const LineDescriptor line = random_line(rng, kAllLineFamilies[trial % std::size(kAllLineFamilies)]);
  const SignedMeasure mu = random_measure(rng, line);
  const TestFunction f = random_continuous(rng, line);
  TrialOutcome out{Json{{"measure", io::to_json(mu)}, {"function", io::to_json(f)}}, {}};
  Rational atom_sum = 0;
  for (const auto& [p, w] : mu.atoms()) atom_sum += f.eval(p) * w;
  out.checks.push_back(equal_check("integral_equals_atom_sum", rs_integral(f, NBVProfile(mu)), atom_sum));
  return out;
}

LineDescriptor zero_dimensional_line(InstanceRng& rng, std::size_t trial) {
  static const LineFamily families[] = {LineFamily::Finite, LineFamily::Ordinal, LineFamily::LexDouble,
                                        LineFamily::DoubleArrow};
  for (;;) {
    LineDescriptor line = random_line(rng, families[trial % std::size(families)]);
    if (line.kind() != LineDescriptor::Kind::LexDouble || line.is_zero_dimensional()) return line;
  }
}

TrialOutcome tilde_trial(InstanceRng& rng, std::size_t trial, const CampaignConfig&) {
  const LineDescriptor line = zero_dimensional_line(rng, trial);
  const ClopenPartition p = random_partition(rng, line);
  const SignedMeasure mu = random_measure(rng, line);
  Json cuts = Json::array();
  for (const auto& c : p.cuts()) cuts.push_back(io::to_json(c));
  TrialOutcome out{Json{{"measure", io::to_json(mu)}, {"partition", cuts}}, {}};
  const SignedMeasure t = tilde_mu(line, p, mu);

  std::size_t bad_cells = 0;
  for (const auto& cell : p.cells()) {
    if (t.mass_of(cell) != 0) ++bad_cells;
  }
  out.checks.push_back(zero_count("cell_mass_zero", bad_cells));

  std::size_t bad_cumulative = 0;
  for (const auto& s : probe_points(rng, line, mu)) {
    if (!p.has_cut(s) && cumulative(t, s) != cumulative(mu, s)) ++bad_cumulative;
  }
  out.checks.push_back(zero_count("cumulative_off_partition", bad_cumulative));
  out.checks.push_back(
      at_most_check("norm_bound", total_variation(t), total_variation(mu) + 2 * cut_mass(mu, p.cuts())));
  return out;
}

TrialOutcome skeleton_trial(InstanceRng& rng, std::size_t trial, const CampaignConfig&) {
  const LineDescriptor line = zero_dimensional_line(rng, trial);
  const ClopenInterval interval = random_interval(rng, line);
  const ClosedSet h = random_closed_subset(rng, line, interval);
  SignedMeasure mu = random_measure_in(rng, line, interval);
  // Skeletons onto the empty set exist only for measures of mass zero.
  if (h.is_empty()) mu.add(interval_min(line, interval), Rational(-mu.total_mass()));
  TrialOutcome out{Json{{"measure", io::to_json(mu)}, {"interval", io::to_json(interval)}, {"h", io::to_json(h)}},
                   {}};
  const SignedMeasure nu = skeleton(interval, h, mu);

  std::size_t outside = 0;
  for (const auto& p : nu.support()) {
    if (!h.contains(p)) ++outside;
  }
  out.checks.push_back(zero_count("support_in_h", outside));
  out.checks.push_back(equal_check("mass_preserved", nu.mass_of(interval), mu.mass_of(interval)));
  out.checks.push_back(at_most_check("norm_bound", total_variation(nu), total_variation(mu)));
  std::size_t bad_cumulative = 0;
  if (!h.is_empty()) {
    const PointId top = h.max();
    for (const auto& t : h.sample_members(6)) {
      if (t != top && cumulative(nu, t) != cumulative(mu, t)) ++bad_cumulative;
    }
  }
  out.checks.push_back(zero_count("cumulative_on_h", bad_cumulative));
  return out;
}

TrialOutcome flower_trial(InstanceRng& rng, std::size_t trial, const CampaignConfig&) {
  const bool coordinate = trial % 2 == 1;
  const LineDescriptor line = coordinate ? random_countable_line(rng) : random_line(rng);
  const OperatorR r = coordinate ? random_coordinate(rng, line) : random_finite_basis(rng, line);
  const SignedMeasure mu = random_balanced_measure(rng, line);
  TrialOutcome out{Json{{"operator", io::to_json(r)}, {"measure", io::to_json(mu)}}, {}};
  const FlowerBound fb = flower_bound(r, mu);
  out.checks.push_back(at_most_check("flower_bound", fb.lhs, fb.rhs));

  // A dipole δ_p − δ_q attains the bound.
  const PointId p = random_point(rng, line);
  const PointId q = random_point(rng, line);
  if (p != q) {
    SignedMeasure dipole = SignedMeasure::dirac(line, p);
    dipole.add(q, -1);
    const FlowerBound eq = flower_bound(r, dipole);
    out.payload["dipole"] = io::to_json(dipole);
    out.checks.push_back(equal_check("flower_dipole_equality", eq.lhs, eq.rhs));
  }
  return out;
}

TrialOutcome hierarchy_trial(InstanceRng& rng, std::size_t, const CampaignConfig& cfg) {
  const LineDescriptor line = random_line(rng, LineFamily::Ordinal);
  const OperatorR r = random_coordinate(rng, line);
  static const std::vector<Rational> deltas{Rational(1, 2), Rational(1), Rational(3, 2), Rational(2)};
  const Rational delta = rng.pick(deltas);
  TrialOutcome out{hierarchy_payload(r, delta), {}};
  const Hierarchy h = compute_hierarchy(r, delta, cfg.max_stage);
  out.checks.push_back(equal_check("h0_whole", Rational(h.levels.front() == ClosedSet::whole(line) ? 1 : 0), 1));
  std::size_t not_nested = 0;
  for (std::size_t k = 0; k + 1 < h.levels.size(); ++k) {
    if (!h.levels[k + 1].is_subset_of(h.levels[k])) ++not_nested;
  }
  out.checks.push_back(zero_count("levels_nested", not_nested));
  out.checks.push_back(equal_check("terminal_empty", Rational(h.levels.back().is_empty() ? 1 : 0), 1));
  // Successor ordinals are isolated, so no level past H₀ keeps one.
  std::size_t bad_removed = 0;
  for (std::size_t k = 0; k + 1 < h.levels.size(); ++k) {
    for (const auto& p : h.levels[k].sample_members(4)) {
      if (p.cnf().rank() == 0 && h.levels[k + 1].contains(p)) ++bad_removed;
    }
  }
  out.checks.push_back(zero_count("isolated_points_removed", bad_removed));
  return out;
}

std::vector<PointId> decomposition_sample(InstanceRng& rng, const LineDescriptor& line) {
  if (line.is_finite()) return all_points(line);
  std::vector<PointId> out = canonical_points(line, 32);
  for (int i = 0; i < 16; ++i) out.push_back(random_point(rng, line));
  out.push_back(line.max());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

TrialOutcome decomposition_trial(InstanceRng& rng, std::size_t trial, const CampaignConfig& cfg) {
  const LineDescriptor line = random_countable_line(rng);
  const bool coordinate = trial % 2 == 1;
  OperatorR r = coordinate ? random_coordinate(rng, line) : random_finite_basis(rng, line);
  const MeasureSequence seq = random_desk_sequence(rng, line, cfg.horizon);
  const std::vector<PointId> sample = decomposition_sample(rng, line);
  TrialOutcome out{decompose_payload(r, seq, sample), {}};
  const DecompositionConfig dc = cfg.decomposition();
  const DecompositionResult result = decompose(r, seq, dc);
  out.checks = verify_decomposition(r, seq, dc, result, sample);
  return out;
}

TrialOutcome pipeline_trial(InstanceRng& rng, std::size_t, const CampaignConfig& cfg) {
  const PipelineInstance instance = random_pipeline_instance(rng);
  TrialOutcome out{pipeline_payload(instance, 0), {}};
  const PipelineResult result = full_pipeline(instance.k, instance.x, instance.t0, cfg.decomposition());
  out.checks = result.report.checks;
  return out;
}

using TrialFn = std::function<TrialOutcome(InstanceRng&, std::size_t, const CampaignConfig&)>;

const std::vector<std::pair<std::string, TrialFn>>& suites() {
  static const std::vector<std::pair<std::string, TrialFn>> table{
      {"nbv_isometry", nbv_trial},       {"stieltjes", stieltjes_trial},
      {"tilde", tilde_trial},            {"skeleton", skeleton_trial},
      {"flower", flower_trial},          {"hierarchy", hierarchy_trial},
      {"decomposition", decomposition_trial}, {"pipeline", pipeline_trial},
  };
  return table;
}

Report run_trials(std::size_t suite_index, const CampaignConfig& cfg) {
  const auto& [name, fn] = suites()[suite_index];
  Report report;
  for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
    InstanceRng rng(trial_seed(cfg.seed, suite_index, trial), cfg.budget);
    Json payload = Json{{"seed", cfg.seed}, {"suite", name}, {"trial", trial}};
    try {
      TrialOutcome outcome = fn(rng, trial, cfg);
      report.add(name, trial, outcome.payload, outcome.checks);
    } catch (const Error& e) {
      report.add(name, trial, payload, {make_check("exception", 1, 0, false, e.what())});
    }
  }
  return report;
}

std::vector<PointId> points_from_json(const Json& j, const LineDescriptor& line) {
  std::vector<PointId> out;
  if (!j.is_array()) throw ParseError("expected an array of points");
  for (const auto& p : j) out.push_back(io::point_from_json(p, line));
  return out;
}

Json rows_json(const Report& report, bool decimal) {
  Json rows = Json::array();
  for (const auto& row : report.rows) {
    Json r{{"suite", row.suite},
           {"trial", row.trial},
           {"instance_digest", row.digest},
           {"check", row.check.name},
           {"lhs", to_string(row.check.lhs)},
           {"rhs", to_string(row.check.rhs)},
           {"pass", row.check.pass}};
    if (!row.check.detail.empty()) r["detail"] = row.check.detail;
    if (decimal) {
      r["approx_lhs"] = to_decimal(row.check.lhs);
      r["approx_rhs"] = to_decimal(row.check.rhs);
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

void CampaignConfig::validate() const {
  if (trials < 1) throw PreconditionError("trials must be at least 1");
  if (horizon < 1) throw PreconditionError("horizon must be at least 1");
  if (eps <= 0 || epsp <= 0) throw PreconditionError("eps and epsp must be positive");
}

void Report::add(const std::string& suite, std::size_t trial, const io::Json& payload,
                 const std::vector<Check>& checks) {
  const std::string digest = instance_digest(payload);
  instances.emplace(digest, payload);
  if (checks.empty()) {
    rows.push_back(ReportRow{suite, trial, digest, make_check("no_checks", 0, 1, false)});
    return;
  }
  for (const auto& c : checks) rows.push_back(ReportRow{suite, trial, digest, c});
}

void Report::append(Report other) {
  for (auto& row : other.rows) rows.push_back(std::move(row));
  for (auto& [k, v] : other.instances) instances.emplace(k, std::move(v));
}

std::size_t Report::passed() const {
  return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const ReportRow& r) { return r.check.pass; }));
}

std::size_t Report::failed() const { return rows.size() - passed(); }

io::Json Report::failures() const {
  Json out = Json::array();
  std::vector<std::string> seen;
  for (const auto& row : rows) {
    if (row.check.pass || std::find(seen.begin(), seen.end(), row.digest) != seen.end()) continue;
    seen.push_back(row.digest);
    out.push_back(Json{{"suite", row.suite},
                       {"trial", row.trial},
                       {"instance_digest", row.digest},
                       {"instance", instances.at(row.digest)}});
  }
  return out;
}

std::string instance_digest(const io::Json& payload) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : payload.dump()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : suites()) out.push_back(name);
    return out;
  }();
  return names;
}

Report run_suite(const std::string& suite, const CampaignConfig& cfg) {
  cfg.validate();
  const auto& names = suite_names();
  const auto it = std::find(names.begin(), names.end(), suite);
  if (it == names.end()) throw PreconditionError("unknown suite \"" + suite + "\"");
  return run_trials(static_cast<std::size_t>(it - names.begin()), cfg);
}

Report run_verify_lemmas(const CampaignConfig& cfg) {
  cfg.validate();
  Report report;
  for (std::size_t i = 0; i < suites().size(); ++i) report.append(run_trials(i, cfg));
  return report;
}

CommandOutcome run_counterexample(std::size_t depth, std::size_t horizon, const CampaignConfig& cfg) {
  MeasureSequence seq = sweep_sequence(depth);
  if (horizon != 0) seq = seq.with_horizon(horizon);
  const LineDescriptor da = LineDescriptor::double_arrow({Rational(1, 2)});
  const QuotientMap q = QuotientMap::double_arrow_projection(da);
  const PointId half = PointId::rational(Rational(1, 2));
  const Verdict verdict = check_criterion(q, seq, {half});

  CommandOutcome out;
  out.payload = Json{{"sequence", io::to_json(seq)}, {"verdict", io::to_json(verdict)}};
  const std::string suite = "counterexample";
  out.report.add(suite, 0, out.payload,
                 {equal_check("certificate_analytic",
                              Rational(seq.certificate() == MeasureSequence::Certificate::Analytic ? 1 : 0), 1),
                  equal_check("verdict_not_extendable",
                              Rational(verdict.kind == Verdict::Kind::NotExtendable ? 1 : 0), 1),
                  make_check("witness_hits", Rational(verdict.hits), Rational(depth), verdict.hits >= depth,
                             verdict.witness ? verdict.witness->to_string() : std::string("none"))});

  // |∫ f dμ_n| = |f(a_n) − f(b_n)| ≤ slope(f)·(b_n − a_n) for PL f.
  const LineDescriptor unit = LineDescriptor::unit_interval();
  for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
    InstanceRng rng(trial_seed(cfg.seed, suites().size(), trial), cfg.budget);
    TestFunction f = random_continuous(rng, unit);
    while (f.kind() != TestFunction::Kind::PiecewiseLinear) f = random_continuous(rng, unit);
    Rational slope = 0;
    const auto& nodes = f.nodes();
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
      slope = max(slope, abs(Rational((nodes[i + 1].value - nodes[i].value) / (nodes[i + 1].x - nodes[i].x))));
    }
    std::vector<Check> checks;
    for (std::size_t n = 1; n <= seq.horizon(); ++n) {
      const auto [a, b] = sweep_interval(n);
      const Rational pairing = abs(rs_integral(f, NBVProfile(seq.at(n))));
      checks.push_back(make_check("pl_bound", pairing, slope * (b - a), pairing <= slope * (b - a),
                                  "n=" + std::to_string(n)));
    }
    out.report.add(suite, trial + 1, Json{{"function", io::to_json(f)}, {"depth", depth}}, checks);
  }
  return out;
}

io::Json pipeline_payload(const PipelineInstance& instance, std::size_t horizon) {
  Json gens = Json::array();
  for (const auto& g : instance.x.generators) gens.push_back(io::to_json(g));
  Json t0 = Json::array();
  for (const auto& psi : instance.t0) {
    Json coords = Json::array();
    for (const auto& c : psi.coords()) coords.push_back(io::rational_to_json(c));
    t0.push_back(coords);
  }
  Json j{{"line", io::to_json(instance.k)}, {"generators", gens}, {"t0", t0}};
  if (!instance.x.matrix.empty()) {
    Json m = Json::array();
    for (const auto& row : instance.x.matrix) {
      Json jr = Json::array();
      for (const auto& v : row) jr.push_back(io::rational_to_json(v));
      m.push_back(jr);
    }
    j["matrix"] = m;
  }
  if (horizon != 0) j["horizon"] = horizon;
  return j;
}

io::Json decompose_payload(const OperatorR& r, const MeasureSequence& seq, const std::vector<PointId>& sample) {
  Json s = Json::array();
  for (const auto& p : sample) s.push_back(io::to_json(p));
  return Json{{"operator", io::to_json(r)}, {"sequence", io::to_json(seq)}, {"sample", s}};
}

io::Json hierarchy_payload(const OperatorR& r, const Rational& delta) {
  return Json{{"operator", io::to_json(r)}, {"delta", io::rational_to_json(delta)}};
}

static CommandOutcome run_decompose_input_impl(const io::Json& input, const CampaignConfig& cfg) {
  const OperatorR r = io::operator_from_json(input.at("operator"));
  MeasureSequence seq = io::sequence_from_json(input.at("sequence"));
  if (!(seq.line() == r.line())) throw ParseError("sequence and operator live on different lines");
  const std::vector<PointId> sample = input.contains("sample") ? points_from_json(input.at("sample"), r.line())
                                      : r.line().is_finite()  ? all_points(r.line())
                                                              : canonical_points(r.line(), 48);
  const DecompositionConfig dc = cfg.decomposition();
  const DecompositionResult result = decompose(r, seq, dc);
  const std::vector<Check> checks = verify_decomposition(r, seq, dc, result, sample);
  CommandOutcome out;
  Json jc = Json::array();
  for (const auto& c : checks) jc.push_back(io::to_json(c));
  out.payload = Json{{"result", io::to_json(result)}, {"checks", jc}};
  out.report.add("decompose", 0, input, checks);
  return out;
}

static CommandOutcome run_pipeline_input_impl(const io::Json& input, const CampaignConfig& cfg) {
  PipelineInstance instance{io::line_from_json(input.at("line")), {}, {}};
  for (const auto& g : input.at("generators")) instance.x.generators.push_back(io::function_from_json(g, instance.k));
  if (input.contains("matrix")) {
    for (const auto& row : input.at("matrix")) {
      lp::Vector v;
      for (const auto& x : row) v.push_back(io::rational_from_json(x));
      instance.x.matrix.push_back(std::move(v));
    }
  }
  for (const auto& coords : input.at("t0")) {
    lp::Vector v;
    for (const auto& x : coords) v.push_back(io::rational_from_json(x));
    if (v.size() != (instance.x.matrix.empty() ? instance.x.generators.size() : instance.x.matrix.front().size())) {
      throw ParseError("functional has the wrong number of coordinates");
    }
    instance.t0.push_back(DualVector::finite(std::move(v)));
  }
  const std::size_t horizon = input.contains("horizon") ? input.at("horizon").get<std::size_t>() : 0;
  const PipelineResult result = full_pipeline(instance.k, instance.x, instance.t0, cfg.decomposition(), horizon);
  CommandOutcome out;
  Json tprime = Json::array();
  for (const auto& mu : result.tprime) tprime.push_back(io::atoms_to_json(mu));
  out.payload = Json{{"report", io::to_json(result.report)}, {"tprime", tprime}};
  out.report.add("pipeline", 0, input, result.report.checks);
  return out;
}

static CommandOutcome run_hierarchy_input_impl(const io::Json& input, const CampaignConfig& cfg) {
  const OperatorR r = io::operator_from_json(input.at("operator"));
  const Rational delta = input.contains("delta") ? io::rational_from_json(input.at("delta")) : cfg.decomposition().delta();
  const Hierarchy h = compute_hierarchy(r, delta, cfg.max_stage);
  CommandOutcome out;
  out.payload = io::to_json(h);
  out.report.add("hierarchy", 0, input,
                 {equal_check("terminal_empty", Rational(h.levels.back().is_empty() ? 1 : 0), 1)});
  return out;
}

namespace {

/// Malformed input propagates; any other library error becomes a failing
/// row so that the instance is serialized for replay.
CommandOutcome guarded(const std::string& command, const io::Json& input, const CampaignConfig& cfg,
                       CommandOutcome (*impl)(const io::Json&, const CampaignConfig&)) {
  try {
    return impl(input, cfg);
  } catch (const ParseError&) {
    throw;
  } catch (const PreconditionError&) {
    throw;
  } catch (const Error& e) {
    CommandOutcome out;
    out.payload = Json{{"error", e.what()}};
    out.report.add(command, 0, input, {make_check("exception", 1, 0, false, e.what())});
    return out;
  }
}

}  // namespace

CommandOutcome run_decompose_input(const io::Json& input, const CampaignConfig& cfg) {
  return guarded("decompose", input, cfg, run_decompose_input_impl);
}

CommandOutcome run_pipeline_input(const io::Json& input, const CampaignConfig& cfg) {
  return guarded("pipeline", input, cfg, run_pipeline_input_impl);
}

CommandOutcome run_hierarchy_input(const io::Json& input, const CampaignConfig& cfg) {
  return guarded("hierarchy", input, cfg, run_hierarchy_input_impl);
}

std::string to_csv(const Report& report, bool decimal) {
  std::ostringstream os;
  os << "suite,trial,instance_digest,check,lhs,rhs,pass";
  if (decimal) os << ",approx_lhs,approx_rhs";
  os << '\n';
  for (const auto& row : report.rows) {
    os << csv_field(row.suite) << ',' << row.trial << ',' << row.digest << ',' << csv_field(row.check.name) << ','
       << to_string(row.check.lhs) << ',' << to_string(row.check.rhs) << ',' << (row.check.pass ? "true" : "false");
    if (decimal) os << ',' << to_decimal(row.check.lhs) << ',' << to_decimal(row.check.rhs);
    os << '\n';
  }
  return os.str();
}

io::Json to_json(const Report& report, bool decimal) {
  Json instances = Json::object();
  for (const auto& [k, v] : report.instances) instances[k] = v;
  return Json{{"rows", rows_json(report, decimal)},
              {"summary", {{"rows", report.rows.size()}, {"passed", report.passed()}, {"failed", report.failed()}}},
              {"instances", instances}};
}

}  // namespace sobczyk
