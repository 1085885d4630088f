#pragma once

// Property campaigns over random instances and single-instance commands,
// with deterministic CSV/JSON reports.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sobczyk/random_instances.hpp"
#include "sobczyk/serialize.hpp"

namespace sobczyk {

struct CampaignConfig {
  std::uint64_t seed = 1;
  std::size_t trials = 20;
  std::size_t horizon = 12;
  Rational eps{1, 10};
  Rational epsp{1, 2};
  std::size_t max_stage = kDefaultMaxStage;
  InstanceBudget budget;

  /// Throws PreconditionError unless trials ≥ 1, horizon ≥ 1, eps, epsp > 0.
  void validate() const;
  DecompositionConfig decomposition() const { return DecompositionConfig{eps, epsp, max_stage}; }
};

struct ReportRow {
  std::string suite;
  std::size_t trial = 0;
  std::string digest;
  Check check;
};

struct Report {
  std::vector<ReportRow> rows;
  /// Instance payloads by digest.
  std::map<std::string, io::Json> instances;

  /// Appends one row per check; a trial without checks gets a failing row.
  void add(const std::string& suite, std::size_t trial, const io::Json& payload, const std::vector<Check>& checks);
  void append(Report other);

  std::size_t passed() const;
  std::size_t failed() const;
  bool all_pass() const { return failed() == 0; }
  /// Payloads of instances with at least one failing row.
  io::Json failures() const;
};

/// FNV-1a 64 of the compact JSON dump, as 16 hex digits.
std::string instance_digest(const io::Json& payload);

/// nbv_isometry, stieltjes, tilde, skeleton, flower, hierarchy,
/// decomposition, pipeline.
const std::vector<std::string>& suite_names();

/// Trials of one suite; each trial draws from its own generator seeded by
/// (seed, suite, trial). Throws PreconditionError on an unknown suite.
Report run_suite(const std::string& suite, const CampaignConfig& cfg);
/// Every suite in suite_names() order.
Report run_verify_lemmas(const CampaignConfig& cfg);

struct CommandOutcome {
  io::Json payload;
  Report report;
};

/// The dyadic sweep against the double-arrow projection: PL weak*-null
/// bounds per n and the criterion verdict at t = ½.
CommandOutcome run_counterexample(std::size_t depth, std::size_t horizon, const CampaignConfig& cfg);

/// {"operator", "sequence", "sample"?}. Throws ParseError on malformed input.
CommandOutcome run_decompose_input(const io::Json& input, const CampaignConfig& cfg);
/// {"line", "generators", "matrix"?, "t0": [[coords]...], "horizon"?}.
CommandOutcome run_pipeline_input(const io::Json& input, const CampaignConfig& cfg);
/// {"operator", "delta"?}; delta defaults to the config's δ.
CommandOutcome run_hierarchy_input(const io::Json& input, const CampaignConfig& cfg);

/// Input payloads in the formats above, for replay and golden files.
io::Json pipeline_payload(const PipelineInstance& instance, std::size_t horizon);
io::Json decompose_payload(const OperatorR& r, const MeasureSequence& seq, const std::vector<PointId>& sample);
io::Json hierarchy_payload(const OperatorR& r, const Rational& delta);

/// suite,trial,instance_digest,check,lhs,rhs,pass (+ approx_lhs,approx_rhs).
std::string to_csv(const Report& report, bool decimal = false);
/// {"rows": [...], "summary": {...}, "instances": {...}}.
io::Json to_json(const Report& report, bool decimal = false);

}  // namespace sobczyk
