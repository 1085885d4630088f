#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "sobczyk/campaign.hpp"
#include "sobczyk/error.hpp"

namespace {

using sobczyk::CampaignConfig;
using sobczyk::CommandOutcome;
using sobczyk::Report;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitMalformed = 2;

struct Options {
  std::uint64_t seed = 1;
  std::size_t trials = 20;
  std::size_t horizon = 0;
  std::string eps = "1/10";
  std::string epsp = "1/2";
  std::string out;
  std::string format = "csv";
  std::string input;
  std::size_t depth = 4;
  bool decimal = false;
};

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--seed", o.seed, "Campaign seed");
  cmd->add_option("--trials", o.trials, "Random instances per suite");
  cmd->add_option("--horizon", o.horizon, "Sequence horizon (0 keeps the default)");
  cmd->add_option("--eps", o.eps, "Target bound for the soft part, p/q");
  cmd->add_option("--epsp", o.epsp, "Schedule slack, p/q");
  cmd->add_option("--out", o.out, "Artifact path (stdout when absent)");
  cmd->add_option("--format", o.format, "Artifact format")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_flag("--decimal", o.decimal, "Add approximate decimal columns");
}

CampaignConfig config_from(const Options& o, std::size_t default_horizon) {
  CampaignConfig cfg;
  cfg.seed = o.seed;
  cfg.trials = o.trials;
  cfg.horizon = o.horizon == 0 ? default_horizon : o.horizon;
  cfg.eps = sobczyk::parse_rational(o.eps);
  cfg.epsp = sobczyk::parse_rational(o.epsp);
  cfg.validate();
  return cfg;
}

sobczyk::io::Json read_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw sobczyk::ParseError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return sobczyk::io::parse(ss.str());
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw sobczyk::ParseError("cannot write " + path);
  out << text;
}

/// Writes the artifact and, on failure, the failing instances for replay.
int finish(const Options& o, const Report& report, const sobczyk::io::Json* payload) {
  std::string text;
  if (o.format == "json") {
    sobczyk::io::Json j = sobczyk::to_json(report, o.decimal);
    if (payload) j["result"] = *payload;
    text = j.dump(2) + "\n";
  } else {
    text = sobczyk::to_csv(report, o.decimal);
  }
  write_text(o.out, text);
  std::cerr << "rows " << report.rows.size() << ", passed " << report.passed() << ", failed " << report.failed()
            << "\n";
  if (report.all_pass()) return kExitOk;
  const std::string fail_path = o.out.empty() ? std::string("sobczyk_failures.json") : o.out + ".failures.json";
  std::ofstream(fail_path, std::ios::binary) << report.failures().dump(2) << "\n";
  std::cerr << "failing instances written to " << fail_path << "\n";
  return kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification harness for c0-extension constructions on compact lines"};
  app.require_subcommand(1);
  Options o;

  auto* verify = app.add_subcommand("verify-lemmas", "Run every invariant suite on random instances");
  add_common(verify, o);
  std::vector<std::string> only;
  verify->add_option("--suite", only, "Restrict to these suites");

  auto* decompose = app.add_subcommand("decompose", "Decompose one instance and verify the result");
  add_common(decompose, o);
  decompose->add_option("--input", o.input, "Instance JSON")->required()->check(CLI::ExistingFile);

  auto* counter = app.add_subcommand("counterexample", "Dyadic sweep against the double-arrow quotient");
  add_common(counter, o);
  counter->add_option("--depth", o.depth, "Sweep depth")->check(CLI::Range(1, 30));

  auto* pipeline = app.add_subcommand("pipeline", "Extend an operator end to end and report the ratio");
  add_common(pipeline, o);
  pipeline->add_option("--input", o.input, "Instance JSON (random instances when absent)")->check(CLI::ExistingFile);

  auto* hierarchy = app.add_subcommand("hierarchy", "Dump the oscillation hierarchy of an operator");
  add_common(hierarchy, o);
  hierarchy->add_option("--input", o.input, "Instance JSON")->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitMalformed;
  }

  const auto start = std::chrono::steady_clock::now();
  int code = kExitOk;
  try {
    if (verify->parsed()) {
      const CampaignConfig cfg = config_from(o, 12);
      Report report;
      if (only.empty()) {
        report = sobczyk::run_verify_lemmas(cfg);
      } else {
        for (const auto& s : only) report.append(sobczyk::run_suite(s, cfg));
      }
      code = finish(o, report, nullptr);
    } else if (decompose->parsed()) {
      const CommandOutcome r = sobczyk::run_decompose_input(read_input(o.input), config_from(o, 12));
      code = finish(o, r.report, &r.payload);
    } else if (counter->parsed()) {
      const CommandOutcome r = sobczyk::run_counterexample(o.depth, o.horizon, config_from(o, 1));
      const auto& v = r.payload.at("verdict");
      std::cout << "verdict " << v.at("verdict").get<std::string>() << " witness "
                << (v.at("witness").is_null() ? std::string("none") : v.at("witness").dump()) << " hits "
                << v.at("hits").get<std::size_t>() << "\n";
      code = finish(o, r.report, &r.payload);
    } else if (pipeline->parsed()) {
      const CampaignConfig cfg = config_from(o, 12);
      if (!o.input.empty()) {
        const CommandOutcome r = sobczyk::run_pipeline_input(read_input(o.input), cfg);
        if (r.payload.contains("report")) {
          std::cout << "ratio " << r.payload.at("report").at("ratio").get<std::string>() << " bound "
                    << sobczyk::to_string(8 + cfg.eps) << "\n";
        }
        code = finish(o, r.report, &r.payload);
      } else {
        const Report report = sobczyk::run_suite("pipeline", cfg);
        sobczyk::Rational worst = 0;
        for (const auto& row : report.rows) {
          if (row.check.name == "ratio") worst = sobczyk::max(worst, row.check.lhs);
        }
        std::cout << "max ratio " << sobczyk::to_string(worst) << " bound " << sobczyk::to_string(8 + cfg.eps) << "\n";
        code = finish(o, report, nullptr);
      }
    } else if (hierarchy->parsed()) {
      const CommandOutcome r = sobczyk::run_hierarchy_input(read_input(o.input), config_from(o, 12));
      if (r.payload.contains("levels")) {
        for (const auto& level : r.payload.at("levels")) std::cout << level.dump() << "\n";
      }
      code = finish(o, r.report, &r.payload);
    }
  } catch (const sobczyk::ParseError& e) {
    std::cerr << "malformed input: " << e.what() << "\n";
    return kExitMalformed;
  } catch (const sobczyk::PreconditionError& e) {
    std::cerr << "invalid arguments or instance: " << e.what() << "\n";
    return kExitMalformed;
  } catch (const sobczyk::io::Json::exception& e) {
    std::cerr << "malformed input: " << e.what() << "\n";
    return kExitMalformed;
  } catch (const sobczyk::Error& e) {
    std::cerr << "assertion failed: " << e.what() << "\n";
    return kExitFailed;
  }
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  std::cerr << "wall-clock " << ms.count() << " ms\n";
  return code;
}
