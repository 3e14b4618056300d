// Command-line front end: run scenarios, sensitivity analyses and CRN
// comparisons over scenario JSON files.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "scsim/harness.hpp"
#include "scsim/report_io.hpp"
#include "scsim/scenario.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitFault = 2;

json load_raw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw scsim::ConfigError("cannot open scenario file: " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw scsim::ConfigError("scenario parse error in " + path + ": " + e.what());
  }
}

scsim::ScenarioSpec load_with_overrides(const std::string& path,
                                        const std::vector<std::string>& overrides) {
  json raw = load_raw(path);
  for (const auto& kv : overrides) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) {
      throw scsim::ConfigError("--set expects key=value, got '" + kv + "'");
    }
    scsim::apply_override(raw, kv.substr(0, eq), kv.substr(eq + 1));
  }
  return scsim::ScenarioSpec::from_json(raw);
}

void print_warnings(const scsim::ScenarioSpec& spec) {
  for (const auto& warning : spec.validate()) {
    std::cerr << "warning: " << warning << "\n";
  }
}

void ensure_outdir(const std::string& outdir) {
  if (!outdir.empty()) fs::create_directories(outdir);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Four-tier supply-chain simulator with SCOR metric cards and a "
               "common-random-number sensitivity harness"};
  app.require_subcommand(1);

  std::vector<std::string> overrides;
  std::string outdir;
  std::optional<std::uint64_t> seed_override;
  std::optional<int> reps_override;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--set", overrides, "Dotted-path override, e.g. manufacturer.workers=5")
        ->take_all();
    cmd->add_option("-o,--output", outdir, "Output directory");
    cmd->add_option("--seed", seed_override, "Master seed override");
    cmd->add_option("--replications", reps_override, "Replication count override");
  };

  std::string scenario_path, scenario_path_b;
  bool emit_timeseries = false, emit_trace = false;

  auto* run_cmd = app.add_subcommand("run", "Run one replication and emit the SCOR card");
  run_cmd->add_option("scenario", scenario_path, "Scenario JSON file")->required();
  run_cmd->add_flag("--timeseries", emit_timeseries, "Also write timeseries.csv (needs -o)");
  run_cmd->add_flag("--trace", emit_trace, "Also write trace.txt (needs -o)");
  add_common(run_cmd);

  auto* sens_cmd = app.add_subcommand("sensitivity", "Run the four-row sensitivity suite");
  sens_cmd->add_option("scenario", scenario_path, "Baseline scenario JSON file")->required();
  add_common(sens_cmd);

  auto* cmp_cmd = app.add_subcommand("compare", "Compare two scenarios under CRN");
  cmp_cmd->add_option("baseline", scenario_path, "Baseline scenario JSON file")->required();
  cmp_cmd->add_option("other", scenario_path_b, "Comparison scenario JSON file")->required();
  add_common(cmp_cmd);

  auto* val_cmd = app.add_subcommand("validate", "Validate a scenario and echo resolved spec");
  val_cmd->add_option("scenario", scenario_path, "Scenario JSON file")->required();
  add_common(val_cmd);

  CLI11_PARSE(app, argc, argv);

  try {
    scsim::ScenarioSpec spec = load_with_overrides(scenario_path, overrides);
    if (seed_override) spec.master_seed = *seed_override;
    if (reps_override) spec.replications = *reps_override;
    spec.validate();
    print_warnings(spec);

    if (app.got_subcommand(val_cmd)) {
      std::cout << spec.to_json().dump(2) << "\n";
      return kExitOk;
    }

    if (app.got_subcommand(run_cmd)) {
      if ((emit_timeseries || emit_trace) && outdir.empty()) {
        throw scsim::ConfigError("--timeseries/--trace require -o <dir>");
      }
      ensure_outdir(outdir);
      std::ostringstream trace, timeseries;
      scsim::RunOutputs outputs;
      if (emit_trace) outputs.trace = &trace;
      if (emit_timeseries) outputs.timeseries = &timeseries;
      const scsim::ScorCard card = scsim::run_scenario(spec, spec.master_seed, outputs);
      const std::string card_text = scsim::card_to_json(card).dump(2) + "\n";
      if (outdir.empty()) {
        std::cout << card_text;
      } else {
        scsim::write_file(outdir + "/card.json", card_text);
        if (emit_trace) scsim::write_file(outdir + "/trace.txt", trace.str());
        if (emit_timeseries) scsim::write_file(outdir + "/timeseries.csv", timeseries.str());
      }
      return kExitOk;
    }

    if (app.got_subcommand(sens_cmd)) {
      const scsim::SensitivityReport report = scsim::sensitivity_suite(spec);
      const std::string table = scsim::render_table(report);
      if (!outdir.empty()) {
        ensure_outdir(outdir);
        scsim::write_file(outdir + "/report.json",
                          scsim::report_to_json(report).dump(2) + "\n");
        scsim::write_file(outdir + "/report.txt", table);
      }
      std::cout << table;
      return kExitOk;
    }

    if (app.got_subcommand(cmp_cmd)) {
      scsim::ScenarioSpec other = load_with_overrides(scenario_path_b, overrides);
      if (seed_override) other.master_seed = *seed_override;
      if (reps_override) other.replications = *reps_override;
      // Common random numbers: the comparison reuses the baseline seeds.
      other.master_seed = spec.master_seed;
      other.replications = spec.replications;
      other.validate();
      print_warnings(other);
      const auto base_set = scsim::run_replications(spec);
      const auto other_set = scsim::run_replications(other);
      const std::string text =
          scsim::compare_to_json(spec.name, other.name, base_set, other_set).dump(2) + "\n";
      if (outdir.empty()) {
        std::cout << text;
      } else {
        ensure_outdir(outdir);
        scsim::write_file(outdir + "/compare.json", text);
      }
      return kExitOk;
    }
  } catch (const scsim::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const scsim::SimFault& e) {
    std::cerr << "simulation fault: " << e.what() << "\n";
    return kExitFault;
  }
  return kExitOk;
}
