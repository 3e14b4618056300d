#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <regex>
#include <sstream>

#include "scsim/report_io.hpp"

using namespace scsim;
using nlohmann::json;

namespace {

json load_schema(const char* name) {
  const std::string path = std::string(SCSIM_SOURCE_DIR) + "/schemas/" + name;
  std::ifstream in(path);
  REQUIRE(in.good());
  return json::parse(in);
}

ScenarioSpec tiny_spec() {
  ScenarioSpec spec;
  spec.name = "io";
  spec.horizon_days = 200.0;
  spec.warmup_days = 20.0;
  spec.replications = 3;
  return spec;
}

}  // namespace

TEST_CASE("round_sig keeps the stated number of significant digits") {
  CHECK(round_sig(123456.789, 6) == doctest::Approx(123457.0));
  CHECK(round_sig(0.000123456789, 6) == doctest::Approx(0.000123457));
  CHECK(round_sig(-9.87654321, 3) == doctest::Approx(-9.88));
  CHECK(round_sig(0.0, 6) == 0.0);
}

TEST_CASE("card JSON is a fixed point under emit-parse-emit") {
  const ScorCard card = run_scenario(tiny_spec(), 42);
  const auto j1 = card_to_json(card);
  const ScorCard back = card_from_json(j1);
  const auto j2 = card_to_json(back);
  CHECK(j1 == j2);
  CHECK(back.scenario == card.scenario);
  CHECK(back.seed == card.seed);
}

TEST_CASE("emitted documents validate against the shipped schemas") {
  const ScenarioSpec spec = tiny_spec();
  CHECK(validate_against_schema(load_schema("scenario.schema.json"), spec.to_json()).empty());

  const ScorCard card = run_scenario(spec, 42);
  CHECK(validate_against_schema(load_schema("scorecard.schema.json"), card_to_json(card)).empty());

  ScenarioSpec fast = spec;
  fast.replications = 2;
  fast.horizon_days = 120.0;
  const SensitivityReport report = sensitivity_suite(fast);
  CHECK(validate_against_schema(load_schema("report.schema.json"), report_to_json(report)).empty());
}

TEST_CASE("the schema validator reports violations instead of ignoring them") {
  const json schema = load_schema("scorecard.schema.json");
  json doc = card_to_json(run_scenario(tiny_spec(), 1));

  json extra = doc;
  extra["surprise"] = 1;
  CHECK(!validate_against_schema(schema, extra).empty());

  json missing = doc;
  missing.erase("seed");
  CHECK(!validate_against_schema(schema, missing).empty());

  json wrong = doc;
  wrong["metrics"]["cycle_time"]["value"] = "high";
  const auto errors = validate_against_schema(schema, wrong);
  REQUIRE(!errors.empty());
  CHECK(errors[0].find("cycle_time") != std::string::npos);
}

TEST_CASE("the rendered table and the JSON report agree on every percent") {
  ScenarioSpec spec = tiny_spec();
  spec.replications = 2;
  spec.horizon_days = 120.0;
  const SensitivityReport report = sensitivity_suite(spec);
  const std::string table = render_table(report);
  CHECK(table.find("Performance attribute") != std::string::npos);
  CHECK(table.find("Turnover (32% increased)") != std::string::npos);

  for (const auto& row : report.rows) {
    CHECK(table.find(row.issue) != std::string::npos);
    for (const auto& cell : row.cells) {
      if (!cell.delta_pct) continue;
      char buf[48];
      std::snprintf(buf, sizeof(buf), "%+.2f%%", *cell.delta_pct);
      CHECK(table.find(buf) != std::string::npos);
    }
  }
  // every asserted cell carries an explicit verdict
  const std::regex verdict_re(R"(\[(PASS|FAIL)\])");
  const auto count = std::distance(
      std::sregex_iterator(table.begin(), table.end(), verdict_re), std::sregex_iterator());
  int asserted = 0;
  for (const auto& row : report.rows) {
    for (const auto& cell : row.cells) asserted += cell.expected_sign != 0 ? 1 : 0;
  }
  CHECK(count == asserted);
}

TEST_CASE("trace and timeseries streams follow their documented formats") {
  ScenarioSpec spec = tiny_spec();
  spec.horizon_days = 30.0;
  spec.warmup_days = 0.0;
  std::ostringstream trace, timeseries;
  RunOutputs outputs;
  outputs.trace = &trace;
  outputs.timeseries = &timeseries;
  run_scenario(spec, 7, outputs);

  std::istringstream trace_lines(trace.str());
  std::string line;
  const std::regex trace_re(R"([0-9.eE+-]+\t\d+\t\w+\t\w+)");
  int traced = 0;
  while (std::getline(trace_lines, line)) {
    CAPTURE(line);
    CHECK(std::regex_match(line, trace_re));
    ++traced;
  }
  CHECK(traced > 50);

  std::istringstream ts_lines(timeseries.str());
  REQUIRE(std::getline(ts_lines, line));
  CHECK(line == "time,wip,busy_workers,staffed_positions,raw_units");
  const std::regex ts_re(R"([0-9.eE+-]+,-?\d+,-?\d+,-?\d+,-?\d+)");
  int rows = 0;
  while (std::getline(ts_lines, line)) {
    CAPTURE(line);
    CHECK(std::regex_match(line, ts_re));
    ++rows;
  }
  CHECK(rows > 50);
}

TEST_CASE("compare output carries per-metric means and deltas") {
  ScenarioSpec spec = tiny_spec();
  spec.replications = 2;
  const ReplicationSet base = run_replications(spec);
  const ReplicationSet other =
      run_replications(apply_perturbation(spec, Perturbation::error(0.05)));
  const auto j = compare_to_json(spec.name, "io+error", base, other);
  CHECK(j.at("baseline") == "io");
  CHECK(j.at("replications") == 2);
  const auto& deltas = j.at("deltas");
  CHECK(deltas.size() == 17);
  CHECK(deltas.at("rejected_parts").at("delta_pct").get<double>() > 0.0);
  CHECK(deltas.at("asset_turns").at("delta_pct").is_null());
}

TEST_CASE("write_file refuses unwritable paths") {
  CHECK_THROWS_AS(write_file("/nonexistent-dir/out.json", "x"), ConfigError);
  const std::string path = "/tmp/scsim_io_test.json";
  write_file(path, "{}");
  std::ifstream in(path);
  std::string body;
  in >> body;
  CHECK(body == "{}");
  std::remove(path.c_str());
}
