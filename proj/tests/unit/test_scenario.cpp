#include <doctest.h>

#include <json.hpp>

#include "scsim/scenario.hpp"

using namespace scsim;
using nlohmann::json;

TEST_CASE("a minimal scenario takes every default") {
  const auto spec = ScenarioSpec::from_json(json{{"name", "b"}});
  CHECK(spec.name == "b");
  CHECK(spec.horizon_days == 2000.0);
  CHECK(spec.warmup_days == 200.0);
  CHECK(spec.replications == 20);
  CHECK(spec.master_seed == 42);
  CHECK(spec.demand.mean_interarrival_days == 0.125);
  CHECK(spec.demand.order_size == 1);
  CHECK(!spec.demand.burst.enabled);
  CHECK(spec.manufacturer.workers == 10);
  CHECK(spec.manufacturer.error_probability == 0.05);
  CHECK(spec.supplier.lead_time_days == 1.0);
}

TEST_CASE("structural bounds are enforced on parse") {
  CHECK_THROWS_AS(ScenarioSpec::from_json(json{{"manufacturer", {{"workers", 0}}}}),
                  ConfigError);
  CHECK_THROWS_AS(ScenarioSpec::from_json(json{{"horizon_days", -1.0}}), ConfigError);
  CHECK_THROWS_AS(
      ScenarioSpec::from_json(json{{"horizon_days", 100.0}, {"warmup_days", 100.0}}),
      ConfigError);
  CHECK_THROWS_AS(
      ScenarioSpec::from_json(json{{"manufacturer", {{"error_probability", 1.5}}}}),
      ConfigError);
  // burst interval bounds are checked even while the burst is disabled
  CHECK_THROWS_AS(
      ScenarioSpec::from_json(json{
          {"demand",
           {{"burst", {{"interval_min_days", 15.0}, {"interval_max_days", 10.0}}}}}}),
      ConfigError);
}

TEST_CASE("unknown keys are rejected, not ignored") {
  CHECK_THROWS_AS(ScenarioSpec::from_json(json{{"horizonDays", 100.0}}), ConfigError);
  CHECK_THROWS_AS(
      ScenarioSpec::from_json(json{{"manufacturer", {{"worker", 5}}}}),
      ConfigError);
  CHECK_THROWS_AS(
      ScenarioSpec::from_json(json{
          {"demand", {{"interarrival", {{"type", "exponential"}, {"rate", 2.0}}}}}}),
      ConfigError);
}

TEST_CASE("dotted-path overrides rewrite nested fields") {
  json raw = {{"name", "base"}};
  apply_override(raw, "manufacturer.error_probability", "0.1");
  apply_override(raw, "demand.burst.enabled", "true");
  apply_override(raw, "name", "tweaked");
  const auto spec = ScenarioSpec::from_json(raw);
  CHECK(spec.manufacturer.error_probability == 0.1);
  CHECK(spec.demand.burst.enabled);
  CHECK(spec.name == "tweaked");

  CHECK_THROWS_AS(apply_override(raw, "", "1"), ConfigError);
  CHECK_THROWS_AS(apply_override(raw, "demand..x", "1"), ConfigError);
  CHECK_THROWS_AS(apply_override(raw, "name.sub", "1"), ConfigError);
}

TEST_CASE("to_json is a fixed point under reparse") {
  ScenarioSpec spec;
  spec.name = "roundtrip";
  spec.demand.burst.enabled = true;
  spec.manufacturer.service = Dist::uniform(0.5, 1.5);
  spec.supplier.lead = Dist::exponential(2.0);

  const auto j1 = spec.to_json();
  const auto back = ScenarioSpec::from_json(j1);
  const auto j2 = back.to_json();
  CHECK(j1 == j2);
  CHECK(back == spec);
}

TEST_CASE("perturbations touch exactly one parameter group") {
  ScenarioSpec base;
  base.workforce.annual_turnover_rate = 0.25;

  const auto turn = apply_perturbation(base, Perturbation::turnover(1.32));
  CHECK(turn.workforce.annual_turnover_rate == doctest::Approx(0.33));
  CHECK(turn.manufacturer.error_probability == base.manufacturer.error_probability);
  CHECK(turn.name == "baseline+turnover_x1.32");

  const auto err = apply_perturbation(base, Perturbation::error(0.05));
  CHECK(err.manufacturer.error_probability == doctest::Approx(0.10));
  CHECK(!err.demand.burst.enabled);

  const auto burst = apply_perturbation(base, Perturbation::burst(20, 10.0, 15.0));
  CHECK(burst.demand.burst.enabled);
  CHECK(burst.demand.burst.size == 20);
  CHECK(burst.supplier.lead_time_days == base.supplier.lead_time_days);

  const auto lead = apply_perturbation(base, Perturbation::lead_time(7.0));
  CHECK(lead.supplier.lead_time_days == 7.0);
  CHECK(lead.supplier.lead_dist() == Dist::constant(7.0));
}

TEST_CASE("a perturbation that breaks an invariant is rejected") {
  ScenarioSpec base;
  base.manufacturer.error_probability = 0.97;
  CHECK_THROWS_AS(apply_perturbation(base, Perturbation::error(0.05)), ConfigError);
}

TEST_CASE("overload warnings fire when demand meets capacity") {
  ScenarioSpec spec;
  CHECK(spec.validate().empty());

  spec.manufacturer.workers = 1;  // offered load far above one worker
  const auto warnings = spec.validate();
  REQUIRE(warnings.size() == 1);
  CHECK(warnings[0].find("capacity") != std::string::npos);
}
