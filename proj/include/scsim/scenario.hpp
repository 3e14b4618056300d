#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "scsim/rng.hpp"

namespace scsim {

struct BurstConfig {
  bool enabled = false;
  std::int64_t size = 20;               // units per interruption
  double interval_min_days = 10.0;      // UNIF(10, 15) between interruptions
  double interval_max_days = 15.0;
};

struct DemandConfig {
  double mean_interarrival_days = 0.125;
  std::int64_t order_size = 1;
  std::optional<Dist> interarrival;  // overrides the exponential default
  BurstConfig burst;

  Dist interarrival_dist() const {
    return interarrival ? *interarrival : Dist::exponential(mean_interarrival_days);
  }
};

struct ManufacturerConfig {
  int workers = 10;
  double service_mean_days = 0.9;
  std::optional<Dist> service;  // overrides the exponential default
  double error_probability = 0.05;
  std::int64_t reorder_point = 50;     // (r, Q) raw-material policy
  std::int64_t order_quantity = 100;
  std::int64_t initial_raw = 100;

  Dist service_dist() const {
    return service ? *service : Dist::exponential(service_mean_days);
  }
};

struct SupplierConfig {
  double lead_time_days = 1.0;
  std::optional<Dist> lead;  // overrides the constant default

  Dist lead_dist() const { return lead ? *lead : Dist::constant(lead_time_days); }
};

struct WorkforceConfig {
  double annual_turnover_rate = 2.0;  // expected departures per position per year
  double recruit_min_days = 5.0;
  double recruit_max_days = 10.0;
};

struct DeliveryConfig {
  double transit_days = 0.0;
  double quoted_lead_time_days = 3.0;
};

// Complete parameterization of one simulated world.
struct ScenarioSpec {
  std::string name = "baseline";
  double horizon_days = 2000.0;
  double warmup_days = 200.0;
  int replications = 20;
  std::uint64_t master_seed = 42;

  DemandConfig demand;
  ManufacturerConfig manufacturer;
  SupplierConfig supplier;
  WorkforceConfig workforce;
  DeliveryConfig delivery;

  // Throws ConfigError on an invariant violation; returns warnings (e.g.
  // offered load at or above effective capacity) otherwise.
  std::vector<std::string> validate() const;

  // Strict parse: unknown keys are rejected, missing fields take defaults.
  static ScenarioSpec from_json(const nlohmann::json& j);

  // Fully resolved spec, including the effective distribution of every
  // stochastic process; parse(to_json(s)) == s.
  nlohmann::ordered_json to_json() const;

  bool operator==(const ScenarioSpec&) const;
};

ScenarioSpec load_scenario_file(const std::string& path);

// Applies a dotted-path override such as "manufacturer.error_probability=0.1"
// to raw scenario JSON before parsing. The value is parsed as JSON when
// possible and treated as a string otherwise.
void apply_override(nlohmann::json& j, const std::string& dotted_path,
                    const std::string& value);

// One Table-3-style perturbation: exactly one parameter group changes.
struct Perturbation {
  enum class Kind { TurnoverMultiplier, EnableBurst, ErrorDelta, SupplierLeadTime };

  Kind kind = Kind::TurnoverMultiplier;
  double factor = 1.0;        // TurnoverMultiplier
  std::int64_t size = 20;     // EnableBurst
  double interval_min = 10.0;
  double interval_max = 15.0;
  double error_delta = 0.0;   // ErrorDelta (additive)
  double lead_days = 7.0;     // SupplierLeadTime

  static Perturbation turnover(double factor);
  static Perturbation burst(std::int64_t size, double min_days, double max_days);
  static Perturbation error(double delta);
  static Perturbation lead_time(double days);

  std::string tag() const;
};

// Deep copy with the perturbation applied and the name suffixed; throws
// ConfigError if the result violates a ScenarioSpec invariant.
ScenarioSpec apply_perturbation(const ScenarioSpec& spec, const Perturbation& p);

}  // namespace scsim
