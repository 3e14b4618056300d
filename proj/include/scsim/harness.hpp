#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "scsim/agents.hpp"
#include "scsim/kernel.hpp"
#include "scsim/metrics.hpp"
#include "scsim/scenario.hpp"

namespace scsim {

struct RunOutputs {
  std::ostream* trace = nullptr;
  std::ostream* timeseries = nullptr;
};

// One fully wired world: kernel, the four agents, order store and metrics.
// Exposed so tests can reach into agent state after a run.
class Simulation {
public:
  Simulation(const ScenarioSpec& spec, std::uint64_t seed, RunOutputs outputs = {});

  RunSummary run();
  ScorCard card() const;

  const ScenarioSpec& spec() const { return spec_; }
  const OrderStore& orders() const { return orders_; }
  const Manufacturer& manufacturer() const { return *manufacturer_; }
  const Supplier& supplier() const { return *supplier_; }
  const MetricsBuilder& metrics() const { return metrics_; }
  Kernel& kernel() { return kernel_; }

private:
  ScenarioSpec spec_;
  std::uint64_t seed_;
  OrderStore orders_;
  Kernel kernel_;
  MetricsBuilder metrics_;
  std::unique_ptr<Customer> customer_;
  std::unique_ptr<Distributor> distributor_;
  std::unique_ptr<Manufacturer> manufacturer_;
  std::unique_ptr<Supplier> supplier_;
  bool ran_ = false;
};

ScorCard run_scenario(const ScenarioSpec& spec, std::uint64_t seed, RunOutputs outputs = {});

struct ReplicationSet {
  std::vector<std::uint64_t> seeds;  // master_seed + r
  std::vector<ScorCard> cards;
};

// Replication r runs with master_seed + r, so two scenarios replicated from
// the same spec share seeds pairwise (common random numbers).
ReplicationSet run_replications(const ScenarioSpec& spec);

struct SummaryStat {
  bool computed = false;
  double mean = 0.0;
  double stddev = 0.0;
  double ci_half = 0.0;  // 95% normal approximation
};

SummaryStat summarize(const std::vector<std::optional<double>>& values);

// 100 * (perturbed - baseline) / baseline; NotComputed when baseline is 0.
std::optional<double> percent_delta(double baseline, double perturbed);

enum class Verdict { Pass, Fail, NotAsserted };

std::string_view verdict_name(Verdict v);

inline constexpr std::array<std::string_view, 5> kMeasurements = {
    "cycle_time", "worker_utilization", "waiting_time_in_process",
    "wip_average", "rejected_parts"};

struct MeasurementCell {
  SummaryStat baseline;
  SummaryStat perturbed;
  std::optional<double> delta_pct;
  std::optional<double> ci_low;   // 95% CI of the delta, percent
  std::optional<double> ci_high;
  bool near_zero = false;         // |delta| < 0.01%
  int expected_sign = 0;          // +1 asserted increase, 0 unasserted
  Verdict verdict = Verdict::NotAsserted;
  std::string note;
};

struct ReportRow {
  std::string attribute;
  std::string metric;   // SCOR Level-1 metric label
  std::string issue;
  std::string tag;      // perturbation tag
  std::array<MeasurementCell, 5> cells;  // kMeasurements order
};

struct SensitivityReport {
  std::string baseline_name;
  std::uint64_t master_seed = 0;
  int replications = 0;
  double horizon_days = 0.0;
  double warmup_days = 0.0;
  std::vector<std::uint64_t> seeds;
  std::vector<ReportRow> rows;

  bool all_asserted_pass() const;
};

// Builds one report row from paired replication sets (CRN assumed).
ReportRow build_row(const std::string& attribute, const std::string& metric,
                    const std::string& issue, const std::string& tag,
                    const ReplicationSet& baseline, const ReplicationSet& perturbed,
                    const std::array<int, 5>& expected_signs);

// The four-row sensitivity analysis: turnover x1.32, burst 20 @ U(10,15),
// error +0.05, supplier lead 7 days, each against the common baseline.
SensitivityReport sensitivity_suite(const ScenarioSpec& baseline);

}  // namespace scsim
