#include "scsim/harness.hpp"

#include <cmath>

namespace scsim {

Simulation::Simulation(const ScenarioSpec& spec, std::uint64_t seed, RunOutputs outputs)
    : spec_(spec),
      seed_(seed),
      kernel_(seed),
      metrics_(spec.warmup_days, outputs.timeseries) {
  spec_.validate();
  kernel_.set_trace(outputs.trace);
  customer_ = std::make_unique<Customer>(spec_, orders_);
  distributor_ = std::make_unique<Distributor>(spec_, orders_);
  manufacturer_ = std::make_unique<Manufacturer>(spec_, orders_);
  supplier_ = std::make_unique<Supplier>(spec_);
  kernel_.register_agent(AgentId::Customer, customer_.get());
  kernel_.register_agent(AgentId::Distributor, distributor_.get());
  kernel_.register_agent(AgentId::Manufacturer, manufacturer_.get());
  kernel_.register_agent(AgentId::Supplier, supplier_.get());
  kernel_.add_observer(&metrics_);
}

RunSummary Simulation::run() {
  manufacturer_->start(kernel_);
  customer_->start(kernel_);
  if (spec_.warmup_days > 0.0) {
    kernel_.schedule_marker(spec_.warmup_days, EventKind::WarmupEnd);
  }
  auto summary = kernel_.run(spec_.horizon_days);
  ran_ = true;
  return summary;
}

ScorCard Simulation::card() const {
  return metrics_.finalize(spec_.name, seed_, spec_.horizon_days);
}

ScorCard run_scenario(const ScenarioSpec& spec, std::uint64_t seed, RunOutputs outputs) {
  Simulation sim(spec, seed, outputs);
  sim.run();
  return sim.card();
}

ReplicationSet run_replications(const ScenarioSpec& spec) {
  if (spec.replications < 1) throw ConfigError("replications must be >= 1");
  ReplicationSet set;
  for (int r = 0; r < spec.replications; ++r) {
    const std::uint64_t seed = spec.master_seed + static_cast<std::uint64_t>(r);
    set.seeds.push_back(seed);
    try {
      set.cards.push_back(run_scenario(spec, seed));
    } catch (const SimFault& fault) {
      throw SimFault("replication " + std::to_string(r) + ": " + fault.what());
    }
  }
  return set;
}

SummaryStat summarize(const std::vector<std::optional<double>>& values) {
  SummaryStat stat;
  if (values.empty()) return stat;
  double sum = 0.0;
  for (const auto& v : values) {
    if (!v) return stat;  // any NotComputed replication: summary NotComputed
    sum += *v;
  }
  const double n = static_cast<double>(values.size());
  stat.computed = true;
  stat.mean = sum / n;
  double ss = 0.0;
  for (const auto& v : values) ss += (*v - stat.mean) * (*v - stat.mean);
  stat.stddev = values.size() > 1 ? std::sqrt(ss / (n - 1.0)) : 0.0;
  stat.ci_half = 1.96 * stat.stddev / std::sqrt(n);
  return stat;
}

std::optional<double> percent_delta(double baseline, double perturbed) {
  if (baseline == 0.0) return std::nullopt;
  return 100.0 * (perturbed - baseline) / baseline;
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::NotAsserted: return "N/A";
  }
  return "N/A";
}

namespace {

std::vector<std::optional<double>> metric_values(const ReplicationSet& set,
                                                 std::string_view name) {
  std::vector<std::optional<double>> values;
  values.reserve(set.cards.size());
  for (const auto& card : set.cards) values.push_back(card.by_name(name));
  return values;
}

MeasurementCell build_cell(const ReplicationSet& baseline, const ReplicationSet& perturbed,
                           std::string_view name, int expected_sign) {
  MeasurementCell cell;
  cell.expected_sign = expected_sign;
  const auto base_values = metric_values(baseline, name);
  const auto pert_values = metric_values(perturbed, name);
  cell.baseline = summarize(base_values);
  cell.perturbed = summarize(pert_values);
  if (!cell.baseline.computed || !cell.perturbed.computed) {
    cell.verdict = expected_sign == 0 ? Verdict::NotAsserted : Verdict::Fail;
    cell.note = "not computed on every replication";
    return cell;
  }

  cell.delta_pct = percent_delta(cell.baseline.mean, cell.perturbed.mean);

  // CI of the delta from the paired per-replication differences (CRN).
  const std::size_t n = base_values.size();
  if (cell.delta_pct && n >= 2 && n == pert_values.size()) {
    std::vector<std::optional<double>> diffs;
    diffs.reserve(n);
    for (std::size_t r = 0; r < n; ++r) diffs.push_back(*pert_values[r] - *base_values[r]);
    const SummaryStat d = summarize(diffs);
    cell.ci_low = 100.0 * (d.mean - d.ci_half) / cell.baseline.mean;
    cell.ci_high = 100.0 * (d.mean + d.ci_half) / cell.baseline.mean;
    if (cell.baseline.mean < 0.0) std::swap(cell.ci_low, cell.ci_high);
  }

  cell.near_zero = cell.delta_pct && std::abs(*cell.delta_pct) < 0.01;
  if (expected_sign == 0) {
    cell.verdict = Verdict::NotAsserted;
  } else if (!cell.delta_pct) {
    cell.verdict = Verdict::Fail;
    cell.note = "baseline mean is zero; delta not computable";
  } else if (cell.near_zero) {
    cell.verdict = Verdict::Pass;  // flagged ~0
  } else if (cell.ci_low && cell.ci_high &&
             ((expected_sign > 0 && *cell.ci_low > 0.0) ||
              (expected_sign < 0 && *cell.ci_high < 0.0))) {
    cell.verdict = Verdict::Pass;
  } else {
    cell.verdict = Verdict::Fail;
  }
  return cell;
}

}  // namespace

ReportRow build_row(const std::string& attribute, const std::string& metric,
                    const std::string& issue, const std::string& tag,
                    const ReplicationSet& baseline, const ReplicationSet& perturbed,
                    const std::array<int, 5>& expected_signs) {
  ReportRow row;
  row.attribute = attribute;
  row.metric = metric;
  row.issue = issue;
  row.tag = tag;
  for (std::size_t i = 0; i < kMeasurements.size(); ++i) {
    row.cells[i] = build_cell(baseline, perturbed, kMeasurements[i], expected_signs[i]);
  }
  return row;
}

bool SensitivityReport::all_asserted_pass() const {
  for (const auto& row : rows) {
    for (const auto& cell : row.cells) {
      if (cell.expected_sign != 0 && cell.verdict != Verdict::Pass) return false;
    }
  }
  return true;
}

SensitivityReport sensitivity_suite(const ScenarioSpec& baseline) {
  baseline.validate();
  const ReplicationSet base = run_replications(baseline);

  SensitivityReport report;
  report.baseline_name = baseline.name;
  report.master_seed = baseline.master_seed;
  report.replications = baseline.replications;
  report.horizon_days = baseline.horizon_days;
  report.warmup_days = baseline.warmup_days;
  report.seeds = base.seeds;

  // Measurement order: cycle, utilization, waiting, wip, rejects.
  struct RowSpec {
    Perturbation perturbation;
    const char* attribute;
    const char* metric;
    const char* issue;
    std::array<int, 5> signs;
    const char* note;  // attached to the rejected-parts cell when non-null
  };
  const RowSpec row_specs[] = {
      {Perturbation::turnover(1.32), "Asset", "Resource turns",
       "Turnover (32% increased)", {+1, 0, +1, 0, 0}, nullptr},
      {Perturbation::burst(20, 10.0, 15.0), "Supply chain reliability", "Fill rate",
       "Demand fluctuation rate (Interruption 20 units every UNIF (10, 15) days)",
       {0, +1, +1, +1, 0},
       "reported for reference only; no sign is asserted for this cell"},
      {Perturbation::error(0.05), "Cost", "Value added employee productivity",
       "Human error (Increased 5%)", {+1, +1, 0, 0, +1}, nullptr},
      {Perturbation::lead_time(7.0), "Responsiveness", "Order fulfillment lead time",
       "Supplier lead time (1 day to 7 days)", {+1, 0, 0, +1, 0}, nullptr},
  };

  for (const auto& rs : row_specs) {
    const ScenarioSpec perturbed_spec = apply_perturbation(baseline, rs.perturbation);
    const ReplicationSet perturbed = run_replications(perturbed_spec);
    ReportRow row = build_row(rs.attribute, rs.metric, rs.issue, rs.perturbation.tag(),
                              base, perturbed, rs.signs);
    if (rs.note) row.cells[4].note = rs.note;
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace scsim
