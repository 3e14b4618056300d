#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "scsim/observer.hpp"

namespace scsim {

// Integral of a step function over time, truncated to clock >= warmup.
class TimeWeighted {
public:
  explicit TimeWeighted(double warmup = 0.0) : warmup_(warmup) {}

  void step(double t, double value);
  void close(double t_end);

  double integral() const { return integral_; }
  double current() const { return value_; }
  double average(double span) const { return span > 0.0 ? integral_ / span : 0.0; }

private:
  double warmup_ = 0.0;
  double last_t_ = 0.0;
  double value_ = 0.0;
  double integral_ = 0.0;
};

// Per-entity observations (mean only; the harness aggregates across runs).
struct Tally {
  std::int64_t count = 0;
  double sum = 0.0;

  void record(double x) { ++count; sum += x; }
  std::optional<double> mean() const {
    if (count == 0) return std::nullopt;
    return sum / static_cast<double>(count);
  }
};

// The computed SCOR card. nullopt means NotComputed: either a metric with a
// zero denominator, or one of the financial/flexibility slots that needs
// cost data the model does not carry. Never NaN.
struct ScorCard {
  std::string scenario;
  std::uint64_t seed = 0;

  std::optional<double> delivery_performance;        // fraction
  std::optional<double> fill_rate;                   // fraction
  std::optional<double> perfect_order_fulfilment;    // fraction
  std::optional<double> order_fulfilment_lead_time;  // days/order
  std::optional<double> demand_chain_response_time;  // NotComputed
  std::optional<double> delivery_flexibility;        // NotComputed
  std::optional<double> sc_management_cost;          // NotComputed
  std::optional<double> cost_of_goods_sold;          // NotComputed
  std::optional<double> value_added_productivity;    // good units / worker-day
  std::optional<double> cash_to_cash;                // NotComputed
  std::optional<double> inventory_days_of_supply;    // days
  std::optional<double> asset_turns;                 // NotComputed
  std::optional<double> cycle_time;                  // days/unit, Make stage
  std::optional<double> worker_utilization;          // fraction
  std::optional<double> waiting_time_in_process;     // days/unit
  std::optional<double> wip_average;                 // units
  std::optional<double> rejected_parts;              // count

  // Auxiliary diagnostics (not part of the SCOR catalog above).
  double inspections = 0.0;
  double good_units = 0.0;
  double completions_all = 0.0;     // good + rejected, post-warmup
  double throughput_all = 0.0;      // completions_all per day
  std::optional<double> flow_time_all;  // release -> completion, all units
  std::optional<double> wip_queue_average;

  struct Entry {
    std::string_view name;
    std::string_view unit;
    std::optional<double> value;
  };
  std::vector<Entry> entries() const;  // fixed catalog order
  std::optional<double> by_name(std::string_view name) const;
};

// |L - lambda * W| / L on the Make stage, with lambda counting all completed
// units (good + rejected) and W the release-to-completion flow time.
std::optional<double> littles_law_residual(const ScorCard& card, double throughput);
std::optional<double> littles_law_residual(const ScorCard& card);

// All-time counters for the exact conservation identities.
struct ConservationTotals {
  std::int64_t units_queued = 0;
  std::int64_t units_good = 0;
  std::int64_t units_rejected = 0;
  std::int64_t units_in_process = 0;  // queued - good - rejected, tracked live
  std::int64_t demand_units = 0;
  std::int64_t delivered_units = 0;
  std::int64_t raw_arrived = 0;
  std::int64_t raw_consumed = 0;
  std::int64_t raw_level = 0;
};

class MetricsBuilder : public SimObserver {
public:
  // timeseries, when given, receives a CSV row at every step-function change:
  // time,wip,busy_workers,staffed_positions,raw_units
  explicit MetricsBuilder(double warmup, std::ostream* timeseries = nullptr);

  void on_order_created(double t, const Order& order) override;
  void on_order_fulfilled(double t, const Order& order) override;
  void on_unit_queued(double t, std::int64_t unit_id) override;
  void on_service_start(double t, std::int64_t unit_id, double wait) override;
  void on_unit_completed(double t, std::int64_t unit_id, bool good, double flow_time) override;
  void on_staffing_change(double t, int busy, int staffed) override;
  void on_raw_change(double t, std::int64_t raw_units) override;
  void on_raw_consumed(double t, std::int64_t qty) override;
  void on_raw_arrived(double t, std::int64_t qty) override;
  void on_horizon_end(double t) override;

  ScorCard finalize(const std::string& scenario, std::uint64_t seed, double horizon) const;

  const ConservationTotals& conservation() const { return conservation_; }

private:
  void emit_row(double t);

  double warmup_ = 0.0;
  bool closed_ = false;
  double close_time_ = 0.0;
  std::ostream* timeseries_ = nullptr;

  std::int64_t wip_count_ = 0;
  int busy_ = 0;
  int staffed_ = 0;
  std::int64_t raw_now_ = 0;

  TimeWeighted wip_;
  TimeWeighted busy_time_;
  TimeWeighted staffed_time_;
  TimeWeighted raw_;

  Tally waits_;
  Tally cycles_;      // good units only
  Tally flows_all_;   // good + rejected
  Tally order_lead_;

  std::int64_t rejects_ = 0;
  std::int64_t inspections_ = 0;
  std::int64_t good_units_pw_ = 0;
  std::int64_t consumed_pw_ = 0;
  std::int64_t demanded_units_pw_ = 0;
  std::int64_t filled_on_time_units_ = 0;
  std::int64_t fulfilled_orders_ = 0;
  std::int64_t on_time_orders_ = 0;
  std::int64_t perfect_orders_ = 0;

  ConservationTotals conservation_;
};

}  // namespace scsim
