#include "scsim/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "scsim/errors.hpp"

namespace scsim {

void TimeWeighted::step(double t, double value) {
  const double from = std::max(last_t_, warmup_);
  if (t > from) integral_ += value_ * (t - from);
  last_t_ = t;
  value_ = value;
}

void TimeWeighted::close(double t_end) {
  const double from = std::max(last_t_, warmup_);
  if (t_end > from) integral_ += value_ * (t_end - from);
  last_t_ = t_end;
}

MetricsBuilder::MetricsBuilder(double warmup, std::ostream* timeseries)
    : warmup_(warmup),
      timeseries_(timeseries),
      wip_(warmup),
      busy_time_(warmup),
      staffed_time_(warmup),
      raw_(warmup) {
  if (timeseries_) *timeseries_ << "time,wip,busy_workers,staffed_positions,raw_units\n";
}

void MetricsBuilder::emit_row(double t) {
  if (!timeseries_) return;
  char buf[160];
  std::snprintf(buf, sizeof(buf), "%.12g,%lld,%d,%d,%lld\n", t,
                static_cast<long long>(wip_count_), busy_, staffed_,
                static_cast<long long>(raw_now_));
  *timeseries_ << buf;
}

void MetricsBuilder::on_order_created(double t, const Order& order) {
  conservation_.demand_units += order.qty;
  if (t >= warmup_) demanded_units_pw_ += order.qty;
}

void MetricsBuilder::on_order_fulfilled(double t, const Order& order) {
  conservation_.delivered_units += order.qty;
  if (t < warmup_) return;
  const bool on_time = *order.fulfilled_at <= order.due_at;
  ++fulfilled_orders_;
  order_lead_.record(*order.fulfilled_at - order.created_at);
  if (on_time) {
    ++on_time_orders_;
    if (order.first_pass) ++perfect_orders_;
    // Fill rate counts demanded units delivered inside the quoted window,
    // against the post-warmup demanded population.
    if (order.created_at >= warmup_) filled_on_time_units_ += order.qty;
  }
}

void MetricsBuilder::on_unit_queued(double t, std::int64_t) {
  ++conservation_.units_queued;
  ++conservation_.units_in_process;
  ++wip_count_;
  wip_.step(t, static_cast<double>(wip_count_));
  emit_row(t);
}

void MetricsBuilder::on_service_start(double t, std::int64_t, double wait) {
  if (t >= warmup_) waits_.record(wait);
}

void MetricsBuilder::on_unit_completed(double t, std::int64_t, bool good, double flow_time) {
  --conservation_.units_in_process;
  if (good) ++conservation_.units_good; else ++conservation_.units_rejected;
  --wip_count_;
  wip_.step(t, static_cast<double>(wip_count_));
  emit_row(t);
  if (t < warmup_) return;
  ++inspections_;
  flows_all_.record(flow_time);
  if (good) {
    ++good_units_pw_;
    cycles_.record(flow_time);
  } else {
    ++rejects_;
  }
}

void MetricsBuilder::on_staffing_change(double t, int busy, int staffed) {
  busy_ = busy;
  staffed_ = staffed;
  busy_time_.step(t, busy);
  staffed_time_.step(t, staffed);
  emit_row(t);
}

void MetricsBuilder::on_raw_change(double t, std::int64_t raw_units) {
  raw_now_ = raw_units;
  conservation_.raw_level = raw_units;
  raw_.step(t, static_cast<double>(raw_units));
  emit_row(t);
}

void MetricsBuilder::on_raw_consumed(double t, std::int64_t qty) {
  conservation_.raw_consumed += qty;
  if (t >= warmup_) consumed_pw_ += qty;
}

void MetricsBuilder::on_raw_arrived(double, std::int64_t qty) {
  conservation_.raw_arrived += qty;
}

void MetricsBuilder::on_horizon_end(double t) {
  if (closed_) return;
  closed_ = true;
  close_time_ = t;
  wip_.close(t);
  busy_time_.close(t);
  staffed_time_.close(t);
  raw_.close(t);
  emit_row(t);
}

ScorCard MetricsBuilder::finalize(const std::string& scenario, std::uint64_t seed,
                                  double horizon) const {
  if (!(horizon > warmup_)) throw ConfigError("finalize: horizon must exceed warmup");
  if (!closed_) throw ConfigError("finalize: run has not completed");

  const double span = horizon - warmup_;
  ScorCard card;
  card.scenario = scenario;
  card.seed = seed;

  card.cycle_time = cycles_.mean();
  card.waiting_time_in_process = waits_.mean();
  card.wip_average = wip_.average(span);
  card.rejected_parts = static_cast<double>(rejects_);
  card.order_fulfilment_lead_time = order_lead_.mean();

  if (staffed_time_.integral() > 0.0) {
    card.worker_utilization = busy_time_.integral() / staffed_time_.integral();
  }
  if (busy_time_.integral() > 0.0) {
    card.value_added_productivity =
        static_cast<double>(good_units_pw_) / busy_time_.integral();
  }
  if (fulfilled_orders_ > 0) {
    card.delivery_performance =
        static_cast<double>(on_time_orders_) / static_cast<double>(fulfilled_orders_);
    card.perfect_order_fulfilment =
        static_cast<double>(perfect_orders_) / static_cast<double>(fulfilled_orders_);
  }
  if (demanded_units_pw_ > 0) {
    card.fill_rate = static_cast<double>(filled_on_time_units_) /
                     static_cast<double>(demanded_units_pw_);
  }
  if (consumed_pw_ > 0) {
    card.inventory_days_of_supply =
        raw_.average(span) / (static_cast<double>(consumed_pw_) / span);
  }

  card.inspections = static_cast<double>(inspections_);
  card.good_units = static_cast<double>(good_units_pw_);
  card.completions_all = static_cast<double>(flows_all_.count);
  card.throughput_all = static_cast<double>(flows_all_.count) / span;
  card.flow_time_all = flows_all_.mean();
  if (card.wip_average && card.worker_utilization) {
    card.wip_queue_average =
        std::max(0.0, (wip_.integral() - busy_time_.integral()) / span);
  }
  return card;
}

std::vector<ScorCard::Entry> ScorCard::entries() const {
  return {
      {"delivery_performance", "fraction", delivery_performance},
      {"fill_rate", "fraction", fill_rate},
      {"perfect_order_fulfilment", "fraction", perfect_order_fulfilment},
      {"order_fulfilment_lead_time", "days", order_fulfilment_lead_time},
      {"demand_chain_response_time", "days", demand_chain_response_time},
      {"delivery_flexibility", "fraction", delivery_flexibility},
      {"sc_management_cost", "currency", sc_management_cost},
      {"cost_of_goods_sold", "currency", cost_of_goods_sold},
      {"value_added_productivity", "units/worker-day", value_added_productivity},
      {"cash_to_cash", "days", cash_to_cash},
      {"inventory_days_of_supply", "days", inventory_days_of_supply},
      {"asset_turns", "ratio", asset_turns},
      {"cycle_time", "days", cycle_time},
      {"worker_utilization", "fraction", worker_utilization},
      {"waiting_time_in_process", "days", waiting_time_in_process},
      {"wip_average", "units", wip_average},
      {"rejected_parts", "count", rejected_parts},
  };
}

std::optional<double> ScorCard::by_name(std::string_view name) const {
  for (const auto& entry : entries()) {
    if (entry.name == name) return entry.value;
  }
  throw ConfigError("unknown metric name: " + std::string(name));
}

std::optional<double> littles_law_residual(const ScorCard& card, double throughput) {
  if (!card.wip_average || *card.wip_average <= 0.0) return std::nullopt;
  if (!card.flow_time_all || throughput <= 0.0) return std::nullopt;
  return std::abs(*card.wip_average - throughput * *card.flow_time_all) / *card.wip_average;
}

std::optional<double> littles_law_residual(const ScorCard& card) {
  return littles_law_residual(card, card.throughput_all);
}

}  // namespace scsim
