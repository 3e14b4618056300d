#include "scsim/report_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace scsim {

using nlohmann::json;
using nlohmann::ordered_json;

double round_sig(double x, int digits) {
  if (x == 0.0 || !std::isfinite(x)) return x;
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, x);
  return std::strtod(buf, nullptr);
}

nlohmann::ordered_json card_to_json(const ScorCard& card) {
  ordered_json j;
  j["scenario"] = card.scenario;
  j["seed"] = card.seed;
  ordered_json metrics = ordered_json::object();
  for (const auto& entry : card.entries()) {
    ordered_json m;
    m["value"] = entry.value ? json(round_sig(*entry.value, 6)) : json(nullptr);
    m["unit"] = std::string(entry.unit);
    m["computed"] = entry.value.has_value();
    metrics[std::string(entry.name)] = m;
  }
  j["metrics"] = metrics;
  ordered_json aux;
  aux["inspections"] = card.inspections;
  aux["good_units"] = card.good_units;
  aux["completions_all"] = card.completions_all;
  aux["throughput_all"] = round_sig(card.throughput_all, 6);
  aux["flow_time_all"] =
      card.flow_time_all ? json(round_sig(*card.flow_time_all, 6)) : json(nullptr);
  aux["wip_queue_average"] =
      card.wip_queue_average ? json(round_sig(*card.wip_queue_average, 6)) : json(nullptr);
  j["aux"] = aux;
  return j;
}

namespace {

std::optional<double> opt_from(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<double>();
}

}  // namespace

ScorCard card_from_json(const json& j) {
  ScorCard card;
  card.scenario = j.at("scenario").get<std::string>();
  card.seed = j.at("seed").get<std::uint64_t>();
  const auto& metrics = j.at("metrics");
  auto field = [&](const char* name) -> std::optional<double> {
    return opt_from(metrics.at(name).at("value"));
  };
  card.delivery_performance = field("delivery_performance");
  card.fill_rate = field("fill_rate");
  card.perfect_order_fulfilment = field("perfect_order_fulfilment");
  card.order_fulfilment_lead_time = field("order_fulfilment_lead_time");
  card.demand_chain_response_time = field("demand_chain_response_time");
  card.delivery_flexibility = field("delivery_flexibility");
  card.sc_management_cost = field("sc_management_cost");
  card.cost_of_goods_sold = field("cost_of_goods_sold");
  card.value_added_productivity = field("value_added_productivity");
  card.cash_to_cash = field("cash_to_cash");
  card.inventory_days_of_supply = field("inventory_days_of_supply");
  card.asset_turns = field("asset_turns");
  card.cycle_time = field("cycle_time");
  card.worker_utilization = field("worker_utilization");
  card.waiting_time_in_process = field("waiting_time_in_process");
  card.wip_average = field("wip_average");
  card.rejected_parts = field("rejected_parts");
  if (j.contains("aux")) {
    const auto& aux = j.at("aux");
    card.inspections = aux.at("inspections").get<double>();
    card.good_units = aux.at("good_units").get<double>();
    card.completions_all = aux.at("completions_all").get<double>();
    card.throughput_all = aux.at("throughput_all").get<double>();
    card.flow_time_all = opt_from(aux.at("flow_time_all"));
    card.wip_queue_average = opt_from(aux.at("wip_queue_average"));
  }
  return card;
}

namespace {

ordered_json stat_to_json(const SummaryStat& stat) {
  ordered_json j;
  j["computed"] = stat.computed;
  if (stat.computed) {
    j["mean"] = round_sig(stat.mean, 6);
    j["stddev"] = round_sig(stat.stddev, 6);
    j["ci95_half_width"] = round_sig(stat.ci_half, 6);
  }
  return j;
}

std::string format_pct(double pct) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%+.2f%%", pct);
  return buf;
}

}  // namespace

nlohmann::ordered_json report_to_json(const SensitivityReport& report) {
  ordered_json j;
  ordered_json meta;
  meta["baseline"] = report.baseline_name;
  meta["master_seed"] = report.master_seed;
  meta["replications"] = report.replications;
  meta["horizon_days"] = report.horizon_days;
  meta["warmup_days"] = report.warmup_days;
  meta["common_random_numbers"] = true;
  meta["seeds"] = report.seeds;
  j["metadata"] = meta;

  ordered_json rows = ordered_json::array();
  for (const auto& row : report.rows) {
    ordered_json r;
    r["attribute"] = row.attribute;
    r["metric"] = row.metric;
    r["issue"] = row.issue;
    r["perturbation"] = row.tag;
    ordered_json cells = ordered_json::object();
    for (std::size_t i = 0; i < kMeasurements.size(); ++i) {
      const auto& cell = row.cells[i];
      ordered_json c;
      c["baseline"] = stat_to_json(cell.baseline);
      c["perturbed"] = stat_to_json(cell.perturbed);
      c["delta_pct"] = cell.delta_pct ? json(round_sig(*cell.delta_pct, 6)) : json(nullptr);
      c["delta_ci95_pct"] =
          (cell.ci_low && cell.ci_high)
              ? json::array({round_sig(*cell.ci_low, 6), round_sig(*cell.ci_high, 6)})
              : json(nullptr);
      c["near_zero"] = cell.near_zero;
      c["expected_sign"] = cell.expected_sign > 0 ? "+" : (cell.expected_sign < 0 ? "-" : "");
      c["verdict"] = std::string(verdict_name(cell.verdict));
      if (!cell.note.empty()) c["note"] = cell.note;
      cells[std::string(kMeasurements[i])] = c;
    }
    r["measurements"] = cells;
    rows.push_back(r);
  }
  j["rows"] = rows;
  return j;
}

std::string render_table(const SensitivityReport& report) {
  constexpr const char* kHeaders[5] = {"Cycle time", "Worker utilization",
                                       "Waiting time", "No. WIP", "Rejected parts"};
  const std::size_t attr_w = 26, metric_w = 36, issue_w = 62, cell_w = 20;

  auto pad = [](std::string s, std::size_t width) {
    if (s.size() < width) s.append(width - s.size(), ' ');
    return s;
  };

  std::ostringstream out;
  out << pad("Performance attribute", attr_w) << pad("SCOR Level-1 Metric", metric_w)
      << pad("Issue", issue_w);
  for (const char* h : kHeaders) out << pad(h, cell_w);
  out << '\n';
  out << std::string(attr_w + metric_w + issue_w + 5 * cell_w, '-') << '\n';

  for (const auto& row : report.rows) {
    out << pad(row.attribute, attr_w) << pad(row.metric, metric_w) << pad(row.issue, issue_w);
    for (const auto& cell : row.cells) {
      std::string text;
      if (cell.delta_pct) {
        text = format_pct(*cell.delta_pct);
        if (cell.near_zero) text += " ~0";
      } else {
        text = "n/a";
      }
      if (cell.expected_sign != 0) {
        text += " [" + std::string(verdict_name(cell.verdict)) + "]";
      }
      out << pad(text, cell_w);
    }
    out << '\n';
  }
  out << '\n'
      << "Replications: " << report.replications << " (common random numbers, seeds "
      << report.master_seed << ".." << report.master_seed + report.replications - 1 << ")\n";
  return out.str();
}

nlohmann::ordered_json compare_to_json(const std::string& baseline_name,
                                       const std::string& other_name,
                                       const ReplicationSet& baseline,
                                       const ReplicationSet& other) {
  ordered_json j;
  j["baseline"] = baseline_name;
  j["comparison"] = other_name;
  j["replications"] = baseline.cards.size();
  ordered_json deltas = ordered_json::object();
  if (baseline.cards.empty()) {
    j["deltas"] = deltas;
    return j;
  }
  for (const auto& entry : baseline.cards.front().entries()) {
    std::vector<std::optional<double>> base_vals, other_vals;
    for (const auto& card : baseline.cards) base_vals.push_back(card.by_name(entry.name));
    for (const auto& card : other.cards) other_vals.push_back(card.by_name(entry.name));
    const SummaryStat b = summarize(base_vals);
    const SummaryStat o = summarize(other_vals);
    ordered_json cell;
    if (b.computed && o.computed) {
      const auto delta = percent_delta(b.mean, o.mean);
      cell["baseline_mean"] = round_sig(b.mean, 6);
      cell["comparison_mean"] = round_sig(o.mean, 6);
      cell["delta_pct"] = delta ? json(round_sig(*delta, 6)) : json(nullptr);
    } else {
      cell["baseline_mean"] = nullptr;
      cell["comparison_mean"] = nullptr;
      cell["delta_pct"] = nullptr;
    }
    deltas[std::string(entry.name)] = cell;
  }
  j["deltas"] = deltas;
  return j;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write file: " + path);
  out << content;
  if (!out) throw ConfigError("write failed: " + path);
}

namespace {

bool type_matches(const std::string& type, const json& doc) {
  if (type == "object") return doc.is_object();
  if (type == "array") return doc.is_array();
  if (type == "string") return doc.is_string();
  if (type == "number") return doc.is_number();
  if (type == "integer") return doc.is_number_integer() || doc.is_number_unsigned();
  if (type == "boolean") return doc.is_boolean();
  if (type == "null") return doc.is_null();
  return false;
}

void validate_node(const json& schema, const json& doc, const std::string& path,
                   std::vector<std::string>& errors) {
  if (schema.contains("type")) {
    const auto& t = schema.at("type");
    bool ok = false;
    if (t.is_string()) {
      ok = type_matches(t.get<std::string>(), doc);
    } else if (t.is_array()) {
      for (const auto& option : t) ok = ok || type_matches(option.get<std::string>(), doc);
    }
    if (!ok) {
      errors.push_back(path + ": type mismatch (expected " + t.dump() + ")");
      return;
    }
  }
  if (schema.contains("enum")) {
    bool ok = false;
    for (const auto& option : schema.at("enum")) ok = ok || option == doc;
    if (!ok) errors.push_back(path + ": value not in enum");
  }
  if (doc.is_object()) {
    if (schema.contains("required")) {
      for (const auto& key : schema.at("required")) {
        if (!doc.contains(key.get<std::string>())) {
          errors.push_back(path + ": missing required key '" + key.get<std::string>() + "'");
        }
      }
    }
    const json* props = schema.contains("properties") ? &schema.at("properties") : nullptr;
    const json* extra = schema.contains("additionalProperties")
                            ? &schema.at("additionalProperties")
                            : nullptr;
    for (const auto& [key, value] : doc.items()) {
      if (props && props->contains(key)) {
        validate_node(props->at(key), value, path + "." + key, errors);
      } else if (extra) {
        if (extra->is_boolean()) {
          if (!extra->get<bool>()) errors.push_back(path + ": unexpected key '" + key + "'");
        } else {
          validate_node(*extra, value, path + "." + key, errors);
        }
      }
    }
  }
  if (doc.is_array() && schema.contains("items")) {
    for (std::size_t i = 0; i < doc.size(); ++i) {
      validate_node(schema.at("items"), doc.at(i), path + "[" + std::to_string(i) + "]",
                    errors);
    }
  }
}

}  // namespace

std::vector<std::string> validate_against_schema(const json& schema, const json& doc) {
  std::vector<std::string> errors;
  validate_node(schema, doc, "$", errors);
  return errors;
}

}  // namespace scsim
