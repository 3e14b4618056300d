#include "scsim/scenario.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "scsim/errors.hpp"

namespace scsim {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
  throw ConfigError(path.empty() ? msg : path + ": " + msg);
}

void check_keys(const json& j, const std::string& path,
                const std::set<std::string>& allowed) {
  if (!j.is_object()) fail(path, "expected an object");
  for (const auto& [key, value] : j.items()) {
    if (allowed.count(key) == 0) fail(path, "unknown key '" + key + "'");
  }
}

double get_number(const json& j, const std::string& path, const char* key, double fallback) {
  if (!j.contains(key)) return fallback;
  const auto& v = j.at(key);
  if (!v.is_number()) fail(path + "." + key, "expected a number");
  return v.get<double>();
}

std::int64_t get_int(const json& j, const std::string& path, const char* key,
                     std::int64_t fallback) {
  if (!j.contains(key)) return fallback;
  const auto& v = j.at(key);
  if (!v.is_number_integer()) fail(path + "." + key, "expected an integer");
  return v.get<std::int64_t>();
}

bool get_bool(const json& j, const std::string& path, const char* key, bool fallback) {
  if (!j.contains(key)) return fallback;
  const auto& v = j.at(key);
  if (!v.is_boolean()) fail(path + "." + key, "expected a boolean");
  return v.get<bool>();
}

Dist parse_dist(const json& j, const std::string& path) {
  if (!j.is_object() || !j.contains("type") || !j.at("type").is_string()) {
    fail(path, "expected a distribution object with a 'type' string");
  }
  const std::string type = j.at("type").get<std::string>();
  Dist dist;
  if (type == "uniform") {
    check_keys(j, path, {"type", "min", "max"});
    if (!j.contains("min") || !j.contains("max")) fail(path, "uniform needs min and max");
    dist = Dist::uniform(get_number(j, path, "min", 0.0), get_number(j, path, "max", 0.0));
  } else if (type == "exponential") {
    check_keys(j, path, {"type", "mean"});
    if (!j.contains("mean")) fail(path, "exponential needs mean");
    dist = Dist::exponential(get_number(j, path, "mean", 0.0));
  } else if (type == "bernoulli") {
    check_keys(j, path, {"type", "p"});
    if (!j.contains("p")) fail(path, "bernoulli needs p");
    dist = Dist::bernoulli(get_number(j, path, "p", 0.0));
  } else if (type == "constant") {
    check_keys(j, path, {"type", "value"});
    if (!j.contains("value")) fail(path, "constant needs value");
    dist = Dist::constant(get_number(j, path, "value", 0.0));
  } else {
    fail(path, "unknown distribution type '" + type + "'");
  }
  try {
    dist.validate();
  } catch (const ConfigError& e) {
    fail(path, e.what());
  }
  return dist;
}

ordered_json dist_to_json(const Dist& dist) {
  ordered_json j;
  switch (dist.kind) {
    case Dist::Kind::Uniform:
      j["type"] = "uniform"; j["min"] = dist.a; j["max"] = dist.b; break;
    case Dist::Kind::Exponential:
      j["type"] = "exponential"; j["mean"] = dist.a; break;
    case Dist::Kind::Bernoulli:
      j["type"] = "bernoulli"; j["p"] = dist.a; break;
    case Dist::Kind::Constant:
      j["type"] = "constant"; j["value"] = dist.a; break;
  }
  return j;
}

void require(bool ok, const std::string& field, const std::string& bound) {
  if (!ok) throw ConfigError(field + ": " + bound);
}

}  // namespace

bool ScenarioSpec::operator==(const ScenarioSpec& other) const {
  return to_json() == other.to_json();
}

ScenarioSpec ScenarioSpec::from_json(const json& j) {
  ScenarioSpec spec;
  check_keys(j, "", {"name", "horizon_days", "warmup_days", "replications", "master_seed",
                     "demand", "manufacturer", "supplier", "workforce", "delivery"});
  if (j.contains("name")) {
    if (!j.at("name").is_string()) fail("name", "expected a string");
    spec.name = j.at("name").get<std::string>();
  }
  spec.horizon_days = get_number(j, "", "horizon_days", spec.horizon_days);
  spec.warmup_days = get_number(j, "", "warmup_days", spec.warmup_days);
  spec.replications = static_cast<int>(get_int(j, "", "replications", spec.replications));
  if (j.contains("master_seed")) {
    const auto& v = j.at("master_seed");
    if (!v.is_number_unsigned() && !v.is_number_integer()) fail("master_seed", "expected an integer");
    spec.master_seed = v.get<std::uint64_t>();
  }

  if (j.contains("demand")) {
    const auto& d = j.at("demand");
    check_keys(d, "demand", {"mean_interarrival_days", "order_size", "interarrival", "burst"});
    spec.demand.mean_interarrival_days =
        get_number(d, "demand", "mean_interarrival_days", spec.demand.mean_interarrival_days);
    spec.demand.order_size = get_int(d, "demand", "order_size", spec.demand.order_size);
    if (d.contains("interarrival")) {
      spec.demand.interarrival = parse_dist(d.at("interarrival"), "demand.interarrival");
    }
    if (d.contains("burst")) {
      const auto& b = d.at("burst");
      check_keys(b, "demand.burst",
                 {"enabled", "size", "interval_min_days", "interval_max_days"});
      spec.demand.burst.enabled = get_bool(b, "demand.burst", "enabled", spec.demand.burst.enabled);
      spec.demand.burst.size = get_int(b, "demand.burst", "size", spec.demand.burst.size);
      spec.demand.burst.interval_min_days =
          get_number(b, "demand.burst", "interval_min_days", spec.demand.burst.interval_min_days);
      spec.demand.burst.interval_max_days =
          get_number(b, "demand.burst", "interval_max_days", spec.demand.burst.interval_max_days);
    }
  }

  if (j.contains("manufacturer")) {
    const auto& m = j.at("manufacturer");
    check_keys(m, "manufacturer",
               {"workers", "service_mean_days", "service", "error_probability",
                "reorder_point", "order_quantity", "initial_raw"});
    spec.manufacturer.workers =
        static_cast<int>(get_int(m, "manufacturer", "workers", spec.manufacturer.workers));
    spec.manufacturer.service_mean_days =
        get_number(m, "manufacturer", "service_mean_days", spec.manufacturer.service_mean_days);
    if (m.contains("service")) {
      spec.manufacturer.service = parse_dist(m.at("service"), "manufacturer.service");
    }
    spec.manufacturer.error_probability =
        get_number(m, "manufacturer", "error_probability", spec.manufacturer.error_probability);
    spec.manufacturer.reorder_point =
        get_int(m, "manufacturer", "reorder_point", spec.manufacturer.reorder_point);
    spec.manufacturer.order_quantity =
        get_int(m, "manufacturer", "order_quantity", spec.manufacturer.order_quantity);
    spec.manufacturer.initial_raw =
        get_int(m, "manufacturer", "initial_raw", spec.manufacturer.initial_raw);
  }

  if (j.contains("supplier")) {
    const auto& s = j.at("supplier");
    check_keys(s, "supplier", {"lead_time_days", "lead"});
    spec.supplier.lead_time_days =
        get_number(s, "supplier", "lead_time_days", spec.supplier.lead_time_days);
    if (s.contains("lead")) spec.supplier.lead = parse_dist(s.at("lead"), "supplier.lead");
  }

  if (j.contains("workforce")) {
    const auto& w = j.at("workforce");
    check_keys(w, "workforce", {"annual_turnover_rate", "recruit_min_days", "recruit_max_days"});
    spec.workforce.annual_turnover_rate =
        get_number(w, "workforce", "annual_turnover_rate", spec.workforce.annual_turnover_rate);
    spec.workforce.recruit_min_days =
        get_number(w, "workforce", "recruit_min_days", spec.workforce.recruit_min_days);
    spec.workforce.recruit_max_days =
        get_number(w, "workforce", "recruit_max_days", spec.workforce.recruit_max_days);
  }

  if (j.contains("delivery")) {
    const auto& d = j.at("delivery");
    check_keys(d, "delivery", {"transit_days", "quoted_lead_time_days"});
    spec.delivery.transit_days =
        get_number(d, "delivery", "transit_days", spec.delivery.transit_days);
    spec.delivery.quoted_lead_time_days =
        get_number(d, "delivery", "quoted_lead_time_days", spec.delivery.quoted_lead_time_days);
  }

  spec.validate();
  return spec;
}

std::vector<std::string> ScenarioSpec::validate() const {
  require(!name.empty(), "name", "must be non-empty");
  require(std::isfinite(horizon_days) && horizon_days > 0, "horizon_days", "must be > 0");
  require(std::isfinite(warmup_days) && warmup_days >= 0, "warmup_days", "must be >= 0");
  require(warmup_days < horizon_days, "warmup_days", "warmup < horizon");
  require(replications >= 1, "replications", "must be >= 1");

  require(demand.mean_interarrival_days > 0, "demand.mean_interarrival_days", "must be > 0");
  require(demand.order_size >= 1, "demand.order_size", "must be >= 1");
  if (demand.interarrival) demand.interarrival->validate();
  require(demand.interarrival_dist().mean() > 0, "demand.interarrival", "mean must be > 0");
  require(demand.burst.size >= 1, "demand.burst.size", "must be >= 1");
  require(demand.burst.interval_min_days > 0, "demand.burst.interval_min_days", "must be > 0");
  require(demand.burst.interval_min_days <= demand.burst.interval_max_days,
          "demand.burst", "interval_min <= interval_max");

  require(manufacturer.workers >= 1, "manufacturer.workers", "workers >= 1");
  require(manufacturer.service_mean_days > 0, "manufacturer.service_mean_days", "must be > 0");
  if (manufacturer.service) manufacturer.service->validate();
  require(manufacturer.service_dist().mean() > 0, "manufacturer.service", "mean must be > 0");
  require(manufacturer.error_probability >= 0 && manufacturer.error_probability <= 1,
          "manufacturer.error_probability", "must be in [0, 1]");
  require(manufacturer.reorder_point >= 0, "manufacturer.reorder_point", "must be >= 0");
  require(manufacturer.order_quantity >= 1, "manufacturer.order_quantity", "must be >= 1");
  require(manufacturer.initial_raw >= 0, "manufacturer.initial_raw", "must be >= 0");

  require(supplier.lead_time_days >= 0, "supplier.lead_time_days", "must be >= 0");
  if (supplier.lead) supplier.lead->validate();

  require(workforce.annual_turnover_rate >= 0, "workforce.annual_turnover_rate", "must be >= 0");
  require(workforce.recruit_min_days >= 0, "workforce.recruit_min_days", "must be >= 0");
  require(workforce.recruit_min_days <= workforce.recruit_max_days,
          "workforce", "recruit_min <= recruit_max");

  require(delivery.transit_days >= 0, "delivery.transit_days", "must be >= 0");
  require(delivery.quoted_lead_time_days > 0, "delivery.quoted_lead_time_days", "must be > 0");

  std::vector<std::string> warnings;
  // Offered load against effective capacity: rework inflates demand by
  // 1/(1-p); turnover removes the long-run vacant fraction of positions.
  const double error_p = manufacturer.error_probability;
  if (error_p < 1.0) {
    double arrivals = static_cast<double>(demand.order_size) / demand.interarrival_dist().mean();
    if (demand.burst.enabled) {
      arrivals += static_cast<double>(demand.burst.size) /
                  (0.5 * (demand.burst.interval_min_days + demand.burst.interval_max_days));
    }
    const double service_demand = arrivals * manufacturer.service_dist().mean() / (1.0 - error_p);
    double staffed_fraction = 1.0;
    if (workforce.annual_turnover_rate > 0) {
      const double tenure = 365.0 / workforce.annual_turnover_rate;
      const double vacancy = 0.5 * (workforce.recruit_min_days + workforce.recruit_max_days);
      staffed_fraction = tenure / (tenure + vacancy);
    }
    const double capacity = manufacturer.workers * staffed_fraction;
    if (service_demand >= capacity) {
      std::ostringstream msg;
      msg << "offered load " << service_demand << " worker-equivalents meets or exceeds "
          << "effective capacity " << capacity << "; the queue will not reach steady state";
      warnings.push_back(msg.str());
    }
  }
  return warnings;
}

ordered_json ScenarioSpec::to_json() const {
  ordered_json j;
  j["name"] = name;
  j["horizon_days"] = horizon_days;
  j["warmup_days"] = warmup_days;
  j["replications"] = replications;
  j["master_seed"] = master_seed;
  j["demand"] = {
      {"mean_interarrival_days", demand.mean_interarrival_days},
      {"order_size", demand.order_size},
      {"interarrival", dist_to_json(demand.interarrival_dist())},
      {"burst",
       {{"enabled", demand.burst.enabled},
        {"size", demand.burst.size},
        {"interval_min_days", demand.burst.interval_min_days},
        {"interval_max_days", demand.burst.interval_max_days}}},
  };
  j["manufacturer"] = {
      {"workers", manufacturer.workers},
      {"service_mean_days", manufacturer.service_mean_days},
      {"service", dist_to_json(manufacturer.service_dist())},
      {"error_probability", manufacturer.error_probability},
      {"reorder_point", manufacturer.reorder_point},
      {"order_quantity", manufacturer.order_quantity},
      {"initial_raw", manufacturer.initial_raw},
  };
  j["supplier"] = {
      {"lead_time_days", supplier.lead_time_days},
      {"lead", dist_to_json(supplier.lead_dist())},
  };
  j["workforce"] = {
      {"annual_turnover_rate", workforce.annual_turnover_rate},
      {"recruit_min_days", workforce.recruit_min_days},
      {"recruit_max_days", workforce.recruit_max_days},
  };
  j["delivery"] = {
      {"transit_days", delivery.transit_days},
      {"quoted_lead_time_days", delivery.quoted_lead_time_days},
  };
  return j;
}

ScenarioSpec load_scenario_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open scenario file: " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("scenario parse error in " + path + ": " + e.what());
  }
  return ScenarioSpec::from_json(j);
}

void apply_override(json& j, const std::string& dotted_path, const std::string& value) {
  if (dotted_path.empty()) throw ConfigError("override: empty key path");
  json* node = &j;
  std::size_t start = 0;
  while (true) {
    const std::size_t dot = dotted_path.find('.', start);
    const std::string key = dotted_path.substr(start, dot - start);
    if (key.empty()) throw ConfigError("override: malformed key path '" + dotted_path + "'");
    if (dot == std::string::npos) {
      json parsed;
      try {
        parsed = json::parse(value);
      } catch (const json::parse_error&) {
        parsed = value;  // bare strings are allowed
      }
      (*node)[key] = parsed;
      return;
    }
    if (!node->contains(key)) (*node)[key] = json::object();
    node = &(*node)[key];
    if (!node->is_object()) {
      throw ConfigError("override: '" + key + "' in '" + dotted_path + "' is not an object");
    }
    start = dot + 1;
  }
}

Perturbation Perturbation::turnover(double factor) {
  Perturbation p;
  p.kind = Kind::TurnoverMultiplier;
  p.factor = factor;
  return p;
}

Perturbation Perturbation::burst(std::int64_t size, double min_days, double max_days) {
  Perturbation p;
  p.kind = Kind::EnableBurst;
  p.size = size;
  p.interval_min = min_days;
  p.interval_max = max_days;
  return p;
}

Perturbation Perturbation::error(double delta) {
  Perturbation p;
  p.kind = Kind::ErrorDelta;
  p.error_delta = delta;
  return p;
}

Perturbation Perturbation::lead_time(double days) {
  Perturbation p;
  p.kind = Kind::SupplierLeadTime;
  p.lead_days = days;
  return p;
}

std::string Perturbation::tag() const {
  std::ostringstream out;
  switch (kind) {
    case Kind::TurnoverMultiplier: out << "turnover_x" << factor; break;
    case Kind::EnableBurst:
      out << "burst_" << size << "_u" << interval_min << "-" << interval_max; break;
    case Kind::ErrorDelta: out << "error_" << (error_delta >= 0 ? "+" : "") << error_delta; break;
    case Kind::SupplierLeadTime: out << "lead_" << lead_days << "d"; break;
  }
  return out.str();
}

ScenarioSpec apply_perturbation(const ScenarioSpec& spec, const Perturbation& p) {
  ScenarioSpec out = spec;
  switch (p.kind) {
    case Perturbation::Kind::TurnoverMultiplier:
      out.workforce.annual_turnover_rate *= p.factor;
      break;
    case Perturbation::Kind::EnableBurst:
      out.demand.burst.enabled = true;
      out.demand.burst.size = p.size;
      out.demand.burst.interval_min_days = p.interval_min;
      out.demand.burst.interval_max_days = p.interval_max;
      break;
    case Perturbation::Kind::ErrorDelta:
      out.manufacturer.error_probability += p.error_delta;
      break;
    case Perturbation::Kind::SupplierLeadTime:
      out.supplier.lead_time_days = p.lead_days;
      out.supplier.lead = Dist::constant(p.lead_days);
      break;
  }
  out.name = spec.name + "+" + p.tag();
  out.validate();
  return out;
}

}  // namespace scsim
