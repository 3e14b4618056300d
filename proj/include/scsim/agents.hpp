#pragma once

#include <cstdint>
#include <deque>
#include <unordered_map>
#include <vector>

#include "scsim/domain.hpp"
#include "scsim/kernel.hpp"
#include "scsim/scenario.hpp"

namespace scsim {

// Demand source: Poisson base demand plus optional burst interruptions.
// Orders are quoted delivery.quoted_lead_time_days ahead.
class Customer : public Agent {
public:
  Customer(const ScenarioSpec& spec, OrderStore& orders) : spec_(spec), orders_(orders) {}

  // Schedules the first OrderArrival (and BurstArrival when enabled).
  void start(Kernel& kernel);
  void handle(Kernel& kernel, const Event& event) override;

private:
  void make_order(Kernel& kernel, std::int64_t qty);

  const ScenarioSpec& spec_;
  OrderStore& orders_;
};

// Forwards purchase orders to the manufacturer and delivery notices back to
// the customer, each after the configured transit delay.
class Distributor : public Agent {
public:
  Distributor(const ScenarioSpec& spec, OrderStore& orders) : spec_(spec), orders_(orders) {}

  void handle(Kernel& kernel, const Event& event) override;

private:
  const ScenarioSpec& spec_;
  OrderStore& orders_;
};

// Make-to-order production line: a fixed pool of worker positions with
// turnover, a raw-material inventory under an (r, Q) policy, FIFO work
// release and per-unit inspection with scrap-and-remake on rejection.
class Manufacturer : public Agent {
public:
  Manufacturer(const ScenarioSpec& spec, OrderStore& orders);

  // Schedules the initial WorkerQuit event per staffed position.
  void start(Kernel& kernel);
  void handle(Kernel& kernel, const Event& event) override;

  std::int64_t raw_units() const { return raw_units_; }
  std::int64_t raw_on_order() const { return raw_on_order_; }
  std::int64_t raw_consumed() const { return raw_consumed_; }
  std::int64_t raw_arrived() const { return raw_arrived_; }
  std::int64_t units_created() const { return next_unit_id_ - 1; }
  std::int64_t good_units() const { return good_units_; }
  std::int64_t rejected_units() const { return rejected_units_; }
  std::int64_t in_queue() const { return static_cast<std::int64_t>(pending_.size()); }
  std::int64_t in_service() const;
  int staffed_positions() const;
  int busy_positions() const;

private:
  struct Position {
    enum class State { Idle, Busy, Vacant };
    State state = State::Idle;
    std::int64_t unit_id = -1;
    Kernel::Handle service_end = 0;
  };

  void on_purchase_order(Kernel& kernel, const Message& msg);
  void on_material_arrival(Kernel& kernel, const Message& msg);
  void on_service_end(Kernel& kernel, const Event& event);
  void on_worker_quit(Kernel& kernel, int position);
  void on_worker_hired(Kernel& kernel, int position);

  void release_work_orders(Kernel& kernel);
  void maybe_reorder(Kernel& kernel);
  void schedule_quit(Kernel& kernel, int position);
  std::int64_t new_unit(Kernel& kernel, std::int64_t order_id);
  int find_idle() const;
  void notify_staffing(Kernel& kernel);

  const ScenarioSpec& spec_;
  OrderStore& orders_;
  std::vector<Position> positions_;
  std::deque<std::int64_t> pending_;  // FIFO by order creation, then unit index
  std::unordered_map<std::int64_t, Unit> units_;
  std::int64_t next_unit_id_ = 1;
  std::int64_t raw_units_ = 0;
  std::int64_t raw_on_order_ = 0;
  std::int64_t raw_consumed_ = 0;
  std::int64_t raw_arrived_ = 0;
  std::int64_t good_units_ = 0;
  std::int64_t rejected_units_ = 0;
};

// Delivers material orders after the configured lead time and acknowledges
// return notices for scrapped units.
class Supplier : public Agent {
public:
  explicit Supplier(const ScenarioSpec& spec) : spec_(spec) {}

  void handle(Kernel& kernel, const Event& event) override;

  std::int64_t returns_received() const { return returns_received_; }

private:
  const ScenarioSpec& spec_;
  std::int64_t returns_received_ = 0;
};

}  // namespace scsim
