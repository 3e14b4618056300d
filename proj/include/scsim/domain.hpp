#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>

#include "scsim/errors.hpp"

namespace scsim {

// A customer order. Fulfilled at most once, for its full quantity.
struct Order {
  std::int64_t id = 0;
  std::int64_t qty = 0;
  double created_at = 0.0;
  double due_at = 0.0;  // created_at + quoted lead time
  std::optional<double> fulfilled_at;
  bool first_pass = true;   // no unit of this order was rejected at inspection
  std::int64_t good_count = 0;
  bool shipped = false;
};

enum class Disposition { InQueue, InService, Good, Rejected };

// One product unit moving through the Make stage. released_at is when the
// unit joined the production pending queue; episode_start is the start of
// its current queueing episode (reset when a quitting worker abandons it).
struct Unit {
  std::int64_t id = 0;
  std::int64_t order_id = 0;
  double released_at = 0.0;
  double episode_start = 0.0;
  std::optional<double> service_start;
  std::optional<double> completed_at;
  Disposition disposition = Disposition::InQueue;
};

class OrderStore {
public:
  Order& create(std::int64_t qty, double now, double due);
  Order& get(std::int64_t id);
  const Order& get(std::int64_t id) const;
  bool contains(std::int64_t id) const { return orders_.count(id) > 0; }

  // Units of orders not yet delivered (pure backlog, no lost sales).
  std::int64_t open_units() const;
  std::int64_t total_demanded_units() const { return demanded_units_; }

  const std::unordered_map<std::int64_t, Order>& all() const { return orders_; }

private:
  std::unordered_map<std::int64_t, Order> orders_;
  std::int64_t next_id_ = 1;
  std::int64_t demanded_units_ = 0;
};

}  // namespace scsim
