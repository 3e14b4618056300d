#include "scsim/domain.hpp"

namespace scsim {

Order& OrderStore::create(std::int64_t qty, double now, double due) {
  Order order;
  order.id = next_id_++;
  order.qty = qty;
  order.created_at = now;
  order.due_at = due;
  demanded_units_ += qty;
  return orders_.emplace(order.id, order).first->second;
}

Order& OrderStore::get(std::int64_t id) {
  auto it = orders_.find(id);
  if (it == orders_.end()) {
    throw SimFault("unknown order_id " + std::to_string(id));
  }
  return it->second;
}

const Order& OrderStore::get(std::int64_t id) const {
  return const_cast<OrderStore*>(this)->get(id);
}

std::int64_t OrderStore::open_units() const {
  std::int64_t open = 0;
  for (const auto& [id, order] : orders_) {
    if (!order.fulfilled_at) open += order.qty;
  }
  return open;
}

}  // namespace scsim
