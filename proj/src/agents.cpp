#include "scsim/agents.hpp"

namespace scsim {

// ---------------------------------------------------------------- Customer

void Customer::start(Kernel& kernel) {
  kernel.schedule(kernel.sample(Stream::DemandInterarrival, spec_.demand.interarrival_dist()),
                  AgentId::Customer, EventKind::OrderArrival);
  if (spec_.demand.burst.enabled) {
    const auto& b = spec_.demand.burst;
    kernel.schedule(kernel.sample(Stream::DemandBurst,
                                  Dist::uniform(b.interval_min_days, b.interval_max_days)),
                    AgentId::Customer, EventKind::BurstArrival);
  }
}

void Customer::make_order(Kernel& kernel, std::int64_t qty) {
  const double now = kernel.now();
  Order& order = orders_.create(qty, now, now + spec_.delivery.quoted_lead_time_days);
  kernel.notify([&](SimObserver& o) { o.on_order_created(now, order); });
  Message msg;
  msg.kind = MessageKind::PurchaseOrder;
  msg.sender = AgentId::Customer;
  msg.recipient = AgentId::Distributor;
  msg.order_id = order.id;
  msg.qty = qty;
  kernel.send(msg, 0.0);
}

void Customer::handle(Kernel& kernel, const Event& event) {
  switch (event.kind) {
    case EventKind::OrderArrival:
      make_order(kernel, spec_.demand.order_size);
      kernel.schedule(
          kernel.sample(Stream::DemandInterarrival, spec_.demand.interarrival_dist()),
          AgentId::Customer, EventKind::OrderArrival);
      break;
    case EventKind::BurstArrival: {
      const auto& b = spec_.demand.burst;
      make_order(kernel, b.size);
      kernel.schedule(kernel.sample(Stream::DemandBurst,
                                    Dist::uniform(b.interval_min_days, b.interval_max_days)),
                      AgentId::Customer, EventKind::BurstArrival);
      break;
    }
    case EventKind::MessageDelivery: {
      const Message& msg = event.payload.msg;
      if (msg.kind != MessageKind::DeliveryNotice) {
        throw SimFault("customer cannot handle message " +
                       std::string(message_kind_name(msg.kind)));
      }
      Order& order = orders_.get(msg.order_id);
      order.fulfilled_at = kernel.now();
      kernel.notify([&](SimObserver& o) { o.on_order_fulfilled(kernel.now(), order); });
      break;
    }
    default:
      throw SimFault("customer cannot handle event " +
                     std::string(event_kind_name(event.kind)));
  }
}

// -------------------------------------------------------------- Distributor

void Distributor::handle(Kernel& kernel, const Event& event) {
  if (event.kind != EventKind::MessageDelivery) {
    throw SimFault("distributor cannot handle event " +
                   std::string(event_kind_name(event.kind)));
  }
  const Message& msg = event.payload.msg;
  switch (msg.kind) {
    case MessageKind::PurchaseOrder: {
      Message fwd = msg;
      fwd.sender = AgentId::Distributor;
      fwd.recipient = AgentId::Manufacturer;
      kernel.send(fwd, spec_.delivery.transit_days);
      break;
    }
    case MessageKind::GoodsShipment: {
      Order& order = orders_.get(msg.order_id);
      if (order.shipped) {
        throw SimFault("order " + std::to_string(order.id) + " shipped twice");
      }
      if (msg.qty != order.qty) {
        throw SimFault("shipment qty " + std::to_string(msg.qty) +
                       " does not match order " + std::to_string(order.id));
      }
      order.shipped = true;
      Message notice;
      notice.kind = MessageKind::DeliveryNotice;
      notice.sender = AgentId::Distributor;
      notice.recipient = AgentId::Customer;
      notice.order_id = order.id;
      kernel.send(notice, spec_.delivery.transit_days);
      break;
    }
    default:
      throw SimFault("distributor cannot handle message " +
                     std::string(message_kind_name(msg.kind)));
  }
}

// ------------------------------------------------------------- Manufacturer

Manufacturer::Manufacturer(const ScenarioSpec& spec, OrderStore& orders)
    : spec_(spec), orders_(orders) {
  positions_.resize(static_cast<std::size_t>(spec.manufacturer.workers));
  raw_units_ = spec.manufacturer.initial_raw;
}

void Manufacturer::start(Kernel& kernel) {
  kernel.notify([&](SimObserver& o) { o.on_raw_change(kernel.now(), raw_units_); });
  notify_staffing(kernel);
  maybe_reorder(kernel);  // initial stock may already sit at or below r
  for (int p = 0; p < static_cast<int>(positions_.size()); ++p) {
    schedule_quit(kernel, p);
  }
}

int Manufacturer::find_idle() const {
  for (int p = 0; p < static_cast<int>(positions_.size()); ++p) {
    if (positions_[p].state == Position::State::Idle) return p;
  }
  return -1;
}

int Manufacturer::staffed_positions() const {
  int n = 0;
  for (const auto& pos : positions_) {
    if (pos.state != Position::State::Vacant) ++n;
  }
  return n;
}

int Manufacturer::busy_positions() const {
  int n = 0;
  for (const auto& pos : positions_) {
    if (pos.state == Position::State::Busy) ++n;
  }
  return n;
}

std::int64_t Manufacturer::in_service() const { return busy_positions(); }

void Manufacturer::notify_staffing(Kernel& kernel) {
  kernel.notify([&](SimObserver& o) {
    o.on_staffing_change(kernel.now(), busy_positions(), staffed_positions());
  });
}

void Manufacturer::schedule_quit(Kernel& kernel, int position) {
  const double rate = spec_.workforce.annual_turnover_rate;
  if (rate <= 0.0) return;  // rate 0: nobody ever quits
  EventPayload payload;
  payload.position = position;
  kernel.schedule(kernel.sample(Stream::WorkerTenure, Dist::exponential(365.0 / rate)),
                  AgentId::Manufacturer, EventKind::WorkerQuit, payload);
}

std::int64_t Manufacturer::new_unit(Kernel& kernel, std::int64_t order_id) {
  Unit unit;
  unit.id = next_unit_id_++;
  unit.order_id = order_id;
  unit.released_at = kernel.now();
  unit.episode_start = kernel.now();
  units_.emplace(unit.id, unit);
  pending_.push_back(unit.id);
  kernel.notify([&](SimObserver& o) { o.on_unit_queued(kernel.now(), unit.id); });
  return unit.id;
}

void Manufacturer::maybe_reorder(Kernel& kernel) {
  if (raw_units_ + raw_on_order_ > spec_.manufacturer.reorder_point) return;
  raw_on_order_ += spec_.manufacturer.order_quantity;
  Message msg;
  msg.kind = MessageKind::MaterialOrder;
  msg.sender = AgentId::Manufacturer;
  msg.recipient = AgentId::Supplier;
  msg.qty = spec_.manufacturer.order_quantity;
  kernel.send(msg, 0.0);
}

void Manufacturer::release_work_orders(Kernel& kernel) {
  while (!pending_.empty() && raw_units_ >= 1) {
    const int pos = find_idle();
    if (pos < 0) break;
    const std::int64_t uid = pending_.front();
    pending_.pop_front();
    Unit& unit = units_.at(uid);

    --raw_units_;
    ++raw_consumed_;
    kernel.notify([&](SimObserver& o) {
      o.on_raw_consumed(kernel.now(), 1);
      o.on_raw_change(kernel.now(), raw_units_);
    });
    maybe_reorder(kernel);

    unit.disposition = Disposition::InService;
    unit.service_start = kernel.now();
    const double wait = kernel.now() - unit.episode_start;
    kernel.notify([&](SimObserver& o) { o.on_service_start(kernel.now(), uid, wait); });

    positions_[pos].state = Position::State::Busy;
    positions_[pos].unit_id = uid;
    EventPayload payload;
    payload.position = pos;
    payload.unit_id = uid;
    positions_[pos].service_end =
        kernel.schedule(kernel.sample(Stream::ServiceTime, spec_.manufacturer.service_dist()),
                        AgentId::Manufacturer, EventKind::ServiceEnd, payload);
    notify_staffing(kernel);
  }
}

void Manufacturer::on_purchase_order(Kernel& kernel, const Message& msg) {
  const Order& order = orders_.get(msg.order_id);
  for (std::int64_t i = 0; i < order.qty; ++i) {
    new_unit(kernel, order.id);
  }
  release_work_orders(kernel);
}

void Manufacturer::on_material_arrival(Kernel& kernel, const Message& msg) {
  raw_on_order_ -= msg.qty;
  raw_units_ += msg.qty;
  raw_arrived_ += msg.qty;
  kernel.notify([&](SimObserver& o) {
    o.on_raw_arrived(kernel.now(), msg.qty);
    o.on_raw_change(kernel.now(), raw_units_);
  });
  release_work_orders(kernel);
}

void Manufacturer::on_service_end(Kernel& kernel, const Event& event) {
  Position& pos = positions_[static_cast<std::size_t>(event.payload.position)];
  if (pos.state != Position::State::Busy || pos.unit_id != event.payload.unit_id) {
    throw SimFault("ServiceEnd for a non-busy position " +
                   std::to_string(event.payload.position));
  }
  const std::int64_t uid = pos.unit_id;
  pos.state = Position::State::Idle;
  pos.unit_id = -1;
  notify_staffing(kernel);

  Unit& unit = units_.at(uid);
  unit.completed_at = kernel.now();
  Order& order = orders_.get(unit.order_id);

  // Inspection by inversion on the shared uniform stream: reject iff u < p,
  // so a larger error probability can only add rejects under CRN.
  const bool reject = kernel.uniform01(Stream::Inspection) < spec_.manufacturer.error_probability;
  const double flow = kernel.now() - unit.released_at;
  if (reject) {
    unit.disposition = Disposition::Rejected;
    ++rejected_units_;
    order.first_pass = false;
    kernel.notify([&](SimObserver& o) { o.on_unit_completed(kernel.now(), uid, false, flow); });

    Message notice;
    notice.kind = MessageKind::ReturnNotice;
    notice.sender = AgentId::Manufacturer;
    notice.recipient = AgentId::Supplier;
    notice.unit_id = uid;
    kernel.send(notice, 0.0);

    // Scrapped and remade in full: the order still owes one good unit.
    new_unit(kernel, order.id);
  } else {
    unit.disposition = Disposition::Good;
    ++good_units_;
    ++order.good_count;
    kernel.notify([&](SimObserver& o) { o.on_unit_completed(kernel.now(), uid, true, flow); });
    if (order.good_count == order.qty) {
      Message shipment;
      shipment.kind = MessageKind::GoodsShipment;
      shipment.sender = AgentId::Manufacturer;
      shipment.recipient = AgentId::Distributor;
      shipment.order_id = order.id;
      shipment.qty = order.qty;
      kernel.send(shipment, 0.0);
    }
  }
  release_work_orders(kernel);
}

void Manufacturer::on_worker_quit(Kernel& kernel, int position) {
  Position& pos = positions_[static_cast<std::size_t>(position)];
  if (pos.state == Position::State::Vacant) {
    throw SimFault("WorkerQuit for an already vacant position " + std::to_string(position));
  }
  if (pos.state == Position::State::Busy) {
    // The in-service unit is abandoned: its progress is lost and it goes
    // back to the head of the queue to be redone in full.
    kernel.cancel(pos.service_end);
    Unit& unit = units_.at(pos.unit_id);
    unit.disposition = Disposition::InQueue;
    unit.episode_start = kernel.now();
    pending_.push_front(pos.unit_id);
    pos.unit_id = -1;
  }
  pos.state = Position::State::Vacant;
  notify_staffing(kernel);

  EventPayload payload;
  payload.position = position;
  kernel.schedule(kernel.sample(Stream::Recruitment,
                                Dist::uniform(spec_.workforce.recruit_min_days,
                                              spec_.workforce.recruit_max_days)),
                  AgentId::Manufacturer, EventKind::WorkerHired, payload);
}

void Manufacturer::on_worker_hired(Kernel& kernel, int position) {
  Position& pos = positions_[static_cast<std::size_t>(position)];
  pos.state = Position::State::Idle;
  notify_staffing(kernel);
  schedule_quit(kernel, position);
  release_work_orders(kernel);
}

void Manufacturer::handle(Kernel& kernel, const Event& event) {
  switch (event.kind) {
    case EventKind::MessageDelivery: {
      const Message& msg = event.payload.msg;
      if (msg.kind == MessageKind::PurchaseOrder) {
        on_purchase_order(kernel, msg);
      } else {
        throw SimFault("manufacturer cannot handle message " +
                       std::string(message_kind_name(msg.kind)));
      }
      break;
    }
    case EventKind::MaterialArrival:
      on_material_arrival(kernel, event.payload.msg);
      break;
    case EventKind::ServiceEnd:
      on_service_end(kernel, event);
      break;
    case EventKind::WorkerQuit:
      on_worker_quit(kernel, event.payload.position);
      break;
    case EventKind::WorkerHired:
      on_worker_hired(kernel, event.payload.position);
      break;
    default:
      throw SimFault("manufacturer cannot handle event " +
                     std::string(event_kind_name(event.kind)));
  }
}

// ---------------------------------------------------------------- Supplier

void Supplier::handle(Kernel& kernel, const Event& event) {
  if (event.kind != EventKind::MessageDelivery) {
    throw SimFault("supplier cannot handle event " +
                   std::string(event_kind_name(event.kind)));
  }
  const Message& msg = event.payload.msg;
  switch (msg.kind) {
    case MessageKind::MaterialOrder: {
      Message shipment;
      shipment.kind = MessageKind::MaterialShipment;
      shipment.sender = AgentId::Supplier;
      shipment.recipient = AgentId::Manufacturer;
      shipment.qty = msg.qty;
      kernel.send(shipment, kernel.sample(Stream::SupplierLead, spec_.supplier.lead_dist()));
      break;
    }
    case MessageKind::ReturnNotice:
      ++returns_received_;  // scrap acknowledgment only
      break;
    default:
      throw SimFault("supplier cannot handle message " +
                     std::string(message_kind_name(msg.kind)));
  }
}

}  // namespace scsim
