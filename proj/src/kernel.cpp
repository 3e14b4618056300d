#include "scsim/kernel.hpp"

#include <cmath>
#include <cstdio>

#include "scsim/errors.hpp"

namespace scsim {

namespace {

constexpr std::string_view kAgentNames[kAgentCount] = {
    "customer", "distributor", "manufacturer", "supplier"};

constexpr std::string_view kEventKindNames[] = {
    "OrderArrival", "BurstArrival", "MessageDelivery", "ServiceEnd",
    "MaterialArrival", "WorkerQuit", "WorkerHired", "WarmupEnd", "HorizonEnd"};

constexpr std::string_view kMessageKindNames[] = {
    "PurchaseOrder", "MaterialOrder", "MaterialShipment",
    "GoodsShipment", "DeliveryNotice", "ReturnNotice"};

bool quantity_bearing(MessageKind k) {
  return k == MessageKind::PurchaseOrder || k == MessageKind::MaterialOrder ||
         k == MessageKind::MaterialShipment || k == MessageKind::GoodsShipment;
}

}  // namespace

std::string_view agent_name(AgentId id) { return kAgentNames[static_cast<int>(id)]; }
std::string_view event_kind_name(EventKind k) { return kEventKindNames[static_cast<int>(k)]; }
std::string_view message_kind_name(MessageKind k) { return kMessageKindNames[static_cast<int>(k)]; }

bool channel_legal(const Message& msg) {
  const AgentId s = msg.sender;
  const AgentId r = msg.recipient;
  switch (msg.kind) {
    case MessageKind::PurchaseOrder:
      return (s == AgentId::Customer && r == AgentId::Distributor) ||
             (s == AgentId::Distributor && r == AgentId::Manufacturer);
    case MessageKind::MaterialOrder:
      return s == AgentId::Manufacturer && r == AgentId::Supplier;
    case MessageKind::MaterialShipment:
      return s == AgentId::Supplier && r == AgentId::Manufacturer;
    case MessageKind::GoodsShipment:
    case MessageKind::DeliveryNotice:
      return (s == AgentId::Manufacturer && r == AgentId::Distributor) ||
             (s == AgentId::Distributor && r == AgentId::Customer);
    case MessageKind::ReturnNotice:
      return s == AgentId::Manufacturer && r == AgentId::Supplier;
  }
  return false;
}

Kernel::Handle Kernel::enqueue(double delay, std::optional<AgentId> target,
                               EventKind kind, EventPayload payload) {
  if (!(delay >= 0.0) || !std::isfinite(delay)) {
    throw ConfigError("schedule: delay must be finite and >= 0, got " +
                      std::to_string(delay));
  }
  Event ev;
  ev.time = clock_ + delay;
  ev.seq = next_seq_++;
  ev.target = target;
  ev.kind = kind;
  ev.payload = std::move(payload);
  queue_.push(ev);
  return ev.seq;
}

Kernel::Handle Kernel::schedule(double delay, AgentId target, EventKind kind,
                                EventPayload payload) {
  if (agents_[static_cast<int>(target)] == nullptr) {
    throw ConfigError("schedule: target agent '" + std::string(agent_name(target)) +
                      "' is not registered");
  }
  return enqueue(delay, target, kind, std::move(payload));
}

Kernel::Handle Kernel::schedule_marker(double delay, EventKind kind) {
  return enqueue(delay, std::nullopt, kind, {});
}

void Kernel::cancel(Handle handle) { cancelled_.insert(handle); }

void Kernel::register_agent(AgentId id, Agent* agent) {
  agents_[static_cast<int>(id)] = agent;
}

void Kernel::add_observer(SimObserver* observer) { observers_.push_back(observer); }

void Kernel::reseed(std::uint64_t master_seed) {
  if (running_) throw ConfigError("reseed: kernel is mid-run");
  rng_.reseed(master_seed);
}

void Kernel::send(Message msg, double transit) {
  if (!channel_legal(msg)) {
    throw SimFault("illegal channel: " + std::string(message_kind_name(msg.kind)) +
                   " from " + std::string(agent_name(msg.sender)) + " to " +
                   std::string(agent_name(msg.recipient)));
  }
  if (quantity_bearing(msg.kind) && msg.qty < 1) {
    throw SimFault("message " + std::string(message_kind_name(msg.kind)) +
                   " requires qty >= 1, got " + std::to_string(msg.qty));
  }
  msg.sent_at = clock_;
  const EventKind kind = msg.kind == MessageKind::MaterialShipment
                             ? EventKind::MaterialArrival
                             : EventKind::MessageDelivery;
  EventPayload payload;
  payload.msg = msg;
  schedule(transit, msg.recipient, kind, std::move(payload));
}

void Kernel::trace_event(const Event& ev) const {
  if (!trace_) return;
  char buf[128];
  std::snprintf(buf, sizeof(buf), "%.12g\t%llu\t", ev.time,
                static_cast<unsigned long long>(ev.seq));
  *trace_ << buf << (ev.target ? agent_name(*ev.target) : std::string_view("system"))
          << '\t' << event_kind_name(ev.kind) << '\n';
}

RunSummary Kernel::run(double horizon) {
  if (!(horizon > 0.0) || !std::isfinite(horizon)) {
    throw ConfigError("run: horizon must be finite and > 0");
  }
  bool any_agent = false;
  for (auto* a : agents_) any_agent = any_agent || a != nullptr;
  if (!any_agent) throw ConfigError("run: no agents registered");

  running_ = true;
  RunSummary summary;
  while (!queue_.empty()) {
    const Event ev = queue_.top();
    if (cancelled_.count(ev.seq) > 0) {
      queue_.pop();
      cancelled_.erase(ev.seq);
      continue;
    }
    if (ev.time > horizon) break;
    queue_.pop();
    clock_ = ev.time;
    trace_event(ev);
    ++summary.dispatched;
    try {
      if (ev.kind == EventKind::WarmupEnd) {
        notify([&](SimObserver& o) { o.on_warmup_end(ev.time); });
      } else if (!ev.target) {
        // markers other than WarmupEnd need no dispatch
      } else {
        Agent* agent = agents_[static_cast<int>(*ev.target)];
        agent->handle(*this, ev);
      }
    } catch (const SimFault& fault) {
      running_ = false;
      char ctx[160];
      std::snprintf(ctx, sizeof(ctx), "event seq=%llu t=%.12g kind=%s: ",
                    static_cast<unsigned long long>(ev.seq), ev.time,
                    std::string(event_kind_name(ev.kind)).c_str());
      throw SimFault(std::string(ctx) + fault.what());
    }
  }
  clock_ = horizon;
  Event end;
  end.time = horizon;
  end.seq = next_seq_++;
  end.kind = EventKind::HorizonEnd;
  trace_event(end);
  ++summary.dispatched;
  notify([&](SimObserver& o) { o.on_horizon_end(horizon); });
  summary.final_clock = clock_;
  running_ = false;
  return summary;
}

}  // namespace scsim
