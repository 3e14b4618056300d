#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "scsim/message.hpp"

namespace scsim {

enum class EventKind {
  OrderArrival,
  BurstArrival,
  MessageDelivery,
  ServiceEnd,
  MaterialArrival,
  WorkerQuit,
  WorkerHired,
  WarmupEnd,
  HorizonEnd,
};

std::string_view event_kind_name(EventKind k);

struct EventPayload {
  Message msg{};               // MessageDelivery / MaterialArrival
  int position = -1;           // ServiceEnd / WorkerQuit / WorkerHired
  std::int64_t unit_id = -1;   // ServiceEnd
};

// (time, seq) is the unique total-order key; seq increases in schedule order,
// so simultaneous events dispatch FIFO.
struct Event {
  double time = 0.0;
  std::uint64_t seq = 0;
  std::optional<AgentId> target;  // nullopt: marker event for the observers
  EventKind kind = EventKind::OrderArrival;
  EventPayload payload{};
};

}  // namespace scsim
