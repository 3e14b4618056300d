#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <ostream>
#include <queue>
#include <unordered_set>
#include <vector>

#include "scsim/event.hpp"
#include "scsim/observer.hpp"
#include "scsim/rng.hpp"

namespace scsim {

class Kernel;

struct RunSummary {
  std::uint64_t dispatched = 0;
  double final_clock = 0.0;
};

class Agent {
public:
  virtual ~Agent() = default;
  virtual void handle(Kernel& kernel, const Event& event) = 0;
};

// Deterministic single-threaded discrete-event engine. Events dispatch in
// (time, seq) order; cancellation is lazy (voided entries are skipped on pop).
class Kernel {
public:
  using Handle = std::uint64_t;

  explicit Kernel(std::uint64_t master_seed) : rng_(master_seed) {}

  double now() const { return clock_; }

  Handle schedule(double delay, AgentId target, EventKind kind, EventPayload payload = {});
  Handle schedule_marker(double delay, EventKind kind);
  void cancel(Handle handle);

  void register_agent(AgentId id, Agent* agent);
  void add_observer(SimObserver* observer);

  template <class F>
  void notify(F&& fn) {
    for (auto* obs : observers_) fn(*obs);
  }

  RngStreams& rng() { return rng_; }
  double sample(Stream s, const Dist& dist) { return rng_.sample(s, dist); }
  double uniform01(Stream s) { return rng_.uniform01(s); }
  void reseed(std::uint64_t master_seed);

  // Routes a message: validates the channel, then schedules delivery for the
  // recipient at now + transit. MaterialShipment deliveries carry the
  // MaterialArrival kind so they are distinguishable in traces and handlers.
  void send(Message msg, double transit);

  // Dispatches until the queue is empty or the next event lies beyond the
  // horizon, then notifies observers of HorizonEnd at the horizon.
  RunSummary run(double horizon);

  // Line-per-event text trace: time<TAB>seq<TAB>target<TAB>kind
  void set_trace(std::ostream* out) { trace_ = out; }

private:
  Handle enqueue(double delay, std::optional<AgentId> target, EventKind kind,
                 EventPayload payload);
  void trace_event(const Event& ev) const;

  struct Later {
    bool operator()(const Event& a, const Event& b) const {
      if (a.time != b.time) return a.time > b.time;
      return a.seq > b.seq;
    }
  };

  double clock_ = 0.0;
  std::uint64_t next_seq_ = 0;
  bool running_ = false;
  std::priority_queue<Event, std::vector<Event>, Later> queue_;
  std::unordered_set<Handle> cancelled_;
  std::array<Agent*, kAgentCount> agents_{};
  std::vector<SimObserver*> observers_;
  RngStreams rng_;
  std::ostream* trace_ = nullptr;
};

}  // namespace scsim
