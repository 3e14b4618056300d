#pragma once

#include <cstdint>

#include "scsim/domain.hpp"

namespace scsim {

// Metric hooks fired by the agents during dispatch. All methods default to
// no-ops so observers implement only what they need.
struct SimObserver {
  virtual ~SimObserver() = default;

  virtual void on_order_created(double /*t*/, const Order&) {}
  virtual void on_order_fulfilled(double /*t*/, const Order&) {}

  virtual void on_unit_queued(double /*t*/, std::int64_t /*unit_id*/) {}
  virtual void on_service_start(double /*t*/, std::int64_t /*unit_id*/, double /*wait*/) {}
  virtual void on_unit_completed(double /*t*/, std::int64_t /*unit_id*/, bool /*good*/,
                                 double /*flow_time*/) {}

  virtual void on_staffing_change(double /*t*/, int /*busy*/, int /*staffed*/) {}

  virtual void on_raw_change(double /*t*/, std::int64_t /*raw_units*/) {}
  virtual void on_raw_consumed(double /*t*/, std::int64_t /*qty*/) {}
  virtual void on_raw_arrived(double /*t*/, std::int64_t /*qty*/) {}

  virtual void on_warmup_end(double /*t*/) {}
  virtual void on_horizon_end(double /*t*/) {}
};

}  // namespace scsim
