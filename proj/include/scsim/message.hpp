#pragma once

#include <cstdint>
#include <string_view>

namespace scsim {

// Exactly one agent per role in every simulation.
enum class AgentId : int { Customer = 0, Distributor, Manufacturer, Supplier };

inline constexpr int kAgentCount = 4;

std::string_view agent_name(AgentId id);

enum class MessageKind {
  PurchaseOrder,     // Customer -> Distributor -> Manufacturer
  MaterialOrder,     // Manufacturer -> Supplier
  MaterialShipment,  // Supplier -> Manufacturer
  GoodsShipment,     // Manufacturer -> Distributor
  DeliveryNotice,    // Distributor -> Customer
  ReturnNotice,      // Manufacturer -> Supplier
};

std::string_view message_kind_name(MessageKind k);

// The sole inter-agent payload; agents hold no references to each other and
// talk only through kernel-routed messages.
struct Message {
  MessageKind kind = MessageKind::PurchaseOrder;
  AgentId sender = AgentId::Customer;
  AgentId recipient = AgentId::Distributor;
  std::int64_t order_id = -1;
  std::int64_t unit_id = -1;
  std::int64_t qty = 0;
  double sent_at = 0.0;
};

// Chain topology: only the channels of the four-tier chain are legal.
bool channel_legal(const Message& msg);

}  // namespace scsim
