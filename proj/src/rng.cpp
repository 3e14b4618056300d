#include "scsim/rng.hpp"

#include <cmath>
#include <sstream>

namespace scsim {

namespace {

constexpr std::string_view kStreamNames[kStreamCount] = {
    "demand_interarrival", "demand_burst", "service_time", "inspection",
    "supplier_lead",       "worker_tenure", "recruitment",
};

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return h;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

}  // namespace

std::string_view stream_name(Stream s) { return kStreamNames[static_cast<int>(s)]; }

double Dist::mean() const {
  switch (kind) {
    case Kind::Uniform: return 0.5 * (a + b);
    case Kind::Exponential: return a;
    case Kind::Bernoulli: return a;
    case Kind::Constant: return a;
  }
  return 0.0;
}

void Dist::validate() const {
  auto fail = [](const std::string& msg) { throw ConfigError("distribution: " + msg); };
  if (!std::isfinite(a) || !std::isfinite(b)) fail("parameters must be finite");
  switch (kind) {
    case Kind::Uniform:
      if (a > b) fail("uniform requires min <= max");
      break;
    case Kind::Exponential:
      if (a <= 0.0) fail("exponential requires mean > 0");
      break;
    case Kind::Bernoulli:
      if (a < 0.0 || a > 1.0) fail("bernoulli requires p in [0, 1]");
      break;
    case Kind::Constant:
      if (a < 0.0) fail("constant requires value >= 0");
      break;
  }
}

void RngStreams::reseed(std::uint64_t master_seed) {
  master_ = master_seed;
  for (int i = 0; i < kStreamCount; ++i) {
    // Stream identity is a stable hash of the stream name mixed into the
    // master seed, so sequences depend only on (master_seed, name).
    engines_[i].seed(splitmix64(master_seed ^ fnv1a(kStreamNames[i])));
  }
}

double RngStreams::uniform01(Stream s) {
  auto& eng = engines_[static_cast<int>(s)];
  return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

double RngStreams::sample(Stream s, const Dist& dist) {
  dist.validate();
  switch (dist.kind) {
    case Dist::Kind::Constant:
      return dist.a;
    case Dist::Kind::Uniform:
      return dist.a + (dist.b - dist.a) * uniform01(s);
    case Dist::Kind::Exponential:
      return -dist.a * std::log1p(-uniform01(s));
    case Dist::Kind::Bernoulli:
      return uniform01(s) < dist.a ? 1.0 : 0.0;
  }
  throw ConfigError("distribution: unknown kind");
}

}  // namespace scsim
