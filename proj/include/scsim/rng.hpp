#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string_view>

#include "scsim/errors.hpp"

namespace scsim {

// One stream per stochastic process in the model. Streams are seeded
// independently from the master seed, so consuming samples from one never
// disturbs another. This is what makes common-random-number comparisons
// between a baseline and a perturbed scenario meaningful.
enum class Stream : int {
  DemandInterarrival = 0,
  DemandBurst,
  ServiceTime,
  Inspection,
  SupplierLead,
  WorkerTenure,
  Recruitment,
};

inline constexpr int kStreamCount = 7;

std::string_view stream_name(Stream s);

// Distribution spec. `a`/`b` hold min/max for Uniform; `a` holds the mean
// for Exponential, p for Bernoulli and the value for Constant.
struct Dist {
  enum class Kind { Uniform, Exponential, Bernoulli, Constant };

  Kind kind = Kind::Constant;
  double a = 0.0;
  double b = 0.0;

  static Dist uniform(double lo, double hi) { return {Kind::Uniform, lo, hi}; }
  static Dist exponential(double mean) { return {Kind::Exponential, mean, 0.0}; }
  static Dist bernoulli(double p) { return {Kind::Bernoulli, p, 0.0}; }
  static Dist constant(double value) { return {Kind::Constant, value, 0.0}; }

  double mean() const;
  void validate() const;  // throws ConfigError on malformed parameters

  bool operator==(const Dist&) const = default;
};

// Named seeded generator streams. Two instances built from the same master
// seed produce identical per-stream sample sequences; each stream's sequence
// depends only on (master_seed, stream name).
class RngStreams {
public:
  explicit RngStreams(std::uint64_t master_seed = 0) { reseed(master_seed); }

  void reseed(std::uint64_t master_seed);
  std::uint64_t master_seed() const { return master_; }

  // Uniform draw in [0, 1) from the named stream.
  double uniform01(Stream s);

  // Samples by inversion of the stream's uniform; Constant consumes no draw.
  // Bernoulli returns 1.0 iff u < p, so raising p can only add successes
  // under shared uniforms.
  double sample(Stream s, const Dist& dist);

private:
  std::uint64_t master_ = 0;
  std::array<std::mt19937_64, kStreamCount> engines_;
};

}  // namespace scsim
