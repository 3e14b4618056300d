#include <doctest.h>

#include <cmath>

#include "scsim/rng.hpp"

using namespace scsim;

TEST_CASE("uniform(10,15) sample mean is (a+b)/2") {
  RngStreams rng(7);
  const Dist u = Dist::uniform(10.0, 15.0);
  double sum = 0.0;
  const int n = 1'000'000;
  for (int i = 0; i < n; ++i) sum += rng.sample(Stream::DemandBurst, u);
  CHECK(sum / n == doctest::Approx(12.5).epsilon(0.001));
}

TEST_CASE("exponential(4) sample mean matches the law of large numbers") {
  RngStreams rng(11);
  const Dist e = Dist::exponential(4.0);
  double sum = 0.0;
  const int n = 1'000'000;
  for (int i = 0; i < n; ++i) sum += rng.sample(Stream::ServiceTime, e);
  CHECK(std::abs(sum / n - 4.0) < 0.02);
}

TEST_CASE("bernoulli(0) never fires, bernoulli(1) always does") {
  RngStreams rng(3);
  for (int i = 0; i < 1000; ++i) {
    CHECK(rng.sample(Stream::Inspection, Dist::bernoulli(0.0)) == 0.0);
    CHECK(rng.sample(Stream::Inspection, Dist::bernoulli(1.0)) == 1.0);
  }
}

TEST_CASE("reseeding with the same master seed replays every stream exactly") {
  RngStreams rng(99);
  std::vector<double> first;
  for (int i = 0; i < 200; ++i) first.push_back(rng.uniform01(Stream::DemandInterarrival));
  rng.reseed(99);
  for (int i = 0; i < 200; ++i) CHECK(rng.uniform01(Stream::DemandInterarrival) == first[i]);
}

TEST_CASE("adjacent master seeds diverge within 100 samples, seeds 0..99") {
  for (std::uint64_t s = 0; s < 100; ++s) {
    RngStreams a(s), b(s + 1);
    bool differ = false;
    for (int i = 0; i < 100 && !differ; ++i) {
      differ = a.uniform01(Stream::DemandInterarrival) != b.uniform01(Stream::DemandInterarrival);
    }
    CHECK(differ);
  }
}

TEST_CASE("streams are isolated: draining one leaves another untouched") {
  RngStreams fresh(5);
  const double expected = fresh.uniform01(Stream::Inspection);

  RngStreams drained(5);
  for (int i = 0; i < 1000; ++i) drained.uniform01(Stream::ServiceTime);
  CHECK(drained.uniform01(Stream::Inspection) == expected);
}

TEST_CASE("constant distributions consume no randomness") {
  RngStreams a(1), b(1);
  for (int i = 0; i < 10; ++i) a.sample(Stream::SupplierLead, Dist::constant(3.0));
  CHECK(a.uniform01(Stream::SupplierLead) == b.uniform01(Stream::SupplierLead));
}

TEST_CASE("malformed distribution parameters are configuration errors") {
  CHECK_THROWS_AS(Dist::uniform(15.0, 10.0).validate(), ConfigError);
  CHECK_THROWS_AS(Dist::exponential(0.0).validate(), ConfigError);
  CHECK_THROWS_AS(Dist::exponential(-1.0).validate(), ConfigError);
  CHECK_THROWS_AS(Dist::bernoulli(1.5).validate(), ConfigError);
  CHECK_THROWS_AS(Dist::constant(-0.1).validate(), ConfigError);
  CHECK_NOTHROW(Dist::uniform(10.0, 10.0).validate());
}
