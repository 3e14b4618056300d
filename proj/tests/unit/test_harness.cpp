#include <doctest.h>

#include <cmath>

#include "scsim/harness.hpp"

using namespace scsim;

namespace {

// Short, loaded scenario used where the exact dynamics do not matter.
ScenarioSpec small_spec() {
  ScenarioSpec spec;
  spec.name = "small";
  spec.horizon_days = 300.0;
  spec.warmup_days = 50.0;
  spec.replications = 5;
  return spec;
}

}  // namespace

TEST_CASE("identical seeds reproduce the card bit for bit") {
  const ScenarioSpec spec = small_spec();
  const ScorCard a = run_scenario(spec, 42);
  const ScorCard b = run_scenario(spec, 42);
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    CHECK(a.entries()[i].value == b.entries()[i].value);
  }
  CHECK(a.completions_all == b.completions_all);

  const ScorCard c = run_scenario(spec, 43);
  CHECK(c.completions_all != a.completions_all);
}

TEST_CASE("percent_delta matches hand-computed examples") {
  CHECK(*percent_delta(2.8, 2.9) == doctest::Approx(3.5714285714));
  CHECK(*percent_delta(6.8, 13.8) == doctest::Approx(102.9411764706));
  CHECK(*percent_delta(5.0, 5.0) == doctest::Approx(0.0));
  CHECK(*percent_delta(4.0, 3.0) == doctest::Approx(-25.0));
  CHECK(!percent_delta(0.0, 1.0).has_value());
}

TEST_CASE("replication r runs under master_seed + r") {
  const ScenarioSpec spec = small_spec();
  const ReplicationSet reps = run_replications(spec);
  REQUIRE(reps.seeds.size() == 5);
  REQUIRE(reps.cards.size() == 5);
  for (std::size_t r = 0; r < reps.seeds.size(); ++r) {
    CHECK(reps.seeds[r] == spec.master_seed + r);
    CHECK(reps.cards[r].seed == spec.master_seed + r);
    // the aggregate must match an independent single run at the same seed
    const ScorCard solo = run_scenario(spec, reps.seeds[r]);
    CHECK(solo.completions_all == reps.cards[r].completions_all);
  }
}

TEST_CASE("summarize handles gaps and degenerate inputs") {
  const SummaryStat empty = summarize({});
  CHECK(!empty.computed);

  const SummaryStat gap = summarize({1.0, std::nullopt, 3.0});
  CHECK(!gap.computed);

  const SummaryStat one = summarize({std::optional<double>(7.0)});
  CHECK(one.computed);
  CHECK(one.mean == doctest::Approx(7.0));
  CHECK(one.ci_half == doctest::Approx(0.0));

  const SummaryStat flat = summarize({2.0, 2.0, 2.0, 2.0});
  CHECK(flat.mean == doctest::Approx(2.0));
  CHECK(flat.stddev == doctest::Approx(0.0));

  const SummaryStat pair = summarize({1.0, 3.0});
  CHECK(pair.mean == doctest::Approx(2.0));
  CHECK(pair.stddev == doctest::Approx(std::sqrt(2.0)));
  CHECK(pair.ci_half == doctest::Approx(1.96 * std::sqrt(2.0) / std::sqrt(2.0)));
}

TEST_CASE("confidence intervals shrink like one over root n") {
  ScenarioSpec spec = small_spec();
  spec.replications = 20;
  const SummaryStat s20 = summarize([&] {
    std::vector<std::optional<double>> v;
    for (const auto& card : run_replications(spec).cards) v.push_back(card.cycle_time);
    return v;
  }());

  spec.replications = 80;
  const SummaryStat s80 = summarize([&] {
    std::vector<std::optional<double>> v;
    for (const auto& card : run_replications(spec).cards) v.push_back(card.cycle_time);
    return v;
  }());

  REQUIRE(s20.computed);
  REQUIRE(s80.computed);
  CHECK(s80.ci_half / s20.ci_half == doctest::Approx(0.5).epsilon(0.35));
}

TEST_CASE("a null perturbation yields exactly zero deltas under CRN") {
  const ScenarioSpec spec = small_spec();
  const ReplicationSet base = run_replications(spec);
  const ReplicationSet same = run_replications(spec);
  const ReportRow row = build_row("attr", "metric", "no change", "null",
                                  base, same, {1, 1, 1, 1, 1});
  for (const auto& cell : row.cells) {
    REQUIRE(cell.delta_pct.has_value());
    CHECK(*cell.delta_pct == doctest::Approx(0.0));
    CHECK(cell.near_zero);
    // a near-zero delta passes a sign assertion rather than failing it
    CHECK(cell.verdict == Verdict::Pass);
  }
}

TEST_CASE("verdicts follow the sign of the paired confidence interval") {
  auto card_with_cycle = [](std::uint64_t seed, double cycle) {
    ScorCard c;
    c.seed = seed;
    c.cycle_time = cycle;
    c.worker_utilization = 0.5;
    c.waiting_time_in_process = 1.0;
    c.wip_average = 4.0;
    c.rejected_parts = 10.0;
    return c;
  };
  ReplicationSet base, up, down, noisy;
  for (std::uint64_t r = 0; r < 10; ++r) {
    base.seeds.push_back(r);
    up.seeds.push_back(r);
    down.seeds.push_back(r);
    noisy.seeds.push_back(r);
    const double jitter = 0.01 * static_cast<double>(r % 3);
    base.cards.push_back(card_with_cycle(r, 10.0 + jitter));
    up.cards.push_back(card_with_cycle(r, 11.0 + jitter));
    down.cards.push_back(card_with_cycle(r, 9.0 + jitter));
    // alternating sign differences with a small positive mean: the CI
    // straddles zero even though the point estimate does not
    noisy.cards.push_back(card_with_cycle(r, 10.0 + jitter + (r % 2 ? 1.2 : -1.0)));
  }

  const std::array<int, 5> assert_cycle = {1, 0, 0, 0, 0};
  const ReportRow inc = build_row("a", "m", "i", "t", base, up, assert_cycle);
  CHECK(inc.cells[0].verdict == Verdict::Pass);
  CHECK(*inc.cells[0].delta_pct > 9.0);
  CHECK(inc.cells[1].verdict == Verdict::NotAsserted);

  const ReportRow dec = build_row("a", "m", "i", "t", base, down, assert_cycle);
  CHECK(dec.cells[0].verdict == Verdict::Fail);

  const ReportRow wide = build_row("a", "m", "i", "t", base, noisy, assert_cycle);
  CHECK(wide.cells[0].verdict == Verdict::Fail);  // CI includes zero

  CHECK(verdict_name(Verdict::Pass) == "PASS");
  CHECK(verdict_name(Verdict::Fail) == "FAIL");
  CHECK(verdict_name(Verdict::NotAsserted) == "N/A");
}

TEST_CASE("more error means more rejects in every paired replication") {
  ScenarioSpec spec = small_spec();
  spec.replications = 10;
  const ReplicationSet base = run_replications(spec);
  const ReplicationSet worse =
      run_replications(apply_perturbation(spec, Perturbation::error(0.05)));
  for (std::size_t r = 0; r < base.cards.size(); ++r) {
    REQUIRE(base.cards[r].rejected_parts.has_value());
    REQUIRE(worse.cards[r].rejected_parts.has_value());
    // inversion on a shared inspection stream makes this monotone per seed
    CHECK(*worse.cards[r].rejected_parts >= *base.cards[r].rejected_parts);
  }
}

TEST_CASE("the sensitivity suite is reproducible and structurally complete") {
  ScenarioSpec spec = small_spec();
  spec.replications = 3;
  const SensitivityReport a = sensitivity_suite(spec);
  const SensitivityReport b = sensitivity_suite(spec);
  REQUIRE(a.rows.size() == 4);
  CHECK(a.replications == 3);
  CHECK(a.seeds.size() == 3);
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    CHECK(!a.rows[i].issue.empty());
    CHECK(!a.rows[i].attribute.empty());
    for (std::size_t c = 0; c < 5; ++c) {
      CHECK(a.rows[i].cells[c].delta_pct == b.rows[i].cells[c].delta_pct);
    }
  }
}
