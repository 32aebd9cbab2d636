#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "naples/error.hpp"
#include "naples/enumerate.hpp"
#include "oracles.hpp"

using namespace naples;

namespace {

ParkingPreference P(std::vector<int> v) { return ParkingPreference(std::move(v)); }

struct Row {
  int n, k;
  std::uint64_t naples, complete, complete_naples, perm_invariant;
};

// Computed by an independent brute-force script (perm_invariant by trying
// every rearrangement).
const std::vector<Row> kTable = {
    {1, 0, 1, 0, 0, 1},          {1, 1, 1, 0, 0, 1},
    {2, 0, 3, 1, 0, 3},          {2, 1, 4, 1, 1, 4},
    {2, 2, 4, 1, 1, 4},          {3, 0, 16, 4, 0, 16},
    {3, 1, 24, 4, 1, 23},        {3, 2, 27, 4, 4, 27},
    {3, 3, 27, 4, 4, 27},        {4, 0, 125, 27, 0, 125},
    {4, 1, 203, 27, 1, 192},     {4, 2, 240, 27, 11, 229},
    {4, 3, 256, 27, 27, 256},    {4, 4, 256, 27, 27, 256},
    {5, 0, 1296, 256, 0, 1296},  {5, 1, 2225, 256, 1, 2077},
    {5, 2, 2731, 256, 38, 2558}, {5, 3, 3000, 256, 131, 2869},
    {5, 4, 3125, 256, 256, 3125}, {5, 5, 3125, 256, 256, 3125},
};

}  // namespace

TEST(Sweep, FrozenCounts) {
  for (const auto& row : kTable) {
    const auto r = sweep(row.n, row.k);
    SCOPED_TRACE("n=" + std::to_string(row.n) + " k=" + std::to_string(row.k));
    EXPECT_EQ(r.total, oracle::ipow(row.n, row.n));
    EXPECT_EQ(r.count(Predicate::ParkingFunction), oracle::ipow(row.n + 1, row.n - 1));
    EXPECT_EQ(r.count(Predicate::KNaples), row.naples);
    EXPECT_EQ(r.count(Predicate::Complete), row.complete);
    EXPECT_EQ(r.count(Predicate::CompleteKNaples), row.complete_naples);
    EXPECT_EQ(r.count(Predicate::PermInvariant), row.perm_invariant);
  }
}

TEST(Sweep, SixCarNaplesCounts) {
  SweepOptions opts;
  opts.predicates = {Predicate::KNaples};
  EXPECT_EQ(sweep(6, 1, opts).count(Predicate::KNaples), 30067u);
  EXPECT_EQ(sweep(6, 2, opts).count(Predicate::KNaples), 38034u);
}

TEST(Sweep, CountsMatchOracle) {
  for (int n = 1; n <= 6; ++n) {
    for (int k = 0; k <= n; ++k) {
      std::uint64_t naples = 0, complete = 0;
      oracle::for_each_preference(n, [&](const oracle::Seq& a) {
        naples += oracle::all_park(a, k);
        complete += oracle::is_complete(a);
      });
      const auto r = sweep(n, k);
      ASSERT_EQ(r.count(Predicate::KNaples), naples);
      ASSERT_EQ(r.count(Predicate::Complete), complete);
    }
  }
}

TEST(Sweep, MonotoneInK) {
  for (int n = 1; n <= 6; ++n) {
    std::uint64_t prev = 0;
    for (int k = 0; k <= n; ++k) {
      const auto c = sweep(n, k).count(Predicate::KNaples);
      EXPECT_GE(c, prev);
      prev = c;
    }
    EXPECT_EQ(prev, oracle::ipow(n, n));
  }
}

TEST(Sweep, ListsRejected) {
  SweepOptions opts;
  opts.list_rejected = Predicate::KNaples;
  const auto r = sweep(3, 1, opts);
  EXPECT_EQ(r.rejected, (std::vector<ParkingPreference>{P({2, 3, 3}), P({3, 2, 3}),
                                                        P({3, 3, 3})}));
}

TEST(Sweep, ShardIndependent) {
  SweepOptions base;
  base.list_rejected = Predicate::KNaples;
  base.list_limit = 10000;
  const auto one = sweep(6, 2, base);
  for (unsigned shards : {2u, 3u, 4u, 7u}) {
    auto opts = base;
    opts.shards = shards;
    const auto r = sweep(6, 2, opts);
    EXPECT_EQ(r.counts, one.counts);
    EXPECT_EQ(r.rejected, one.rejected);
  }
}

TEST(Sweep, CounterexampleIsLowestRankForAnyShardCount) {
  SweepOptions opts;
  opts.verify = true;
  opts.properties = {"excess_bound_is_sufficient"};
  for (unsigned shards : {1u, 2u, 4u, 8u}) {
    opts.shards = shards;
    const auto r = sweep(4, 1, opts);
    ASSERT_TRUE(r.violation);
    // First preference in odometer order with max u <= 1 that does not park.
    std::optional<oracle::Seq> first;
    oracle::for_each_preference(4, [&](const oracle::Seq& a) {
      const auto u = oracle::excess(a);
      if (!first && *std::max_element(u.begin(), u.end()) <= 1 && !oracle::all_park(a, 1)) {
        first = a;
      }
    });
    ASSERT_TRUE(first);
    EXPECT_EQ(r.violation->preference.values(), *first);
  }
}

TEST(Sweep, Limits) {
  EXPECT_THROW(sweep(0, 0), Error);
  EXPECT_THROW(sweep(9, 1), Error);
  EXPECT_THROW(sweep(3, 4), Error);
  EXPECT_THROW(sweep(3, -1), Error);
  SweepOptions opts;
  opts.verify = true;
  opts.properties = {"no_such_property"};
  EXPECT_THROW(sweep(2, 1, opts), Error);
  EXPECT_THROW(parse_predicate("nope"), Error);
}

TEST(Sweep, PredicateNamesRoundTrip) {
  for (auto p : kAllPredicates) EXPECT_EQ(parse_predicate(to_string(p)), p);
}

TEST(Rank, RoundTrip) {
  EXPECT_EQ(preference_at_rank(3, 0), P({1, 1, 1}));
  EXPECT_EQ(preference_at_rank(3, 26), P({3, 3, 3}));
  EXPECT_EQ(preference_at_rank(3, 1), P({1, 1, 2}));
  std::uint64_t rank = 0;
  oracle::for_each_preference(4, [&](const oracle::Seq& a) {
    ASSERT_EQ(preference_at_rank(4, rank).values(), a);
    ASSERT_EQ(rank_of(P(a)), rank);
    ++rank;
  });
  EXPECT_EQ(preference_count(4), 256u);
}

TEST(PermInvariant, FastCountMatchesSweep) {
  for (int n = 1; n <= 6; ++n) {
    for (int k = 0; k <= n; ++k) {
      SweepOptions opts;
      opts.predicates = {Predicate::PermInvariant};
      const auto fast = count_perm_invariant_fast(n, k);
      EXPECT_EQ(fast.sequences, sweep(n, k, opts).count(Predicate::PermInvariant));
      std::set<oracle::Seq> classes;
      oracle::for_each_preference(n, [&](const oracle::Seq& a) {
        auto sorted = a;
        std::sort(sorted.begin(), sorted.end());
        const auto all = oracle::rearrangements(sorted);
        if (std::all_of(all.begin(), all.end(),
                        [k](const oracle::Seq& r) { return oracle::all_park(r, k); })) {
          classes.insert(sorted);
        }
      });
      EXPECT_EQ(fast.classes, classes.size()) << n << " " << k;
    }
  }
}

TEST(PermInvariant, ZeroIsParkingFunctions) {
  for (int n = 1; n <= 9; ++n) {
    EXPECT_EQ(count_perm_invariant_fast(n, 0).sequences, oracle::ipow(n + 1, n - 1));
  }
  EXPECT_THROW(count_perm_invariant_fast(15, 1), Error);
}

TEST(Counterexample, FalseStatementIsCaught) {
  const auto c = find_counterexample(4, 4, "excess_bound_is_sufficient");
  ASSERT_TRUE(c);
  EXPECT_EQ(c->preference, P({2, 3, 3}));
  EXPECT_EQ(c->k, 1);
  EXPECT_EQ(c->property, "excess_bound_is_sufficient");
}

TEST(Counterexample, TrueStatementsHold) {
  EXPECT_FALSE(find_counterexample(5, 5, "main_characterization").has_value());
  EXPECT_FALSE(find_counterexample(5, 5, "permutation_invariance", 2).has_value());
  EXPECT_THROW(find_counterexample(3, 3, "no_such_property"), Error);
}
