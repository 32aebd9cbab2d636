#include <gtest/gtest.h>

#include <algorithm>

#include "naples/characterize.hpp"
#include "naples/classify.hpp"
#include "naples/error.hpp"
#include "oracles.hpp"

using namespace naples;

namespace {

ParkingPreference P(std::vector<int> v) { return ParkingPreference(std::move(v)); }

const ParkingPreference kTen = P({8, 4, 7, 1, 6, 8, 7, 5, 10, 1});

}  // namespace

TEST(Witness, TenCarExample) {
  const auto u = excess(kTen);
  ASSERT_EQ(u.critical_intervals(), (std::vector<Interval>{{4, 7}}));
  const auto w = find_witness(kTen, 2, {4, 7});
  ASSERT_TRUE(w);
  EXPECT_EQ(w->cars, IndexSet({2, 3, 5, 7, 8}));
  EXPECT_EQ(w->shifted_restriction, P({2, 5, 4, 5, 3}));
  const auto check = check_certificate(kTen, 2, *w);
  EXPECT_TRUE(check.valid());
  EXPECT_TRUE(check.size_bound);
}

TEST(Witness, TenCarExampleAllWitnesses) {
  const auto all = all_witnesses(kTen, 2, {4, 7}, 5);
  std::vector<IndexSet> cars;
  for (const auto& w : all) cars.push_back(w.cars);
  EXPECT_EQ(cars, (std::vector<IndexSet>{IndexSet({2, 3, 5, 7, 8}),
                                         IndexSet({1, 2, 3, 6, 7, 8}),
                                         IndexSet({1, 2, 5, 6, 7, 8})}));
}

TEST(Witness, NoneWhenNotNaples) {
  const auto alpha = P({2, 3, 3});
  EXPECT_FALSE(find_witness(alpha, 1, {2, 3}).has_value());
  EXPECT_FALSE(verify_main_theorem(alpha, 1));
  const auto w = find_witness(alpha, 2, {2, 3});
  ASSERT_TRUE(w);
  EXPECT_EQ(w->cars, IndexSet({1, 2, 3}));
  EXPECT_EQ(w->shifted_restriction, alpha);
}

TEST(Witness, RejectsBadArguments) {
  const auto alpha = P({2, 3, 3});
  try {
    find_witness(alpha, 1, {2, 2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotMaximalInterval);
  }
  EXPECT_THROW(find_witness(alpha, 0, {2, 3}), Error);
  EXPECT_THROW(all_witnesses(P(std::vector<int>(13, 13)), 1, {2, 13}, 2), Error);
}

TEST(Witness, TamperedCertificateFailsCheck) {
  auto w = *find_witness(kTen, 2, {4, 7});
  w.cars = IndexSet({2, 3, 5, 7, 9});
  EXPECT_FALSE(check_certificate(kTen, 2, w).in_range);
}

TEST(Witness, ExhaustiveSearchMatchesOracle) {
  for (int n = 2; n <= 6; ++n) {
    oracle::for_each_preference(n, [&](const oracle::Seq& a) {
      const auto alpha = P(a);
      const auto intervals = excess(alpha).critical_intervals();
      for (int k = 1; k <= n; ++k) {
        const bool naples = oracle::all_park(a, k);
        bool all_have = true;
        for (const auto& iv : intervals) {
          const auto expected = oracle::witnesses(a, k, iv.first, 2);
          const auto got = all_witnesses(alpha, k, iv, 2);
          ASSERT_EQ(got.size(), expected.size());
          for (std::size_t i = 0; i < got.size(); ++i) {
            ASSERT_EQ(got[i].cars.values(), expected[i]);
            // Any witness at all is large enough.
            ASSERT_GE(got[i].cars.size(), iv.size() + 1);
          }
          const auto w = find_witness(alpha, k, iv);
          ASSERT_EQ(w.has_value(), !expected.empty());
          if (w) {
            ASSERT_TRUE(check_certificate(alpha, k, *w).valid());
          }
          if (naples) {
            ASSERT_TRUE(construct_witness(alpha, k, iv).has_value());
          }
          all_have = all_have && w.has_value();
        }
        ASSERT_EQ(all_have, naples);
        ASSERT_EQ(verify_main_theorem(alpha, k), naples);
      }
    });
  }
}

TEST(Decomposition, Example) {
  const auto r = verify_decomposition_lemma(P({4, 4, 3, 2, 3}), 1, 4);
  EXPECT_TRUE(r.upper_naples);
  ASSERT_TRUE(r.lower_naples.has_value());
  EXPECT_FALSE(*r.lower_naples);
  EXPECT_EQ(r.upper_cars_parked_below, (std::vector<int>{2}));
  EXPECT_THROW(verify_decomposition_lemma(P({4, 4, 3, 2, 3}), 1, 3), Error);
  EXPECT_THROW(verify_decomposition_lemma(P({2, 3, 3}), 1, 1), Error);
}

TEST(Decomposition, UpperPartAlwaysParks) {
  for (int n = 1; n <= 6; ++n) {
    oracle::for_each_preference(n, [&](const oracle::Seq& a) {
      const auto u = oracle::excess(a);
      for (int k = 0; k <= n; ++k) {
        if (!oracle::all_park(a, k)) continue;
        for (int j = 1; j <= n; ++j) {
          if (u[j - 1] != 0) continue;
          oracle::Seq upper;
          for (int x : a) {
            if (x >= j) upper.push_back(x - (j - 1));
          }
          ASSERT_TRUE(oracle::all_park(upper, k));
          ASSERT_TRUE(verify_decomposition_lemma(P(a), k, j).upper_naples);
        }
      }
    });
  }
}

TEST(Summary, Examples) {
  const auto bad = verify_summary_theorem(P({2, 3, 3}), 1);
  ASSERT_EQ(bad.intervals.size(), 1u);
  EXPECT_FALSE(bad.intervals[0].spot_filled);
  EXPECT_FALSE(bad.intervals[0].witness.has_value());
  EXPECT_FALSE(bad.intervals[0].small);
  EXPECT_FALSE(bad.k_naples);
  EXPECT_FALSE(bad.large_intervals_satisfied);

  const auto good = verify_summary_theorem(kTen, 2);
  ASSERT_EQ(good.intervals.size(), 1u);
  EXPECT_TRUE(good.intervals[0].spot_filled);
  EXPECT_TRUE(good.k_naples);
  EXPECT_TRUE(good.large_intervals_satisfied);

  const auto pf = verify_summary_theorem(P({1, 2, 3}), 1);
  EXPECT_TRUE(pf.intervals.empty());
  EXPECT_TRUE(pf.k_naples);
}

TEST(Summary, SpotFilledMatchesDirectParking) {
  for (int n = 2; n <= 6; ++n) {
    oracle::for_each_preference(n, [&](const oracle::Seq& a) {
      for (int k = 1; k <= n; ++k) {
        const auto report = verify_summary_theorem(P(a), k);
        ASSERT_EQ(report.k_naples, oracle::all_park(a, k));
        for (const auto& s : report.intervals) {
          const int p = s.interval.first;
          oracle::Seq sub;
          for (int x : a) {
            if (x >= p) sub.push_back(x - (p - 2));
          }
          const auto spots = oracle::park(sub, k);
          const bool filled = std::find(spots.begin(), spots.end(), 1) != spots.end();
          ASSERT_EQ(s.spot_filled, filled);
          ASSERT_EQ(s.witness.has_value(), filled);
        }
      }
    });
  }
}
