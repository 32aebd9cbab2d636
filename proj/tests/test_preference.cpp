#include <gtest/gtest.h>

#include <random>

#include "naples/error.hpp"
#include "naples/preference.hpp"
#include "oracles.hpp"

using namespace naples;

namespace {

ParkingPreference P(std::vector<int> v) { return ParkingPreference(std::move(v)); }

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected naples::Error";
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST(Preference, RejectsEmptyAndOutOfRange) {
  EXPECT_EQ(code_of([] { P({}); }), ErrorCode::InvalidPreference);
  EXPECT_EQ(code_of([] { P({1, 4, 2}); }), ErrorCode::InvalidPreference);
  EXPECT_EQ(code_of([] { P({0, 1}); }), ErrorCode::InvalidPreference);
}

TEST(Preference, ParseAcceptsSpacesAndNamesBadToken) {
  EXPECT_EQ(ParkingPreference::parse("3, 1,3 ,5,2,4,2"), P({3, 1, 3, 5, 2, 4, 2}));
  try {
    ParkingPreference::parse("1,2,,3");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ParseError);
    EXPECT_NE(std::string(e.what()).find("''"), std::string::npos);
  }
  try {
    ParkingPreference::parse("1,2a");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ParseError);
    EXPECT_NE(std::string(e.what()).find("'2a'"), std::string::npos);
  }
}

TEST(Preference, TextRoundTrip) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12);
    std::vector<int> v(n);
    for (int& x : v) x = 1 + static_cast<int>(rng() % n);
    const auto alpha = P(v);
    EXPECT_EQ(ParkingPreference::parse(to_string(alpha)), alpha);
  }
}

TEST(Multiplicities, Examples) {
  EXPECT_EQ(multiplicities(P({3, 1, 3, 5, 2, 4, 2})).values(),
            (std::vector<int>{1, 2, 2, 1, 1, 0, 0}));
  const auto m = multiplicities(P({3, 1, 3, 5, 2, 4, 2}));
  EXPECT_EQ(m.of(3), 2);
  EXPECT_EQ(m.of(6), 0);
  EXPECT_EQ(multiplicities(P({1, 2, 3})).values(), (std::vector<int>{1, 1, 1}));
  EXPECT_EQ(multiplicities(P({5, 3, 3, 5, 4})).values(), (std::vector<int>{0, 0, 2, 1, 2}));
}

TEST(Excess, Examples) {
  const auto u = excess(P({2, 3, 3}));
  EXPECT_EQ(u.values(), (std::vector<int>{0, 1, 1}));
  EXPECT_EQ(u.critical_intervals(), (std::vector<Interval>{{2, 3}}));

  const auto id = excess(P({1, 2, 3, 4, 5, 6}));
  EXPECT_EQ(id.values(), std::vector<int>(6, 0));
  EXPECT_TRUE(id.critical_intervals().empty());

  const auto v = excess(P({3, 4, 4, 4, 3}));
  EXPECT_EQ(v.of(4), 1);
  EXPECT_EQ(v.of(5), -1);

  // By hand: m = (0,0,2,2,1) gives u = (0,1,2,1,0).
  const auto w = excess(P({5, 3, 3, 4, 4}));
  EXPECT_EQ(w.values(), (std::vector<int>{0, 1, 2, 1, 0}));
  EXPECT_EQ(w.critical_intervals(), (std::vector<Interval>{{2, 4}}));
}

TEST(Excess, AgreesWithDefinitionOnAllSmallPreferences) {
  for (int n = 1; n <= 6; ++n) {
    oracle::for_each_preference(n, [&](const oracle::Seq& a) {
      const auto alpha = P(a);
      const auto u = excess(alpha);
      const auto m = multiplicities(alpha);
      ASSERT_EQ(u.values(), oracle::excess(a));
      int below = 0;
      for (int j = 1; j <= n; ++j) {
        ASSERT_EQ(u.of(j), j - 1 - below);
        ASSERT_LT(u.of(j), j);
        if (j < n) {
          ASSERT_EQ(u.of(j), u.of(j + 1) + m.of(j) - 1);
        }
        below += m.of(j);
      }
      ASSERT_EQ(u.of(1), 0);
      for (const auto& iv : u.critical_intervals()) {
        ASSERT_GE(iv.first, 2);
        ASSERT_EQ(u.of(iv.first), 1);
        ASSERT_EQ(u.of(iv.first - 1), 0);
        ASSERT_EQ(m.of(iv.first - 1), 0);
        ASSERT_GE(m.of(iv.last), 2);
        if (iv.last < n) {
          ASSERT_LE(u.of(iv.last + 1), 0);
        }
      }
    });
  }
}

TEST(Shift, Examples) {
  EXPECT_EQ(shift(P({4, 4, 2, 1}), 0), P({4, 4, 2, 1}));
  EXPECT_EQ(shift(std::vector<int>{4, 4}, 3), (std::vector<int>{1, 1}));
  EXPECT_EQ(code_of([] { shift(P({2, 1}), 1); }), ErrorCode::ShiftOutOfRange);
  EXPECT_EQ(code_of([] { shift(P({2, 2}), -1); }), ErrorCode::ShiftOutOfRange);
}

TEST(Restrict, Examples) {
  const auto alpha = P({4, 4, 3, 2, 3});
  EXPECT_EQ(restrict(alpha, IndexSet({3, 4, 5})), (std::vector<int>{3, 2, 3}));
  EXPECT_EQ(restrict(alpha, IndexSet::all(5)), alpha.values());

  const auto big = P({8, 4, 7, 1, 6, 8, 7, 5, 10, 1});
  const IndexSet j({2, 3, 5, 7, 8});
  EXPECT_EQ(restrict(big, j), (std::vector<int>{4, 7, 6, 7, 5}));
  EXPECT_EQ(restrict_and_shift(big, j, 2), P({2, 5, 4, 5, 3}));

  EXPECT_EQ(code_of([&] { restrict(alpha, IndexSet{}); }), ErrorCode::EmptyIndexSet);
  EXPECT_EQ(code_of([&] { restrict(alpha, IndexSet({6})); }), ErrorCode::IndexOutOfRange);
  // Entries above |J| survive restriction but not validation.
  EXPECT_EQ(code_of([&] { restrict_and_shift(big, j, 0); }), ErrorCode::InvalidPreference);
}

TEST(Decompose, Examples) {
  const auto d = decompose_at(P({4, 4, 3, 2, 3}), 4);
  ASSERT_TRUE(d.lower.has_value());
  EXPECT_EQ(*d.lower, P({3, 2, 3}));
  EXPECT_EQ(d.upper, P({1, 1}));
  EXPECT_EQ(d.upper_cars, IndexSet({1, 2}));

  const auto alpha = P({3, 1, 2, 2});
  const auto whole = decompose_at(alpha, 1);
  EXPECT_FALSE(whole.lower.has_value());
  EXPECT_EQ(whole.upper, alpha);

  const auto e = decompose_at(P({2, 1, 3}), 3);
  EXPECT_EQ(*e.lower, P({2, 1}));
  EXPECT_EQ(e.upper, P({1}));

  EXPECT_EQ(code_of([] { decompose_at(P({2, 3, 3}), 2); }), ErrorCode::NotZeroExcess);
}

TEST(Decompose, ExcessIdentitiesAtEveryZero) {
  for (int n = 1; n <= 6; ++n) {
    oracle::for_each_preference(n, [&](const oracle::Seq& a) {
      const auto alpha = P(a);
      const auto u = oracle::excess(a);
      for (int j = 1; j <= n; ++j) {
        if (u[j - 1] != 0) continue;
        const auto d = decompose_at(alpha, j);
        ASSERT_EQ(d.upper.length(), n - j + 1);
        const auto uu = oracle::excess(d.upper.values());
        for (int i = 1; i <= d.upper.length(); ++i) ASSERT_EQ(uu[i - 1], u[i + j - 2]);
        if (d.lower) {
          const auto ul = oracle::excess(d.lower->values());
          for (int i = 1; i <= d.lower->length(); ++i) ASSERT_EQ(ul[i - 1], u[i - 1]);
        }
      }
    });
  }
}

TEST(IndexSet, SortsAndComplements) {
  const IndexSet s({5, 2, 2, 3});
  EXPECT_EQ(s.values(), (std::vector<int>{2, 3, 5}));
  EXPECT_EQ(s.complement(6).values(), (std::vector<int>{1, 4, 6}));
  EXPECT_THROW(IndexSet({0, 1}), Error);
}
