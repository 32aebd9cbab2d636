#include "naples/classify.hpp"

#include <algorithm>
#include <cassert>

#include "naples/error.hpp"

namespace naples {

namespace {

void require_k(int k, int min_k) {
  if (k < min_k) {
    throw Error(ErrorCode::InvalidArgument,
                "k must be at least " + std::to_string(min_k) + ", got " +
                    std::to_string(k));
  }
}

void require_complete(const ParkingPreference& alpha) {
  if (!is_complete(alpha)) {
    throw Error(ErrorCode::NotComplete, to_string(alpha) + " is not complete");
  }
}

}  // namespace

bool is_parking_function(const ParkingPreference& alpha) {
  const bool structural = !excess(alpha).has_critical();
  assert(structural == kernel::all_park(alpha.view(), 0));
  return structural;
}

bool is_k_naples(const ParkingPreference& alpha, int k) {
  require_k(k, 0);
  return kernel::all_park(alpha.view(), k);
}

bool check_p_minus_1(const ParkingPreference& alpha, int k) {
  require_k(k, 1);
  const auto u = excess(alpha);
  const auto result = park_uniform(alpha, k);
  bool filled = true;
  for (const auto& interval : u.critical_intervals()) {
    filled = filled && result.outcome.occupied(interval.first - 1);
  }
  NAPLES_ENSURE(filled == result.outcome.all_parked,
                "critical spot p-1 test disagrees with the parking process for " +
                    to_string(alpha));
  return filled;
}

bool necessary_excess_bound(const ParkingPreference& alpha, int k) {
  require_k(k, 0);
  return excess(alpha).max() <= k;
}

bool nonincreasing_sufficiency(const ParkingPreference& alpha, int k) {
  if (!alpha.is_nonincreasing()) {
    throw Error(ErrorCode::NotNonincreasing, to_string(alpha) + " is not nonincreasing");
  }
  const bool bound = necessary_excess_bound(alpha, k);
  NAPLES_ENSURE(!bound || is_k_naples(alpha, k),
                "nonincreasing preference within the excess bound failed to park: " +
                    to_string(alpha));
  return bound;
}

bool is_complete(const ParkingPreference& alpha) {
  if (alpha.length() < 2) {
    throw Error(ErrorCode::TooShort, "completeness needs at least two cars");
  }
  return is_complete_or_false(alpha);
}

bool is_complete_or_false(const ParkingPreference& alpha) noexcept {
  const int n = alpha.length();
  if (n < 2) return false;
  std::vector<int> u(alpha.size());
  kernel::excess_values(alpha.view(), u);
  return std::all_of(u.begin() + 1, u.end(), [](int v) { return v >= 1; });
}

CompleteEquivalence complete_naples_equivalences(const ParkingPreference& alpha,
                                                 int k) {
  require_complete(alpha);
  require_k(k, 0);
  const auto outcome = park_uniform(alpha, k).outcome;
  const int n = alpha.length();

  CompleteEquivalence eq;
  eq.all_parked = outcome.all_parked;
  eq.spots_held_from_above = true;
  eq.no_forward_parking = true;
  for (Spot j = 1; j <= n; ++j) {
    const CarIndex car = outcome.occupant(j);
    if (car == 0 || alpha.of_car(car) < j) eq.spots_held_from_above = false;
    const Spot s = outcome.spot_of_car(j);
    if (s == kUnparked || s > alpha.of_car(j)) eq.no_forward_parking = false;
  }
  NAPLES_ENSURE(eq.all_parked == eq.spots_held_from_above &&
                    eq.all_parked == eq.no_forward_parking,
                "complete-preference equivalences disagree for " + to_string(alpha));
  return eq;
}

std::vector<int> backward_parkers(const ParkingPreference& alpha,
                                  const ParkingOutcome& outcome) {
  const int n = alpha.length();
  std::vector<int> b(alpha.size(), 0);
  for (CarIndex i = 1; i <= n; ++i) {
    const Spot s = outcome.spot_of_car(i);
    if (s == kUnparked) continue;
    // Car i contributes to every j with s < j <= a_i.
    for (Spot j = s + 1; j <= alpha.of_car(i); ++j) ++b[static_cast<std::size_t>(j - 1)];
  }
  return b;
}

QuantitativeReport quantitative_bound(const ParkingPreference& alpha, int k) {
  require_complete(alpha);
  require_k(k, 0);
  const auto outcome = park_uniform(alpha, k).outcome;
  QuantitativeReport r{backward_parkers(alpha, outcome), excess(alpha).values(),
                       outcome.all_parked};
  for (std::size_t j = 0; j < r.excess.size(); ++j) {
    NAPLES_ENSURE(r.backward[j] <= r.excess[j],
                  "backward parkers exceed excess at j=" + std::to_string(j + 1));
    if (r.k_naples) {
      NAPLES_ENSURE(r.backward[j] == r.excess[j],
                    "equality case fails at j=" + std::to_string(j + 1));
    }
  }
  return r;
}

bool is_permutation_invariant(const ParkingPreference& alpha, int k) {
  require_k(k, 0);
  const auto u = excess(alpha);
  return std::all_of(u.critical_intervals().begin(), u.critical_intervals().end(),
                     [k](const Interval& iv) { return iv.size() <= k; });
}

std::vector<ParkingPreference> distinct_rearrangements(const ParkingPreference& alpha) {
  std::vector<Spot> v = alpha.values();
  std::sort(v.begin(), v.end());
  std::vector<ParkingPreference> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

bool all_rearrangements_naples(const ParkingPreference& alpha, int k) {
  require_k(k, 0);
  if (alpha.length() > kMaxRearrangementLength) {
    throw Error(ErrorCode::SizeLimitExceeded,
                "rearrangement brute force is limited to n <= " +
                    std::to_string(kMaxRearrangementLength));
  }
  std::vector<Spot> v = alpha.values();
  std::sort(v.begin(), v.end());
  do {
    if (!kernel::all_park(v, k)) return false;
  } while (std::next_permutation(v.begin(), v.end()));
  return true;
}

int minimal_naples_k(const ParkingPreference& alpha) {
  for (int k = 0; k < alpha.length(); ++k) {
    if (kernel::all_park(alpha.view(), k)) return k;
  }
  NAPLES_ENSURE(false, "no k < n parks " + to_string(alpha));
  return alpha.length();
}

}  // namespace naples
