#pragma once

// Predicates on parking preferences. Where a structural characterization in
// terms of the excess function exists it is the primary route, and the
// parking process serves as the cross-check.

#include <vector>

#include "naples/preference.hpp"
#include "naples/simulator.hpp"

namespace naples {

/// Classical parking function: the critical set is empty.
bool is_parking_function(const ParkingPreference& alpha);

/// Every car parks under the uniform k rule (k >= 0).
bool is_k_naples(const ParkingPreference& alpha, int k);

/// For k >= 1: every maximal critical interval [p,q] has spot p-1 occupied
/// once all cars have parked. Equivalent to is_k_naples; the equivalence is
/// checked and an InvariantViolation thrown if it ever fails.
bool check_p_minus_1(const ParkingPreference& alpha, int k);

/// max_j u(j) <= k. Necessary for k-Naples, not sufficient.
bool necessary_excess_bound(const ParkingPreference& alpha, int k);

/// For nonincreasing alpha the excess bound is also sufficient. Throws
/// Error(NotNonincreasing) otherwise.
bool nonincreasing_sufficiency(const ParkingPreference& alpha, int k);

/// Critical set is all of [2,n]. Throws Error(TooShort) for n < 2.
bool is_complete(const ParkingPreference& alpha);
/// Same, but false instead of throwing when n < 2.
bool is_complete_or_false(const ParkingPreference& alpha) noexcept;

struct CompleteEquivalence {
  bool all_parked = false;
  /// Every spot j is held by a car whose preference is at least j.
  bool spots_held_from_above = false;
  /// psi(j) <= a_j for every car j.
  bool no_forward_parking = false;
};

/// The three equivalent descriptions of a complete k-Naples preference.
/// Throws Error(NotComplete) for non-complete alpha.
CompleteEquivalence complete_naples_equivalences(const ParkingPreference& alpha,
                                                 int k);

/// B_j = #{i : a_i >= j and psi(i) < j} for j = 1..n (unparked cars never
/// count). Defined for any preference and outcome.
std::vector<int> backward_parkers(const ParkingPreference& alpha,
                                  const ParkingOutcome& outcome);

struct QuantitativeReport {
  std::vector<int> backward;  // B_j
  std::vector<int> excess;    // u(j)
  bool k_naples = false;
};

/// For complete alpha, B_j <= u(j) for every j, with equality when alpha is
/// k-Naples. Both facts are checked. Throws Error(NotComplete).
QuantitativeReport quantitative_bound(const ParkingPreference& alpha, int k);

/// Every maximal critical interval has at most k spots. For k >= 1 this is
/// equivalent to every rearrangement being k-Naples; for k = 0 it reduces to
/// being a parking function, which is permutation invariant classically.
bool is_permutation_invariant(const ParkingPreference& alpha, int k);

/// Brute force: every distinct rearrangement is k-Naples. Limited to
/// n <= kMaxRearrangementLength (Error(SizeLimitExceeded) beyond).
inline constexpr int kMaxRearrangementLength = 7;
bool all_rearrangements_naples(const ParkingPreference& alpha, int k);

/// Distinct rearrangements of alpha in lexicographic order.
std::vector<ParkingPreference> distinct_rearrangements(const ParkingPreference& alpha);

/// Smallest k for which alpha is k-Naples. Always <= n-1, since with
/// k = n-1 every spot at or behind a car's preference is reachable.
int minimal_naples_k(const ParkingPreference& alpha);

}  // namespace naples
