#pragma once

// Witness subsequences for the critical intervals of a preference.
//
// For a maximal critical interval [p,q], a witness is a set J of cars whose
// preferences all lie in [p, p-2+|J|] and whose restriction, shifted down by
// p-2, is a complete k-Naples preference of length |J|. A preference is
// k-Naples exactly when every maximal critical interval has a witness.

#include <optional>
#include <vector>

#include "naples/preference.hpp"

namespace naples {

struct WitnessCertificate {
  Interval interval;
  IndexSet cars;
  /// restrict_and_shift(alpha, cars, interval.first - 2)
  ParkingPreference shifted_restriction;

  friend bool operator==(const WitnessCertificate&,
                         const WitnessCertificate&) = default;
};

struct CertificateCheck {
  bool in_range = false;   // p <= a_j <= p-2+|J| for all j in J
  bool complete = false;
  bool k_naples = false;
  bool size_bound = false;  // |J| >= q-p+2

  bool valid() const noexcept { return in_range && complete && k_naples; }
};

/// Re-derives every certificate property from alpha alone.
CertificateCheck check_certificate(const ParkingPreference& alpha, int k,
                                   const WitnessCertificate& cert);

/// Exhaustive subset search is limited to n <= this.
inline constexpr int kMaxExhaustiveWitnessLength = 12;

/// Constructive extraction: restrict to cars preferring at least p-1, shift
/// by p-2, park, take the smallest M such that spots [1,M] are all held by
/// cars preferring [1,M], and return the cars parked in [1,M]. Returns a
/// certificate only if it re-verifies; guaranteed to succeed when alpha is
/// k-Naples.
std::optional<WitnessCertificate> construct_witness(const ParkingPreference& alpha,
                                                    int k, const Interval& interval);

/// Every witness with |J| >= min_size, ordered by size and then
/// lexicographically. Throws Error(SizeLimitExceeded) for
/// n > kMaxExhaustiveWitnessLength.
std::vector<WitnessCertificate> all_witnesses(const ParkingPreference& alpha, int k,
                                              const Interval& interval, int min_size);

/// Witness for a maximal interval, constructive first and exhaustive
/// (|J| >= q-p+2) as the fallback. std::nullopt means the interval has no
/// witness. Throws Error(NotMaximalInterval) and, for k < 1,
/// Error(InvalidArgument).
std::optional<WitnessCertificate> find_witness(const ParkingPreference& alpha, int k,
                                               const Interval& interval);

/// True iff every maximal critical interval has a witness. Checked against
/// is_k_naples.
bool verify_main_theorem(const ParkingPreference& alpha, int k);

struct DecompositionCheck {
  /// shift(restrict(alpha, upper cars), j-1) is k-Naples; the lemma's claim.
  bool upper_naples = false;
  /// The lower part need not be k-Naples; reported, not asserted.
  std::optional<bool> lower_naples;
  /// Upper cars that parked below spot j in the full process.
  std::vector<CarIndex> upper_cars_parked_below;
};

/// For k-Naples alpha and u(j) = 0. Throws Error(PreconditionFailed)
/// otherwise, and InvariantViolation if the upper part fails to park.
DecompositionCheck verify_decomposition_lemma(const ParkingPreference& alpha, int k,
                                              Spot j);

struct IntervalSummary {
  Interval interval;
  /// Parking only the cars that prefer spot >= p fills spot p-1.
  bool spot_filled = false;
  /// A witness with |J| >= q-p+2 exists.
  std::optional<WitnessCertificate> witness;
  /// |[p,q]| <= k, in which case both conditions are guaranteed.
  bool small = false;
};

struct SummaryReport {
  std::vector<IntervalSummary> intervals;
  bool k_naples = false;
  /// All intervals with more than k spots meet the conditions.
  bool large_intervals_satisfied = false;
};

/// Evaluates both per-interval conditions, checks they agree, that small
/// intervals satisfy them, and that k-Naples membership is equivalent to all
/// large intervals satisfying them. Vacuous when there are no critical spots.
SummaryReport verify_summary_theorem(const ParkingPreference& alpha, int k);

}  // namespace naples
