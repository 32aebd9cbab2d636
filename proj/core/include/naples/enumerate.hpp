#pragma once

// Exhaustive sweeps over all n^n preferences of length n.
//
// Preferences are visited in odometer order: lexicographic with car 1 as the
// most significant digit, so (1,1,...,1) has rank 0 and (n,...,n) rank n^n-1.
// A sweep over W shards splits the rank range into W contiguous blocks; counts
// are summed and the reported counterexample is always the lowest-ranked one,
// so results do not depend on W.

#include <array>
#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "naples/preference.hpp"

namespace naples {

enum class Predicate {
  ParkingFunction,
  KNaples,
  Complete,
  CompleteKNaples,
  PermInvariant,
};

inline constexpr std::array kAllPredicates{
    Predicate::ParkingFunction, Predicate::KNaples, Predicate::Complete,
    Predicate::CompleteKNaples, Predicate::PermInvariant};

std::string_view to_string(Predicate p);
/// Throws Error(InvalidArgument) for unknown names.
Predicate parse_predicate(std::string_view name);

/// Evaluates a single predicate the way the sweep does.
bool evaluate(Predicate p, const ParkingPreference& alpha, int k);

inline constexpr int kDefaultSizeLimit = 8;
inline constexpr int kExtendedSizeLimit = 9;

struct SweepOptions {
  std::vector<Predicate> predicates{kAllPredicates.begin(), kAllPredicates.end()};
  /// Run registered properties on every preference and stop at the first
  /// failure.
  bool verify = false;
  /// Property names to verify; empty means every property expected to hold.
  std::vector<std::string> properties;
  /// Worker threads; 0 picks the hardware concurrency.
  unsigned shards = 1;
  /// Largest n accepted. Values above kExtendedSizeLimit are clamped.
  int size_limit = kDefaultSizeLimit;
  /// Collect preferences for which this predicate is false.
  std::optional<Predicate> list_rejected;
  std::size_t list_limit = 64;
};

struct Counterexample {
  std::string property;
  ParkingPreference preference;
  int k = 0;
};

struct CountReport {
  int n = 0;
  int k = 0;
  std::uint64_t total = 0;
  std::map<Predicate, std::uint64_t> counts;
  std::chrono::milliseconds elapsed{0};
  unsigned shards = 1;
  std::optional<Counterexample> violation;
  /// Preferences rejected by options.list_rejected, in odometer order.
  std::vector<ParkingPreference> rejected;

  /// Throws std::out_of_range if the predicate was not requested.
  std::uint64_t count(Predicate p) const { return counts.at(p); }
};

/// Throws Error(SizeLimitExceeded) when n is outside [1, size_limit] and
/// Error(InvalidArgument) when k is outside [0, n].
CountReport sweep(int n, int k, const SweepOptions& options = {});

/// n^n. Throws Error(SizeLimitExceeded) if it does not fit in 64 bits.
std::uint64_t preference_count(int n);
ParkingPreference preference_at_rank(int n, std::uint64_t rank);
std::uint64_t rank_of(const ParkingPreference& alpha);

struct PermInvariantCount {
  /// Preference sequences whose every rearrangement is k-Naples.
  std::uint64_t sequences = 0;
  /// The same, counted once per multiset of preferences.
  std::uint64_t classes = 0;
};

inline constexpr int kMaxFastPermInvariantLength = 14;

/// Counts permutation-invariant preferences by visiting only nondecreasing
/// ones and weighting each by its number of distinct rearrangements.
PermInvariantCount count_perm_invariant_fast(int n, int k);

/// Searches n = 1..n_max, k = 0..min(k_max, n), each in odometer order, for the first
/// preference violating the named property. Throws Error(UnknownProperty).
std::optional<Counterexample> find_counterexample(int n_max, int k_max,
                                                  std::string_view property,
                                                  unsigned shards = 1);

}  // namespace naples
