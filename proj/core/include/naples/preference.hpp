#pragma once

// Parking preferences and the excess-function calculus built on them.
//
// Conventions: spots and car indices are 1-based throughout the public API,
// matching how preferences are written ("3,1,3,5,2,4,2" means car 1 prefers
// spot 3). Containers are 0-based internally; accessors named `*_of(j)` or
// taking a `Spot`/`CarIndex` expect the 1-based value.

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace naples {

using Spot = int;
using CarIndex = int;

/// A sequence of n preferred spots for n cars on a street of n spots.
/// Always non-empty with every entry in [1, n]; immutable once built.
class ParkingPreference {
 public:
  explicit ParkingPreference(std::vector<Spot> prefs);

  /// Parses the comma-separated text form, e.g. "3,1,3,5,2,4,2".
  /// Throws Error(ParseError) naming the offending token, or
  /// Error(InvalidPreference) when the numbers are out of range.
  static ParkingPreference parse(std::string_view text);

  int length() const noexcept { return static_cast<int>(prefs_.size()); }
  std::size_t size() const noexcept { return prefs_.size(); }

  /// 0-based element access.
  Spot operator[](std::size_t i) const noexcept { return prefs_[i]; }
  /// Preference of car `car` (1-based).
  Spot of_car(CarIndex car) const;

  std::span<const Spot> view() const noexcept { return prefs_; }
  const std::vector<Spot>& values() const& noexcept { return prefs_; }
  std::vector<Spot> values() && noexcept { return std::move(prefs_); }
  auto begin() const noexcept { return prefs_.begin(); }
  auto end() const noexcept { return prefs_.end(); }

  Spot min() const noexcept;
  bool is_nonincreasing() const noexcept;
  bool is_nondecreasing() const noexcept;

  friend bool operator==(const ParkingPreference&,
                         const ParkingPreference&) = default;
  friend auto operator<=>(const ParkingPreference&,
                          const ParkingPreference&) = default;

 private:
  std::vector<Spot> prefs_;
};

/// Renders the comma-separated text form.
std::string to_string(const ParkingPreference& alpha);
std::string join(std::span<const int> values, std::string_view sep = ",");
std::ostream& operator<<(std::ostream& os, const ParkingPreference& alpha);

/// Closed interval [first, last] of spots.
struct Interval {
  Spot first = 0;
  Spot last = 0;

  int size() const noexcept { return last - first + 1; }
  bool contains(Spot j) const noexcept { return first <= j && j <= last; }

  friend bool operator==(const Interval&, const Interval&) = default;
};

std::string to_string(const Interval& interval);

/// m_i = number of cars preferring spot i, for i = 1..n.
class MultiplicityProfile {
 public:
  explicit MultiplicityProfile(std::vector<int> counts)
      : counts_(std::move(counts)) {}

  int of(Spot i) const { return counts_.at(static_cast<std::size_t>(i - 1)); }
  int length() const noexcept { return static_cast<int>(counts_.size()); }
  const std::vector<int>& values() const& noexcept { return counts_; }
  std::vector<int> values() && noexcept { return std::move(counts_); }

  friend bool operator==(const MultiplicityProfile&,
                         const MultiplicityProfile&) = default;

 private:
  std::vector<int> counts_;
};

MultiplicityProfile multiplicities(const ParkingPreference& alpha);

/// Values u(1..n) of the excess function together with the critical set
/// {j : u(j) >= 1} split into maximal runs of consecutive spots.
class ExcessProfile {
 public:
  ExcessProfile(std::vector<int> values, std::vector<Interval> critical)
      : values_(std::move(values)), critical_(std::move(critical)) {}

  int of(Spot j) const { return values_.at(static_cast<std::size_t>(j - 1)); }
  int length() const noexcept { return static_cast<int>(values_.size()); }
  const std::vector<int>& values() const& noexcept { return values_; }
  std::vector<int> values() && noexcept { return std::move(values_); }

  /// Maximal intervals of the critical set, in increasing order.
  const std::vector<Interval>& critical_intervals() const& noexcept {
    return critical_;
  }
  std::vector<Interval> critical_intervals() && noexcept {
    return std::move(critical_);
  }
  bool is_critical(Spot j) const { return of(j) >= 1; }
  bool has_critical() const noexcept { return !critical_.empty(); }
  int max() const noexcept;
  bool is_maximal_interval(const Interval& interval) const noexcept;

 private:
  std::vector<int> values_;
  std::vector<Interval> critical_;
};

/// u(j) = #{i : a_i >= j} - (n - j + 1). The recurrence
/// u(j) = u(j+1) + m_j - 1 is checked on every call.
ExcessProfile excess(const ParkingPreference& alpha);

/// Splits excess values into the maximal runs where they are >= 1.
std::vector<Interval> critical_intervals(std::span<const int> excess_values);

/// Strictly increasing set of 1-based car indices.
class IndexSet {
 public:
  IndexSet() = default;
  /// Sorts and deduplicates. Throws Error(IndexOutOfRange) on indices < 1.
  explicit IndexSet(std::vector<CarIndex> indices);

  static IndexSet all(int n);

  bool empty() const noexcept { return indices_.empty(); }
  int size() const noexcept { return static_cast<int>(indices_.size()); }
  bool contains(CarIndex i) const noexcept;
  const std::vector<CarIndex>& values() const& noexcept { return indices_; }
  std::vector<CarIndex> values() && noexcept { return std::move(indices_); }
  auto begin() const noexcept { return indices_.begin(); }
  auto end() const noexcept { return indices_.end(); }

  /// [1, n] minus this set.
  IndexSet complement(int n) const;

  friend bool operator==(const IndexSet&, const IndexSet&) = default;
  friend auto operator<=>(const IndexSet&, const IndexSet&) = default;

 private:
  std::vector<CarIndex> indices_;
};

std::string to_string(const IndexSet& set);

/// (a_1 - w, ..., a_n - w). Throws Error(ShiftOutOfRange) when an entry
/// would drop below 1.
ParkingPreference shift(const ParkingPreference& alpha, int w);
std::vector<Spot> shift(std::span<const Spot> sequence, int w);

/// The subsequence (a_{j_1}, ..., a_{j_h}) in car order. Entries may exceed h,
/// so the result is a raw sequence; use restrict_and_shift for a validated
/// preference.
std::vector<Spot> restrict(const ParkingPreference& alpha, const IndexSet& cars);

/// shift(restrict(alpha, cars), w), validated as a preference of length |cars|.
ParkingPreference restrict_and_shift(const ParkingPreference& alpha,
                                     const IndexSet& cars, int w);

/// Cars whose preference is at least `spot`.
IndexSet cars_preferring_at_least(const ParkingPreference& alpha, Spot spot);

struct Decomposition {
  /// Cars with preference >= j.
  IndexSet upper_cars;
  /// Restriction to the remaining cars, length j-1; empty when j = 1.
  std::optional<ParkingPreference> lower;
  /// Restriction to upper_cars shifted down by j-1, length n-j+1.
  ParkingPreference upper;
};

/// Splits alpha at a spot j with u(j) = 0. Throws Error(NotZeroExcess)
/// otherwise. The excess identities u_lower(i) = u(i) and
/// u_upper(i) = u(i+j-1) are checked before returning.
Decomposition decompose_at(const ParkingPreference& alpha, Spot j);

namespace kernel {

/// Writes u(1..n) for a raw preference sequence into `out` (size n).
/// No validation; entries must lie in [1, n].
void excess_values(std::span<const Spot> prefs, std::span<int> out) noexcept;

}  // namespace kernel

}  // namespace naples
