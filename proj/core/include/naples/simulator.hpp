#pragma once

#include <optional>
#include <span>
#include <vector>

#include "naples/preference.hpp"

namespace naples {

/// Marks a car that drove off the end of the street without parking.
inline constexpr Spot kUnparked = 0;

/// Per-car backward allowance k_1..k_n. The uniform k-Naples rule is the
/// constant sequence.
class BackwardWindows {
 public:
  /// Throws Error(InvalidArgument) on negative entries.
  explicit BackwardWindows(std::vector<int> windows);
  static BackwardWindows uniform(int n, int k);

  int length() const noexcept { return static_cast<int>(windows_.size()); }
  int of_car(CarIndex car) const {
    return windows_.at(static_cast<std::size_t>(car - 1));
  }
  const std::vector<int>& values() const noexcept { return windows_; }

 private:
  std::vector<int> windows_;
};

/// Outcome map: the spot each car ended in, or kUnparked.
struct ParkingOutcome {
  std::vector<Spot> spot_of;
  /// Inverse view: occupant_of[s-1] is the car parked at spot s, or 0.
  std::vector<CarIndex> occupant_of;
  bool all_parked = false;

  Spot spot_of_car(CarIndex car) const {
    return spot_of.at(static_cast<std::size_t>(car - 1));
  }
  CarIndex occupant(Spot s) const {
    return occupant_of.at(static_cast<std::size_t>(s - 1));
  }
  bool occupied(Spot s) const { return occupant(s) != 0; }

  friend bool operator==(const ParkingOutcome&, const ParkingOutcome&) = default;
};

struct CarEvent {
  CarIndex car = 0;
  Spot preferred = 0;
  /// Spots probed behind the preferred one, nearest first.
  std::vector<Spot> backward_checks;
  /// Spots probed ahead of the preferred one, in increasing order.
  std::vector<Spot> forward_checks;
  Spot result = kUnparked;

  friend bool operator==(const CarEvent&, const CarEvent&) = default;
};

using ParkingTrace = std::vector<CarEvent>;

enum class TraceMode { Off, On };

struct ParkResult {
  ParkingOutcome outcome;
  std::optional<ParkingTrace> trace;
};

/// Runs the parking process with per-car backward windows. Cars arrive in
/// order; a car takes its preferred spot if free, otherwise the nearest free
/// spot among the k_i spots behind it, otherwise the first free spot ahead,
/// otherwise it leaves. Throws Error(LengthMismatch) when the window count
/// differs from the number of cars.
ParkResult park(const ParkingPreference& alpha, const BackwardWindows& windows,
                TraceMode trace = TraceMode::Off);

/// park() with the same window k for every car. k = 0 is the classical rule.
ParkResult park_uniform(const ParkingPreference& alpha, int k,
                        TraceMode trace = TraceMode::Off);

namespace kernel {

/// True when every car parks under the uniform k rule. Allocation-free for
/// n <= 255; no validation.
bool all_park(std::span<const Spot> prefs, int k) noexcept;

/// Outcome map only, written into spot_of (size n). Returns all_parked.
bool park_into(std::span<const Spot> prefs, int k, std::span<Spot> spot_of) noexcept;

}  // namespace kernel

}  // namespace naples
