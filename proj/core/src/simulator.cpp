#include "naples/simulator.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>

#include "naples/error.hpp"

namespace naples {

namespace {

// Occupancy of spots 1..n, bit s set when spot s is taken. Up to 255 spots
// live inline so the sweep never allocates.
class SpotBitmap {
 public:
  explicit SpotBitmap(int n) : n_(n) {
    const auto words = static_cast<std::size_t>(n / 64 + 1);
    if (words > inline_.size()) heap_.assign(words, 0);
  }

  bool test(Spot s) const noexcept {
    return (words()[word(s)] >> bit(s)) & 1u;
  }
  void set(Spot s) noexcept { words()[word(s)] |= std::uint64_t{1} << bit(s); }

  // Highest free spot in [lo, hi], or kUnparked.
  Spot highest_free(Spot lo, Spot hi) const noexcept {
    if (lo > hi) return kUnparked;
    for (auto w = word(hi);; --w) {
      std::uint64_t free = ~words()[w];
      if (w == word(hi)) free &= low_mask(bit(hi) + 1);
      if (w == word(lo)) free &= ~low_mask(bit(lo));
      if (free) {
        return static_cast<Spot>(w * 64 + 63 - std::countl_zero(free));
      }
      if (w == word(lo)) return kUnparked;
    }
  }

  // Lowest free spot in [lo, n], or kUnparked.
  Spot lowest_free(Spot lo) const noexcept {
    if (lo > n_) return kUnparked;
    for (auto w = word(lo); w <= word(n_); ++w) {
      std::uint64_t free = ~words()[w];
      if (w == word(lo)) free &= ~low_mask(bit(lo));
      if (w == word(n_)) free &= low_mask(bit(n_) + 1);
      if (free) return static_cast<Spot>(w * 64 + std::countr_zero(free));
    }
    return kUnparked;
  }

 private:
  static std::size_t word(Spot s) noexcept { return static_cast<std::size_t>(s) / 64; }
  static unsigned bit(Spot s) noexcept { return static_cast<unsigned>(s) % 64; }
  static std::uint64_t low_mask(unsigned bits) noexcept {
    return bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
  }

  std::uint64_t* words() noexcept { return heap_.empty() ? inline_.data() : heap_.data(); }
  const std::uint64_t* words() const noexcept {
    return heap_.empty() ? inline_.data() : heap_.data();
  }

  int n_;
  std::array<std::uint64_t, 4> inline_{};
  std::vector<std::uint64_t> heap_;
};

template <typename WindowOf>
bool run_bitmap(std::span<const Spot> prefs, WindowOf window_of,
                std::span<Spot> spot_of) noexcept {
  const int n = static_cast<int>(prefs.size());
  SpotBitmap occupied(n);
  bool all = true;
  for (std::size_t i = 0; i < prefs.size(); ++i) {
    const Spot a = prefs[i];
    Spot s = a;
    if (occupied.test(a)) {
      s = occupied.highest_free(std::max(1, a - window_of(i)), a - 1);
      if (s == kUnparked) s = occupied.lowest_free(a + 1);
    }
    if (s != kUnparked) {
      occupied.set(s);
    } else {
      all = false;
    }
    if (!spot_of.empty()) spot_of[i] = s;
  }
  return all;
}

// Spot-by-spot probing that records every check. Kept separate from the
// bitmap path so the two can be compared against each other.
ParkingTrace run_traced(const ParkingPreference& alpha,
                        const BackwardWindows& windows,
                        std::vector<Spot>& spot_of) {
  const int n = alpha.length();
  std::vector<bool> taken(static_cast<std::size_t>(n) + 1, false);
  ParkingTrace trace;
  trace.reserve(alpha.size());
  for (CarIndex car = 1; car <= n; ++car) {
    CarEvent ev;
    ev.car = car;
    ev.preferred = alpha.of_car(car);
    const Spot a = ev.preferred;
    if (!taken[static_cast<std::size_t>(a)]) {
      ev.result = a;
    } else {
      const int k = windows.of_car(car);
      for (Spot s = a - 1; s >= 1 && s >= a - k; --s) {
        ev.backward_checks.push_back(s);
        if (!taken[static_cast<std::size_t>(s)]) {
          ev.result = s;
          break;
        }
      }
      if (ev.result == kUnparked) {
        for (Spot s = a + 1; s <= n; ++s) {
          ev.forward_checks.push_back(s);
          if (!taken[static_cast<std::size_t>(s)]) {
            ev.result = s;
            break;
          }
        }
      }
    }
    if (ev.result != kUnparked) taken[static_cast<std::size_t>(ev.result)] = true;
    spot_of[static_cast<std::size_t>(car - 1)] = ev.result;
    trace.push_back(std::move(ev));
  }
  return trace;
}

}  // namespace

BackwardWindows::BackwardWindows(std::vector<int> windows)
    : windows_(std::move(windows)) {
  for (std::size_t i = 0; i < windows_.size(); ++i) {
    if (windows_[i] < 0) {
      throw Error(ErrorCode::InvalidArgument,
                  "backward window of car " + std::to_string(i + 1) +
                      " is negative");
    }
  }
}

BackwardWindows BackwardWindows::uniform(int n, int k) {
  return BackwardWindows(std::vector<int>(static_cast<std::size_t>(n), k));
}

ParkResult park(const ParkingPreference& alpha, const BackwardWindows& windows,
                TraceMode trace) {
  const int n = alpha.length();
  if (windows.length() != n) {
    throw Error(ErrorCode::LengthMismatch,
                "got " + std::to_string(windows.length()) +
                    " backward windows for " + std::to_string(n) + " cars");
  }

  ParkResult result;
  auto& out = result.outcome;
  out.spot_of.assign(alpha.size(), kUnparked);
  if (trace == TraceMode::On) {
    result.trace = run_traced(alpha, windows, out.spot_of);
  } else {
    const auto& k = windows.values();
    run_bitmap(alpha.view(), [&k](std::size_t i) { return k[i]; }, out.spot_of);
  }

  out.occupant_of.assign(alpha.size(), 0);
  out.all_parked = true;
  for (CarIndex car = 1; car <= n; ++car) {
    const Spot s = out.spot_of[static_cast<std::size_t>(car - 1)];
    if (s == kUnparked) {
      out.all_parked = false;
    } else {
      out.occupant_of[static_cast<std::size_t>(s - 1)] = car;
    }
  }
  return result;
}

ParkResult park_uniform(const ParkingPreference& alpha, int k, TraceMode trace) {
  if (k < 0) {
    throw Error(ErrorCode::InvalidArgument,
                "backward window k must be non-negative, got " + std::to_string(k));
  }
  return park(alpha, BackwardWindows::uniform(alpha.length(), k), trace);
}

namespace kernel {

bool all_park(std::span<const Spot> prefs, int k) noexcept {
  return run_bitmap(prefs, [k](std::size_t) { return k; }, {});
}

bool park_into(std::span<const Spot> prefs, int k, std::span<Spot> spot_of) noexcept {
  return run_bitmap(prefs, [k](std::size_t) { return k; }, spot_of);
}

}  // namespace kernel

}  // namespace naples
