#include "naples/preference.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>
#include <sstream>

#include "naples/error.hpp"

namespace naples {

namespace {

void validate(std::span<const Spot> prefs) {
  if (prefs.empty()) {
    throw Error(ErrorCode::InvalidPreference,
                "a parking preference needs at least one car");
  }
  const int n = static_cast<int>(prefs.size());
  for (std::size_t i = 0; i < prefs.size(); ++i) {
    if (prefs[i] < 1 || prefs[i] > n) {
      std::ostringstream os;
      os << "preference of car " << (i + 1) << " is " << prefs[i]
         << ", outside [1," << n << "]";
      throw Error(ErrorCode::InvalidPreference, os.str());
    }
  }
}

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n';
  };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

}  // namespace

ParkingPreference::ParkingPreference(std::vector<Spot> prefs)
    : prefs_(std::move(prefs)) {
  validate(prefs_);
}

ParkingPreference ParkingPreference::parse(std::string_view text) {
  std::vector<Spot> prefs;
  std::string_view rest = text;
  while (true) {
    const auto comma = rest.find(',');
    const std::string_view raw = rest.substr(0, comma);
    const std::string_view token = trim(raw);
    int value = 0;
    const auto* first = token.data();
    const auto* last = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (token.empty() || ec != std::errc{} || ptr != last) {
      throw Error(ErrorCode::ParseError,
                  "malformed preference token '" + std::string(raw) +
                      "' in \"" + std::string(text) + "\"");
    }
    prefs.push_back(value);
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return ParkingPreference(std::move(prefs));
}

Spot ParkingPreference::of_car(CarIndex car) const {
  if (car < 1 || car > length()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "car index " + std::to_string(car) + " outside [1," +
                    std::to_string(length()) + "]");
  }
  return prefs_[static_cast<std::size_t>(car - 1)];
}

Spot ParkingPreference::min() const noexcept {
  return *std::min_element(prefs_.begin(), prefs_.end());
}

bool ParkingPreference::is_nonincreasing() const noexcept {
  return std::is_sorted(prefs_.rbegin(), prefs_.rend());
}

bool ParkingPreference::is_nondecreasing() const noexcept {
  return std::is_sorted(prefs_.begin(), prefs_.end());
}

std::string join(std::span<const int> values, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

std::string to_string(const ParkingPreference& alpha) {
  return join(alpha.view());
}

std::ostream& operator<<(std::ostream& os, const ParkingPreference& alpha) {
  return os << to_string(alpha);
}

std::string to_string(const Interval& interval) {
  return "[" + std::to_string(interval.first) + "," +
         std::to_string(interval.last) + "]";
}

MultiplicityProfile multiplicities(const ParkingPreference& alpha) {
  std::vector<int> counts(alpha.size(), 0);
  for (Spot a : alpha) ++counts[static_cast<std::size_t>(a - 1)];
  return MultiplicityProfile(std::move(counts));
}

namespace kernel {

void excess_values(std::span<const Spot> prefs, std::span<int> out) noexcept {
  const int n = static_cast<int>(prefs.size());
  std::fill(out.begin(), out.end(), 0);
  // out[j-1] temporarily holds m_j.
  for (Spot a : prefs) ++out[static_cast<std::size_t>(a - 1)];
  int at_least = 0;
  for (int j = n; j >= 1; --j) {
    at_least += out[static_cast<std::size_t>(j - 1)];
    out[static_cast<std::size_t>(j - 1)] = at_least - (n - j + 1);
  }
}

}  // namespace kernel

std::vector<Interval> critical_intervals(std::span<const int> excess_values) {
  std::vector<Interval> result;
  const int n = static_cast<int>(excess_values.size());
  int j = 1;
  while (j <= n) {
    if (excess_values[static_cast<std::size_t>(j - 1)] >= 1) {
      const int first = j;
      while (j <= n && excess_values[static_cast<std::size_t>(j - 1)] >= 1) ++j;
      result.push_back({first, j - 1});
    } else {
      ++j;
    }
  }
  return result;
}

int ExcessProfile::max() const noexcept {
  return *std::max_element(values_.begin(), values_.end());
}

bool ExcessProfile::is_maximal_interval(const Interval& interval) const noexcept {
  return std::find(critical_.begin(), critical_.end(), interval) !=
         critical_.end();
}

ExcessProfile excess(const ParkingPreference& alpha) {
  const int n = alpha.length();
  std::vector<int> values(alpha.size());
  kernel::excess_values(alpha.view(), values);

  const auto m = multiplicities(alpha);
  for (int j = 1; j < n; ++j) {
    NAPLES_ENSURE(values[j - 1] == values[j] + m.of(j) - 1,
                  "excess recurrence fails at j=" + std::to_string(j));
  }
  NAPLES_ENSURE(values[0] == 0, "u(1) must vanish");

  auto intervals = critical_intervals(values);
  return ExcessProfile(std::move(values), std::move(intervals));
}

IndexSet::IndexSet(std::vector<CarIndex> indices) : indices_(std::move(indices)) {
  std::sort(indices_.begin(), indices_.end());
  indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
  if (!indices_.empty() && indices_.front() < 1) {
    throw Error(ErrorCode::IndexOutOfRange,
                "car index " + std::to_string(indices_.front()) + " below 1");
  }
}

IndexSet IndexSet::all(int n) {
  std::vector<CarIndex> v(static_cast<std::size_t>(std::max(n, 0)));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
  return IndexSet(std::move(v));
}

bool IndexSet::contains(CarIndex i) const noexcept {
  return std::binary_search(indices_.begin(), indices_.end(), i);
}

IndexSet IndexSet::complement(int n) const {
  std::vector<CarIndex> rest;
  for (int i = 1; i <= n; ++i) {
    if (!contains(i)) rest.push_back(i);
  }
  return IndexSet(std::move(rest));
}

std::string to_string(const IndexSet& set) { return join(set.values()); }

std::vector<Spot> shift(std::span<const Spot> sequence, int w) {
  std::vector<Spot> out(sequence.begin(), sequence.end());
  for (Spot& a : out) {
    a -= w;
    if (a < 1) {
      throw Error(ErrorCode::ShiftOutOfRange,
                  "shift by " + std::to_string(w) + " moves preference " +
                      std::to_string(a + w) + " below spot 1");
    }
  }
  return out;
}

ParkingPreference shift(const ParkingPreference& alpha, int w) {
  if (w < 0) {
    throw Error(ErrorCode::ShiftOutOfRange,
                "negative shift " + std::to_string(w));
  }
  return ParkingPreference(shift(alpha.view(), w));
}

std::vector<Spot> restrict(const ParkingPreference& alpha, const IndexSet& cars) {
  if (cars.empty()) {
    throw Error(ErrorCode::EmptyIndexSet, "cannot restrict to an empty set of cars");
  }
  std::vector<Spot> out;
  out.reserve(static_cast<std::size_t>(cars.size()));
  for (CarIndex i : cars) out.push_back(alpha.of_car(i));
  return out;
}

ParkingPreference restrict_and_shift(const ParkingPreference& alpha,
                                     const IndexSet& cars, int w) {
  return ParkingPreference(shift(restrict(alpha, cars), w));
}

IndexSet cars_preferring_at_least(const ParkingPreference& alpha, Spot spot) {
  std::vector<CarIndex> cars;
  for (int i = 0; i < alpha.length(); ++i) {
    if (alpha[static_cast<std::size_t>(i)] >= spot) cars.push_back(i + 1);
  }
  return IndexSet(std::move(cars));
}

Decomposition decompose_at(const ParkingPreference& alpha, Spot j) {
  const int n = alpha.length();
  if (j < 1 || j > n) {
    throw Error(ErrorCode::IndexOutOfRange,
                "spot " + std::to_string(j) + " outside [1," +
                    std::to_string(n) + "]");
  }
  const auto u = excess(alpha);
  if (u.of(j) != 0) {
    throw Error(ErrorCode::NotZeroExcess,
                "u(" + std::to_string(j) + ") = " + std::to_string(u.of(j)) +
                    ", decomposition needs 0");
  }

  auto upper_cars = cars_preferring_at_least(alpha, j);
  NAPLES_ENSURE(upper_cars.size() == n - j + 1, "|J| must equal n-j+1");

  Decomposition d{upper_cars, std::nullopt,
                  restrict_and_shift(alpha, upper_cars, j - 1)};
  if (j > 1) {
    d.lower = ParkingPreference(restrict(alpha, upper_cars.complement(n)));
  }

  const auto u_upper = excess(d.upper);
  for (int i = 1; i <= u_upper.length(); ++i) {
    NAPLES_ENSURE(u_upper.of(i) == u.of(i + j - 1),
                  "upper excess mismatch at " + std::to_string(i));
  }
  if (d.lower) {
    const auto u_lower = excess(*d.lower);
    for (int i = 1; i <= u_lower.length(); ++i) {
      NAPLES_ENSURE(u_lower.of(i) == u.of(i),
                    "lower excess mismatch at " + std::to_string(i));
    }
  }
  return d;
}

}  // namespace naples
