#include "naples/characterize.hpp"

#include <algorithm>

#include "naples/classify.hpp"
#include "naples/error.hpp"
#include "naples/simulator.hpp"

namespace naples {

namespace {

void require_maximal(const ParkingPreference& alpha, const Interval& interval) {
  if (!excess(alpha).is_maximal_interval(interval)) {
    throw Error(ErrorCode::NotMaximalInterval,
                to_string(interval) + " is not a maximal critical interval of " +
                    to_string(alpha));
  }
}

void require_positive_k(int k) {
  if (k < 1) {
    throw Error(ErrorCode::InvalidArgument,
                "witness operations need k >= 1, got " + std::to_string(k));
  }
}

// Cars preferring at least p, shifted so that spot p-1 becomes spot 1.
struct ReducedProblem {
  IndexSet cars;
  ParkingPreference prefs;
};

ReducedProblem reduce_to_interval(const ParkingPreference& alpha, Spot p) {
  auto cars = cars_preferring_at_least(alpha, p - 1);
  auto prefs = restrict_and_shift(alpha, cars, p - 2);
  return {std::move(cars), std::move(prefs)};
}

std::optional<WitnessCertificate> make_certificate(const ParkingPreference& alpha,
                                                   int k, const Interval& interval,
                                                   IndexSet cars) {
  const int p = interval.first;
  for (CarIndex c : cars) {
    const Spot a = alpha.of_car(c);
    if (a < p || a > p - 2 + cars.size()) return std::nullopt;
  }
  WitnessCertificate cert{interval, cars, restrict_and_shift(alpha, cars, p - 2)};
  if (!check_certificate(alpha, k, cert).valid()) return std::nullopt;
  return cert;
}

}  // namespace

CertificateCheck check_certificate(const ParkingPreference& alpha, int k,
                                   const WitnessCertificate& cert) {
  CertificateCheck check;
  const int p = cert.interval.first;
  const int size = cert.cars.size();
  if (cert.cars.empty() || cert.cars.values().back() > alpha.length()) return check;

  check.in_range = std::all_of(cert.cars.begin(), cert.cars.end(), [&](CarIndex c) {
    const Spot a = alpha.of_car(c);
    return p <= a && a <= p - 2 + size;
  });
  check.size_bound = size >= cert.interval.size() + 1;
  if (!check.in_range) return check;

  const auto recomputed = restrict_and_shift(alpha, cert.cars, p - 2);
  if (recomputed != cert.shifted_restriction) {
    check.in_range = false;
    return check;
  }
  check.complete = is_complete_or_false(recomputed);
  check.k_naples = kernel::all_park(recomputed.view(), k);
  return check;
}

std::optional<WitnessCertificate> construct_witness(const ParkingPreference& alpha,
                                                    int k, const Interval& interval) {
  require_positive_k(k);
  require_maximal(alpha, interval);

  const auto reduced = reduce_to_interval(alpha, interval.first);
  const auto outcome = park_uniform(reduced.prefs, k).outcome;
  const int len = reduced.prefs.length();

  // Smallest M with every spot in [1,M] held by a car preferring [1,M].
  // The largest preference seen so far among occupants of [1,m] tells us
  // whether m qualifies.
  int boundary = 0;
  int highest_pref = 0;
  for (Spot m = 1; m <= len; ++m) {
    const CarIndex car = outcome.occupant(m);
    if (car == 0) break;
    highest_pref = std::max(highest_pref, reduced.prefs.of_car(car));
    if (highest_pref <= m) {
      boundary = m;
      break;
    }
  }

  std::optional<WitnessCertificate> cert;
  if (boundary > 0) {
    std::vector<CarIndex> chosen;
    for (CarIndex c = 1; c <= len; ++c) {
      const Spot s = outcome.spot_of_car(c);
      if (s != kUnparked && s <= boundary) {
        chosen.push_back(reduced.cars.values()[static_cast<std::size_t>(c - 1)]);
      }
    }
    cert = make_certificate(alpha, k, interval, IndexSet(std::move(chosen)));
  }

  if (kernel::all_park(alpha.view(), k)) {
    NAPLES_ENSURE(cert.has_value(),
                  "no constructive witness for k-Naples " + to_string(alpha) +
                      " on " + to_string(interval));
    NAPLES_ENSURE(cert->cars.size() >= interval.size() + 1,
                  "constructive witness smaller than q-p+2 for " + to_string(alpha));
  }
  return cert;
}

std::vector<WitnessCertificate> all_witnesses(const ParkingPreference& alpha, int k,
                                              const Interval& interval, int min_size) {
  require_positive_k(k);
  require_maximal(alpha, interval);
  const int n = alpha.length();
  if (n > kMaxExhaustiveWitnessLength) {
    throw Error(ErrorCode::SizeLimitExceeded,
                "exhaustive witness search is limited to n <= " +
                    std::to_string(kMaxExhaustiveWitnessLength));
  }

  const int p = interval.first;
  std::vector<CarIndex> eligible;
  for (CarIndex c = 1; c <= n; ++c) {
    if (alpha.of_car(c) >= p) eligible.push_back(c);
  }
  const int m = static_cast<int>(eligible.size());

  std::vector<WitnessCertificate> found;
  std::vector<int> pick;
  for (int size = std::max(min_size, 2); size <= m; ++size) {
    // Lexicographic combinations of `size` positions in `eligible`.
    pick.resize(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) pick[static_cast<std::size_t>(i)] = i;
    while (true) {
      std::vector<CarIndex> cars;
      cars.reserve(pick.size());
      for (int i : pick) cars.push_back(eligible[static_cast<std::size_t>(i)]);
      if (auto cert = make_certificate(alpha, k, interval, IndexSet(std::move(cars)))) {
        found.push_back(std::move(*cert));
      }
      int i = size - 1;
      while (i >= 0 && pick[static_cast<std::size_t>(i)] == m - size + i) --i;
      if (i < 0) break;
      ++pick[static_cast<std::size_t>(i)];
      for (int t = i + 1; t < size; ++t) {
        pick[static_cast<std::size_t>(t)] = pick[static_cast<std::size_t>(t - 1)] + 1;
      }
    }
  }
  return found;
}

std::optional<WitnessCertificate> find_witness(const ParkingPreference& alpha, int k,
                                               const Interval& interval) {
  if (auto cert = construct_witness(alpha, k, interval)) return cert;
  auto exhaustive = all_witnesses(alpha, k, interval, interval.size() + 1);
  if (exhaustive.empty()) return std::nullopt;
  return exhaustive.front();
}

bool verify_main_theorem(const ParkingPreference& alpha, int k) {
  require_positive_k(k);
  bool every_interval = true;
  for (const auto& interval : excess(alpha).critical_intervals()) {
    if (!find_witness(alpha, k, interval)) {
      every_interval = false;
      break;
    }
  }
  NAPLES_ENSURE(every_interval == is_k_naples(alpha, k),
                "witness characterization disagrees with parking for " +
                    to_string(alpha) + ", k=" + std::to_string(k));
  return every_interval;
}

DecompositionCheck verify_decomposition_lemma(const ParkingPreference& alpha, int k,
                                              Spot j) {
  if (k < 0 || !is_k_naples(alpha, k)) {
    throw Error(ErrorCode::PreconditionFailed,
                to_string(alpha) + " is not " + std::to_string(k) + "-Naples");
  }
  if (j < 1 || j > alpha.length() || excess(alpha).of(j) != 0) {
    throw Error(ErrorCode::PreconditionFailed,
                "decomposition needs u(j) = 0 at j=" + std::to_string(j));
  }

  const auto d = decompose_at(alpha, j);
  DecompositionCheck check;
  check.upper_naples = kernel::all_park(d.upper.view(), k);
  NAPLES_ENSURE(check.upper_naples, "upper part of " + to_string(alpha) + " at j=" +
                                        std::to_string(j) + " is not k-Naples");
  if (d.lower) check.lower_naples = kernel::all_park(d.lower->view(), k);

  const auto outcome = park_uniform(alpha, k).outcome;
  for (CarIndex c : d.upper_cars) {
    if (outcome.spot_of_car(c) < j) check.upper_cars_parked_below.push_back(c);
  }
  return check;
}

SummaryReport verify_summary_theorem(const ParkingPreference& alpha, int k) {
  require_positive_k(k);
  SummaryReport report;
  report.k_naples = is_k_naples(alpha, k);
  report.large_intervals_satisfied = true;

  for (const auto& interval : excess(alpha).critical_intervals()) {
    IntervalSummary s;
    s.interval = interval;
    s.small = interval.size() <= k;

    const auto reduced = reduce_to_interval(alpha, interval.first);
    s.spot_filled = park_uniform(reduced.prefs, k).outcome.occupied(1);
    s.witness = find_witness(alpha, k, interval);

    NAPLES_ENSURE(s.spot_filled == s.witness.has_value(),
                  "summary conditions disagree on " + to_string(interval) + " of " +
                      to_string(alpha));
    NAPLES_ENSURE(!s.small || s.spot_filled,
                  "small interval " + to_string(interval) + " unsatisfied in " +
                      to_string(alpha));
    if (!s.small && !s.spot_filled) report.large_intervals_satisfied = false;
    report.intervals.push_back(std::move(s));
  }

  NAPLES_ENSURE(report.large_intervals_satisfied == report.k_naples,
                "large-interval criterion disagrees with parking for " +
                    to_string(alpha));
  return report;
}

}  // namespace naples
