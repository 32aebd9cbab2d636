#include "naples/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <thread>

#include "naples/classify.hpp"
#include "naples/error.hpp"
#include "naples/properties.hpp"
#include "naples/simulator.hpp"

namespace naples {

namespace {

constexpr std::uint64_t kNoFailure = std::numeric_limits<std::uint64_t>::max();

// Mixed-radix counter over [1,n]^n, last car spinning fastest.
class Odometer {
 public:
  Odometer(int n, std::uint64_t rank) : n_(n), digits_(static_cast<std::size_t>(n)) {
    for (int i = n - 1; i >= 0; --i) {
      digits_[static_cast<std::size_t>(i)] = static_cast<Spot>(rank % static_cast<std::uint64_t>(n)) + 1;
      rank /= static_cast<std::uint64_t>(n);
    }
  }

  std::span<const Spot> digits() const noexcept { return digits_; }

  void next() noexcept {
    for (int i = n_ - 1; i >= 0; --i) {
      auto& d = digits_[static_cast<std::size_t>(i)];
      if (d < n_) {
        ++d;
        return;
      }
      d = 1;
    }
  }

 private:
  int n_;
  std::vector<Spot> digits_;
};

struct ShardResult {
  std::array<std::uint64_t, kAllPredicates.size()> counts{};
  std::uint64_t failure_rank = kNoFailure;
  std::string failure_property;
  std::vector<ParkingPreference> rejected;
};

struct Flags {
  std::array<bool, kAllPredicates.size()> wanted{};
  bool any(std::initializer_list<Predicate> ps) const {
    for (auto p : ps) {
      if (wanted[static_cast<std::size_t>(p)]) return true;
    }
    return false;
  }
};

void run_shard(int n, int k, std::uint64_t begin, std::uint64_t end, const Flags& flags,
               const SweepOptions& options, const std::vector<const Property*>& checks,
               std::atomic<std::uint64_t>& first_failure, ShardResult& out) {
  Odometer odo(n, begin);
  std::array<int, 16> u_buf{};
  const std::span<int> u(u_buf.data(), static_cast<std::size_t>(n));
  const bool need_naples = flags.any({Predicate::KNaples, Predicate::CompleteKNaples}) ||
                           options.list_rejected == Predicate::KNaples ||
                           options.list_rejected == Predicate::CompleteKNaples;

  for (std::uint64_t rank = begin; rank < end; ++rank, odo.next()) {
    const auto prefs = odo.digits();
    kernel::excess_values(prefs, u);

    bool any_critical = false;
    bool complete = n >= 2;
    int run = 0;
    int longest_run = 0;
    for (int j = 0; j < n; ++j) {
      if (u[static_cast<std::size_t>(j)] >= 1) {
        any_critical = true;
        longest_run = std::max(longest_run, ++run);
      } else {
        run = 0;
        if (j > 0) complete = false;
      }
    }
    const bool naples = need_naples && kernel::all_park(prefs, k);

    std::array<bool, kAllPredicates.size()> value{};
    value[static_cast<std::size_t>(Predicate::ParkingFunction)] = !any_critical;
    value[static_cast<std::size_t>(Predicate::KNaples)] = naples;
    value[static_cast<std::size_t>(Predicate::Complete)] = complete;
    value[static_cast<std::size_t>(Predicate::CompleteKNaples)] = complete && naples;
    value[static_cast<std::size_t>(Predicate::PermInvariant)] = longest_run <= k;
    for (std::size_t p = 0; p < value.size(); ++p) {
      if (flags.wanted[p] && value[p]) ++out.counts[p];
    }
    if (options.list_rejected && out.rejected.size() < options.list_limit &&
        !value[static_cast<std::size_t>(*options.list_rejected)]) {
      out.rejected.emplace_back(std::vector<Spot>(prefs.begin(), prefs.end()));
    }

    if (!checks.empty()) {
      if (rank > first_failure.load(std::memory_order_relaxed)) break;
      const ParkingPreference alpha(std::vector<Spot>(prefs.begin(), prefs.end()));
      for (const Property* prop : checks) {
        if (!prop->holds(alpha, k)) {
          out.failure_rank = rank;
          out.failure_property = std::string(prop->name);
          auto seen = first_failure.load();
          while (rank < seen && !first_failure.compare_exchange_weak(seen, rank)) {
          }
          return;
        }
      }
    }
  }
}

}  // namespace

std::string_view to_string(Predicate p) {
  switch (p) {
    case Predicate::ParkingFunction: return "parking_function";
    case Predicate::KNaples: return "k_naples";
    case Predicate::Complete: return "complete";
    case Predicate::CompleteKNaples: return "complete_k_naples";
    case Predicate::PermInvariant: return "perm_invariant";
  }
  return "unknown";
}

Predicate parse_predicate(std::string_view name) {
  for (auto p : kAllPredicates) {
    if (to_string(p) == name) return p;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown predicate '" + std::string(name) + "'");
}

bool evaluate(Predicate p, const ParkingPreference& alpha, int k) {
  switch (p) {
    case Predicate::ParkingFunction: return is_parking_function(alpha);
    case Predicate::KNaples: return is_k_naples(alpha, k);
    case Predicate::Complete: return is_complete_or_false(alpha);
    case Predicate::CompleteKNaples:
      return is_complete_or_false(alpha) && is_k_naples(alpha, k);
    case Predicate::PermInvariant: return is_permutation_invariant(alpha, k);
  }
  return false;
}

std::uint64_t preference_count(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be positive");
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) {
    if (total > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(n)) {
      throw Error(ErrorCode::SizeLimitExceeded, "n^n overflows for n=" + std::to_string(n));
    }
    total *= static_cast<std::uint64_t>(n);
  }
  return total;
}

ParkingPreference preference_at_rank(int n, std::uint64_t rank) {
  if (rank >= preference_count(n)) {
    throw Error(ErrorCode::InvalidArgument, "rank out of range");
  }
  const Odometer odo(n, rank);
  return ParkingPreference(std::vector<Spot>(odo.digits().begin(), odo.digits().end()));
}

std::uint64_t rank_of(const ParkingPreference& alpha) {
  const auto n = static_cast<std::uint64_t>(alpha.length());
  std::uint64_t rank = 0;
  for (Spot a : alpha) rank = rank * n + static_cast<std::uint64_t>(a - 1);
  return rank;
}

CountReport sweep(int n, int k, const SweepOptions& options) {
  const int limit = std::min(options.size_limit, kExtendedSizeLimit);
  if (n < 1 || n > limit) {
    throw Error(ErrorCode::SizeLimitExceeded,
                "sweep size n=" + std::to_string(n) + " outside [1," +
                    std::to_string(limit) + "]");
  }
  if (k < 0 || k > n) {
    throw Error(ErrorCode::InvalidArgument,
                "k=" + std::to_string(k) + " outside [0," + std::to_string(n) + "]");
  }

  std::vector<const Property*> checks;
  if (options.verify) {
    if (options.properties.empty()) {
      for (const auto& p : registered_properties()) {
        if (p.expected_to_hold) checks.push_back(&p);
      }
    } else {
      for (const auto& name : options.properties) checks.push_back(&find_property(name));
    }
  }

  Flags flags;
  for (auto p : options.predicates) flags.wanted[static_cast<std::size_t>(p)] = true;

  const auto start = std::chrono::steady_clock::now();
  const std::uint64_t total = preference_count(n);
  unsigned shards = options.shards == 0 ? std::max(1u, std::thread::hardware_concurrency())
                                        : options.shards;
  shards = static_cast<unsigned>(std::min<std::uint64_t>(shards, total));

  std::vector<ShardResult> results(shards);
  std::atomic<std::uint64_t> first_failure{kNoFailure};
  {
    std::vector<std::jthread> workers;
    workers.reserve(shards);
    for (unsigned s = 0; s < shards; ++s) {
      const std::uint64_t begin = total * s / shards;
      const std::uint64_t end = total * (s + 1) / shards;
      workers.emplace_back([&, s, begin, end] {
        run_shard(n, k, begin, end, flags, options, checks, first_failure, results[s]);
      });
    }
  }

  CountReport report;
  report.n = n;
  report.k = k;
  report.total = total;
  report.shards = shards;
  for (auto p : options.predicates) report.counts[p] = 0;

  const ShardResult* failing = nullptr;
  for (const auto& r : results) {
    for (auto p : options.predicates) report.counts[p] += r.counts[static_cast<std::size_t>(p)];
    if (r.failure_rank != kNoFailure &&
        (failing == nullptr || r.failure_rank < failing->failure_rank)) {
      failing = &r;
    }
    for (const auto& alpha : r.rejected) {
      if (report.rejected.size() < options.list_limit) report.rejected.push_back(alpha);
    }
  }
  if (failing != nullptr) {
    report.violation = Counterexample{failing->failure_property,
                                      preference_at_rank(n, failing->failure_rank), k};
  }
  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  return report;
}

PermInvariantCount count_perm_invariant_fast(int n, int k) {
  if (n < 1 || n > kMaxFastPermInvariantLength) {
    throw Error(ErrorCode::SizeLimitExceeded,
                "fast permutation-invariant count supports 1 <= n <= " +
                    std::to_string(kMaxFastPermInvariantLength));
  }
  if (k < 0) throw Error(ErrorCode::InvalidArgument, "k must be non-negative");

  std::vector<std::uint64_t> factorial(static_cast<std::size_t>(n) + 1, 1);
  for (int i = 1; i <= n; ++i) {
    factorial[static_cast<std::size_t>(i)] = factorial[static_cast<std::size_t>(i - 1)] *
                                             static_cast<std::uint64_t>(i);
  }

  PermInvariantCount result;
  std::vector<Spot> sorted(static_cast<std::size_t>(n), 1);
  std::vector<int> m(static_cast<std::size_t>(n));
  while (true) {
    std::fill(m.begin(), m.end(), 0);
    for (Spot b : sorted) ++m[static_cast<std::size_t>(b - 1)];

    // u(j) from multiplicities alone: u(j) = j - 1 - sum_{i<j} m_i.
    int below = 0;
    int run = 0;
    bool ok = true;
    for (int j = 1; j <= n && ok; ++j) {
      const int u = j - 1 - below;
      run = u >= 1 ? run + 1 : 0;
      ok = run <= k;
      below += m[static_cast<std::size_t>(j - 1)];
    }
    if (ok) {
      std::uint64_t weight = factorial[static_cast<std::size_t>(n)];
      for (int c : m) weight /= factorial[static_cast<std::size_t>(c)];
      result.sequences += weight;
      ++result.classes;
    }

    int i = n - 1;
    while (i >= 0 && sorted[static_cast<std::size_t>(i)] == n) --i;
    if (i < 0) break;
    const Spot v = sorted[static_cast<std::size_t>(i)] + 1;
    for (int t = i; t < n; ++t) sorted[static_cast<std::size_t>(t)] = v;
  }
  return result;
}

std::optional<Counterexample> find_counterexample(int n_max, int k_max,
                                                  std::string_view property,
                                                  unsigned shards) {
  const auto& prop = find_property(property);
  SweepOptions options;
  options.predicates.clear();
  options.verify = true;
  options.properties = {std::string(prop.name)};
  options.shards = shards;
  options.size_limit = kExtendedSizeLimit;
  for (int n = 1; n <= n_max; ++n) {
    for (int k = 0; k <= std::min(k_max, n); ++k) {
      auto report = sweep(n, k, options);
      if (report.violation) return report.violation;
    }
  }
  return std::nullopt;
}

}  // namespace naples
