#include "naples/properties.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "naples/characterize.hpp"
#include "naples/classify.hpp"
#include "naples/error.hpp"
#include "naples/simulator.hpp"

namespace naples {

namespace {

// Library routines check their own postconditions; a thrown violation is a
// counterexample.
template <typename F>
bool no_violation(F&& f) {
  try {
    return f();
  } catch (const InvariantViolation&) {
    return false;
  } catch (const Error&) {
    return false;
  }
}

bool excess_identities(const ParkingPreference& alpha, int) {
  const int n = alpha.length();
  const auto m = multiplicities(alpha);
  std::vector<int> expected(alpha.size());
  int below = 0;
  for (int j = 1; j <= n; ++j) {
    expected[static_cast<std::size_t>(j - 1)] = j - 1 - below;
    below += m.of(j);
  }
  return no_violation([&] {
    const auto u = excess(alpha);
    if (u.values() != expected) return false;
    if (u.of(1) != 0) return false;
    for (int j = 1; j <= n; ++j) {
      if (u.of(j) >= j) return false;
    }
    for (int j = 1; j < n; ++j) {
      if (u.of(j) != u.of(j + 1) + m.of(j) - 1) return false;
    }
    // Critical intervals are exactly the maximal runs of u >= 1.
    std::vector<bool> marked(alpha.size(), false);
    Spot previous_last = 0;
    for (const auto& iv : u.critical_intervals()) {
      if (iv.first <= previous_last + 1 || iv.first < 2 || iv.last > n) return false;
      for (Spot j = iv.first; j <= iv.last; ++j) marked[static_cast<std::size_t>(j - 1)] = true;
      previous_last = iv.last;
    }
    for (int j = 1; j <= n; ++j) {
      if (marked[static_cast<std::size_t>(j - 1)] != (u.of(j) >= 1)) return false;
    }
    return true;
  });
}

bool elementary_intervals(const ParkingPreference& alpha, int) {
  const auto u = excess(alpha);
  const auto m = multiplicities(alpha);
  return std::all_of(u.critical_intervals().begin(), u.critical_intervals().end(),
                     [&](const Interval& iv) {
                       const Spot p = iv.first;
                       return p >= 2 && u.of(p) == 1 && u.of(p - 1) == 0 &&
                              m.of(p - 1) == 0 && m.of(iv.last) >= 2;
                     });
}

bool easy_characterization(const ParkingPreference& alpha, int) {
  // Nondecreasing rearrangement b satisfies b_j <= j.
  std::vector<Spot> b = alpha.values();
  std::sort(b.begin(), b.end());
  bool sorted_test = true;
  for (std::size_t j = 0; j < b.size(); ++j) {
    sorted_test = sorted_test && b[j] <= static_cast<int>(j) + 1;
  }
  const bool parks = park_uniform(alpha, 0).outcome.all_parked;
  return is_parking_function(alpha) == parks && sorted_test == parks;
}

bool necessary_excess_bound_is_necessary(const ParkingPreference& alpha, int k) {
  return !is_k_naples(alpha, k) || necessary_excess_bound(alpha, k);
}

bool nonincreasing_sufficiency_holds(const ParkingPreference& alpha, int k) {
  if (!alpha.is_nonincreasing()) return true;
  return no_violation([&] {
    const bool bound = nonincreasing_sufficiency(alpha, k);
    return !bound || park_uniform(alpha, k).outcome.all_parked;
  });
}

bool excess_bound_is_sufficient(const ParkingPreference& alpha, int k) {
  return !necessary_excess_bound(alpha, k) || is_k_naples(alpha, k);
}

bool drive_forward_splitting(const ParkingPreference& alpha, int k) {
  const auto out = park_uniform(alpha, k).outcome;
  const int n = alpha.length();
  for (CarIndex i = 1; i <= n; ++i) {
    const Spot j = out.spot_of_car(i);
    if (j == kUnparked || j <= alpha.of_car(i)) continue;
    for (CarIndex h = 1; h <= n; ++h) {
      const Spot s = out.spot_of_car(h);
      if (alpha.of_car(h) >= j && s != kUnparked && s <= j) return false;
    }
  }
  return true;
}

bool drive_forward_excess(const ParkingPreference& alpha, int k) {
  const auto out = park_uniform(alpha, k).outcome;
  if (!out.all_parked) return true;
  const auto u = excess(alpha);
  for (CarIndex i = 1; i <= alpha.length(); ++i) {
    const Spot j = out.spot_of_car(i);
    if (j > alpha.of_car(i) && u.of(j) > -1) return false;
  }
  return true;
}

bool complete_equivalences(const ParkingPreference& alpha, int k) {
  if (!is_complete_or_false(alpha)) return true;
  return no_violation([&] {
    const auto eq = complete_naples_equivalences(alpha, k);
    return eq.all_parked == is_k_naples(alpha, k);
  });
}

bool quantitative(const ParkingPreference& alpha, int k) {
  if (!is_complete_or_false(alpha)) return true;
  return no_violation([&] {
    quantitative_bound(alpha, k);
    return true;
  });
}

bool complete_tail(const ParkingPreference& alpha, int k) {
  if (!is_complete_or_false(alpha)) return true;
  const auto out = park_uniform(alpha, k).outcome;
  if (!out.all_parked) return true;
  const int n = alpha.length();
  return out.spot_of_car(n) == 1 && alpha.of_car(n) <= k + 1;
}

bool p_minus_1_spot(const ParkingPreference& alpha, int k) {
  if (k < 1) return true;
  return no_violation([&] { return check_p_minus_1(alpha, k) == is_k_naples(alpha, k); });
}

bool decomposition_excess(const ParkingPreference& alpha, int) {
  const auto u = excess(alpha);
  for (Spot j = 1; j <= alpha.length(); ++j) {
    if (u.of(j) != 0) continue;
    const bool ok = no_violation([&] {
      const auto d = decompose_at(alpha, j);
      if (d.upper.length() != alpha.length() - j + 1) return false;
      if (d.lower.has_value() != (j > 1)) return false;
      if (d.lower && d.lower->length() != j - 1) return false;
      return true;
    });
    if (!ok) return false;
  }
  return true;
}

bool decomposition_lemma(const ParkingPreference& alpha, int k) {
  if (!is_k_naples(alpha, k)) return true;
  const auto u = excess(alpha);
  for (Spot j = 1; j <= alpha.length(); ++j) {
    if (u.of(j) != 0) continue;
    if (!no_violation([&] { return verify_decomposition_lemma(alpha, k, j).upper_naples; })) {
      return false;
    }
  }
  return true;
}

bool main_characterization(const ParkingPreference& alpha, int k) {
  if (k < 1) return true;
  return no_violation(
      [&] { return verify_main_theorem(alpha, k) == is_k_naples(alpha, k); });
}

bool witness_soundness(const ParkingPreference& alpha, int k) {
  if (k < 1) return true;
  return no_violation([&] {
    for (const auto& iv : excess(alpha).critical_intervals()) {
      const auto cert = find_witness(alpha, k, iv);
      if (cert) {
        const auto check = check_certificate(alpha, k, *cert);
        if (!check.valid() || !check.size_bound) return false;
      }
    }
    return true;
  });
}

bool witness_search_agreement(const ParkingPreference& alpha, int k) {
  if (k < 1 || alpha.length() > 8) return true;
  return no_violation([&] {
    const bool naples = is_k_naples(alpha, k);
    for (const auto& iv : excess(alpha).critical_intervals()) {
      const bool exhaustive = !all_witnesses(alpha, k, iv, iv.size() + 1).empty();
      if (exhaustive != find_witness(alpha, k, iv).has_value()) return false;
      if (naples && !construct_witness(alpha, k, iv)) return false;
    }
    return true;
  });
}

bool j_inequality(const ParkingPreference& alpha, int k) {
  if (k < 1 || alpha.length() > 8 || !is_k_naples(alpha, k)) return true;
  return no_violation([&] {
    for (const auto& iv : excess(alpha).critical_intervals()) {
      for (const auto& w : all_witnesses(alpha, k, iv, 2)) {
        if (w.cars.size() < iv.size() + 1) return false;
      }
    }
    return true;
  });
}

bool permutation_invariance(const ParkingPreference& alpha, int k) {
  if (alpha.length() > kMaxRearrangementLength) return true;
  return is_permutation_invariant(alpha, k) == all_rearrangements_naples(alpha, k);
}

bool summary_theorem(const ParkingPreference& alpha, int k) {
  if (k < 1) return true;
  return no_violation([&] {
    const auto r = verify_summary_theorem(alpha, k);
    return r.large_intervals_satisfied == r.k_naples;
  });
}

bool monotone_k(const ParkingPreference& alpha, int k) {
  return !is_k_naples(alpha, k) || is_k_naples(alpha, k + 1);
}

bool trace_consistency(const ParkingPreference& alpha, int k) {
  const auto plain = park_uniform(alpha, k);
  const auto traced = park_uniform(alpha, k, TraceMode::On);
  if (!(plain.outcome == traced.outcome) || !traced.trace) return false;

  const int n = alpha.length();
  std::vector<bool> taken(alpha.size() + 1, false);
  int occupied = 0;
  for (const auto& ev : *traced.trace) {
    const bool preferred_free = !taken[static_cast<std::size_t>(ev.preferred)];
    if (preferred_free && (ev.result != ev.preferred || !ev.backward_checks.empty() ||
                           !ev.forward_checks.empty())) {
      return false;
    }
    const auto& back = ev.backward_checks;
    if (static_cast<int>(back.size()) > k) return false;
    for (std::size_t i = 0; i < back.size(); ++i) {
      if (back[i] != ev.preferred - 1 - static_cast<int>(i) || back[i] < 1) return false;
    }
    const auto& fwd = ev.forward_checks;
    for (std::size_t i = 0; i < fwd.size(); ++i) {
      if (fwd[i] != ev.preferred + 1 + static_cast<int>(i) || fwd[i] > n) return false;
    }
    if (ev.result != kUnparked) {
      if (taken[static_cast<std::size_t>(ev.result)]) return false;
      taken[static_cast<std::size_t>(ev.result)] = true;
      ++occupied;
    }
  }
  return (occupied == n) == traced.outcome.all_parked;
}

constexpr std::array kProperties{
    Property{"excess_identities",
             "excess values match both closed forms and the recurrence; critical set is "
             "the maximal runs of u >= 1",
             true, excess_identities},
    Property{"elementary_intervals",
             "each maximal critical interval [p,q] has u(p)=1, u(p-1)=0, m(p-1)=0, m(q)>=2",
             true, elementary_intervals},
    Property{"easy_characterization",
             "parking function <=> empty critical set <=> sorted b_j <= j", true,
             easy_characterization},
    Property{"necessary_excess_bound_is_necessary", "k-Naples implies max u <= k", true,
             necessary_excess_bound_is_necessary},
    Property{"nonincreasing_sufficiency",
             "nonincreasing and max u <= k implies k-Naples", true,
             nonincreasing_sufficiency_holds},
    Property{"drive_forward_splitting",
             "a car parking forward at j blocks all cars preferring >= j from [1,j]", true,
             drive_forward_splitting},
    Property{"drive_forward_excess",
             "when all park, a forward parker at j forces u(j) <= -1", true,
             drive_forward_excess},
    Property{"complete_equivalences",
             "complete: parks <=> spots held from above <=> no forward parking", true,
             complete_equivalences},
    Property{"quantitative_bound",
             "complete: backward parkers past j <= u(j), equality when k-Naples", true,
             quantitative},
    Property{"complete_tail", "complete k-Naples: last car takes spot 1 and a_n <= k+1",
             true, complete_tail},
    Property{"p_minus_1_spot", "k-Naples <=> spot p-1 filled for every critical interval",
             true, p_minus_1_spot},
    Property{"decomposition_excess",
             "splitting at a zero of u preserves the excess function on both sides", true,
             decomposition_excess},
    Property{"decomposition_lemma",
             "k-Naples: the shifted upper part at every zero of u is k-Naples", true,
             decomposition_lemma},
    Property{"main_characterization", "k-Naples <=> every critical interval has a witness",
             true, main_characterization},
    Property{"witness_soundness",
             "returned witnesses re-verify from scratch and have |J| >= q-p+2", true,
             witness_soundness},
    Property{"witness_search_agreement",
             "constructive and exhaustive witness searches agree on existence (n <= 8)",
             true, witness_search_agreement},
    Property{"j_inequality", "k-Naples: every witness has |J| >= q-p+2 (n <= 8)", true,
             j_inequality},
    Property{"permutation_invariance",
             "interval sizes <= k <=> all rearrangements k-Naples (n <= 7)", true,
             permutation_invariance},
    Property{"summary_theorem",
             "per interval: spot p-1 filled by upper cars <=> witness exists", true,
             summary_theorem},
    Property{"monotone_k", "k-Naples implies (k+1)-Naples", true, monotone_k},
    Property{"trace_consistency",
             "traced and bitmap simulations agree; trace probes are well formed", true,
             trace_consistency},
    Property{"excess_bound_is_sufficient",
             "deliberately false: max u <= k implies k-Naples", false,
             excess_bound_is_sufficient},
};

}  // namespace

std::span<const Property> registered_properties() { return kProperties; }

const Property& find_property(std::string_view name) {
  for (const auto& p : kProperties) {
    if (p.name == name) return p;
  }
  throw Error(ErrorCode::UnknownProperty, "unknown property '" + std::string(name) + "'");
}

}  // namespace naples
