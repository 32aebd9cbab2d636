#pragma once

// Test-only reference implementations. Everything here is written directly
// from the definitions, without sharing code paths with the library.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace oracle {

using Seq = std::vector<int>;

/// Spot-by-spot simulation; 0 marks an unparked car.
Seq park(const Seq& prefs, const std::vector<int>& windows);
Seq park(const Seq& prefs, int k);
bool all_park(const Seq& prefs, int k);

/// u(j) straight from the definition: count of a_i >= j minus spots >= j.
Seq excess(const Seq& prefs);

/// Every permutation of car positions, then deduplicated.
std::vector<Seq> rearrangements(const Seq& prefs);

/// All of [1,n]^n in lexicographic order.
void for_each_preference(int n, const std::function<void(const Seq&)>& fn);

bool is_complete(const Seq& prefs);

/// Subsets J (1-based, increasing) with p <= a_j <= p-2+|J| whose shifted
/// restriction is complete and k-Naples, |J| >= min_size.
std::vector<Seq> witnesses(const Seq& prefs, int k, int p, int min_size);

std::uint64_t ipow(std::uint64_t base, unsigned exp);

}  // namespace oracle
