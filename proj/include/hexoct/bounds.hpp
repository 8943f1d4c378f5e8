#pragma once

#include <set>
#include <utility>

#include "hexoct/catalog.hpp"

namespace hexoct {

using KlPair = std::pair<u64, u64>;
using PairSet = std::set<KlPair>;

/// n^(12 + 12*floor(log2 n)) <= n!/2, decided by exact big-integer
/// arithmetic. First holds at n = 107.
bool lemma107_holds(u64 n);  // n >= 2

/// All (k, l) with 5 <= k <= k_max, 2 <= l <= l_max and
/// 24lk + 24l >= k^l. Requires k_max >= 48 and l_max >= 3 so the
/// bounds cover the full solution set (the right side dominates beyond).
PairSet coarse_pairs(u64 k_max, u64 l_max);

/// Subset of the candidates with (k!)^(12l) * (l!)^12 >= (k^l)!/2,
/// evaluated over factored integers.
PairSet exact_pairs(const PairSet& candidates);

/// |M(n)|^12 >= n!/2 for the 4-transitive Mathieu degrees {11,12,23,24};
/// other n are rejected.
bool mathieu_check(u64 n);

/// order < n^(1 + floor(log2 n)).
bool maroti_threshold(u64 n, const FactoredInteger& order);  // n >= 5

/// For each catalog row, whether order^12 >= |parent|. Every shipped
/// row passes; that is what qualified it for the catalog.
std::vector<std::pair<GroupSpec, bool>> twelfth_power_filter(const std::vector<GroupSpec>& catalog);

u64 floor_log2(u64 n);

}  // namespace hexoct
