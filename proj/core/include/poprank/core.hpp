#pragma once

#include <set>
#include <utility>
#include <vector>

#include "poprank/types.hpp"

namespace poprank {

/// Unordered candidate pairs on which two rankings disagree. Pairs are kept
/// normalized as (small, large).
struct DisagreementSet {
    std::set<std::pair<int, int>> pairs;

    int size() const { return static_cast<int>(pairs.size()); }
    bool contains(int a, int b) const {
        if (a > b) std::swap(a, b);
        return pairs.count({a, b}) > 0;
    }
};

/// Number of candidate pairs the two rankings order oppositely.
/// Computed by an inversion merge-count in O(m log m).
int kendall_distance(const Ranking& a, const Ranking& b);

/// True iff the voter ranks a above b.
bool prefers(const Ranking& voter, int a, int b);

/// Exactly the pairs counted by kendall_distance(a, b).
DisagreementSet disagreement_set(const Ranking& a, const Ranking& b);

/// Adjacent-swap sequence that transforms `from` into `to`, produced by the
/// standard bubble pass order under the total order induced by `to`.
/// Its length equals kendall_distance(from, to).
std::vector<Swap> bubble_swap_path(const Ranking& from, const Ranking& to);

/// A swap (b,a) -> (a,b) is good for a voter iff the voter prefers a to b,
/// i.e. the candidate moving up. A good swap moves the evolving ranking one
/// step closer to the voter, a bad swap one step further away.
bool is_good_swap(const Swap& s, const Ranking& voter);

/// Returns r with positions (s.position, s.position + 1) exchanged.
/// Throws InvalidInputError if the swap is stale (entries do not match).
Ranking apply_swap(const Ranking& r, const Swap& s);

}  // namespace poprank
