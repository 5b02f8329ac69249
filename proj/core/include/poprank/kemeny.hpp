#pragma once

#include <optional>
#include <vector>

#include "poprank/popularity.hpp"
#include "poprank/types.hpp"

namespace poprank {

struct KemenyResult {
    long long optimum = 0;
    std::vector<Ranking> minimizers;  // lexicographic, capped
    bool truncated = false;
};

constexpr int kDefaultMinimizerCap = 1'000;

/// Sum of Kendall distances from r to all voters.
long long kemeny_rank(const VotingInstance& inst, const Ranking& r);

/// Exact optimum by branch and bound over prefix extensions. The lower bound
/// is the cost of already-decided pairs plus the per-pair minimum over
/// undecided pairs. Minimizers are listed lexicographically, up to `cap`.
/// `budget` bounds the number of search-tree nodes.
KemenyResult kemeny_consensus(const VotingInstance& inst,
                              long long budget = kDefaultSearchBudget,
                              int cap = kDefaultMinimizerCap);

/// A ranking with strictly smaller Kemeny rank than pi, or nullopt.
std::optional<Ranking> smaller_kemeny_rank(const VotingInstance& inst,
                                           const Ranking& pi,
                                           long long budget = kDefaultSearchBudget);

/// Iterates smaller_kemeny_rank from `start` until no improvement exists;
/// the result is a Kemeny consensus. Throws InvariantViolationError if the
/// iteration count exceeds the n*m*(m-1)/2 bound.
Ranking consensus_by_improvement(const VotingInstance& inst, const Ranking& start,
                                 long long budget = kDefaultSearchBudget);

}  // namespace poprank
