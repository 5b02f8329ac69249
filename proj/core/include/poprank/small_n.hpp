#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "poprank/popularity.hpp"
#include "poprank/types.hpp"

namespace poprank {

enum class AcrCase {
    AllPreferTopsort,
    TwoPreferSwapProcedure,
    // The "exactly one voter prefers the topological sort" situation is
    // reachable when the other two voters abstain; it is resolved by an
    // exhaustive search rather than the procedure.
    OnePrefersExhaustiveFallback,
    NonePreferKemenyArgument,
    NoSolution,
};

struct AcrDistances {
    int d1 = 0;  // improvement of the closer preferring voter, d1 <= d2
    int d2 = 0;
    int d3 = 0;  // worsening of the non-preferring voter
};

struct AcrOutcome {
    std::optional<Ranking> result;              // present iff a solution exists
    AcrCase case_taken = AcrCase::NoSolution;
    std::optional<AcrDistances> distances;      // set when the swap procedure ran
};

/// n <= 3: popularity coincides with being topologically sorted, in both the
/// absolute and the simple sense.
bool verify_popular_small(const VotingInstance& inst, const Ranking& r);

/// n = 4 with an acyclic tournament majority graph: the unique topological
/// sort is the unique popular ranking.
bool verify_popular_4_tournament(const VotingInstance& inst, const Ranking& r);

/// n = 4, acyclic majority graph: true if r is popular in some 3-voter
/// subinstance (a sufficient certificate); nullopt when inconclusive.
std::optional<bool> popular_by_subinstance(const VotingInstance& inst,
                                           const Ranking& r);

/// n = 3, acyclic majority graph: decides whether some ranking is preferred
/// by all three voters to pi, and produces one if so. Case analysis over how
/// many voters prefer the unique topological sort; the two-preferrer case
/// runs the good-swap procedure (leftmost good swap each round) and verifies
/// the output against all three voters before returning it.
AcrOutcome three_all_closer_ranking(const VotingInstance& inst, const Ranking& pi,
                                    long long budget = kDefaultSearchBudget);

/// Appends `copies` voters whose ranking is pi.
VotingInstance pad_with_incumbent(const VotingInstance& inst, const Ranking& pi,
                                  int copies);

/// n in {4,5}: absolute-majority witness against pi via the 3-voter
/// all-closer-ranking algorithm applied to every voter triple; triples with a
/// cyclic majority graph fall back to an exhaustive block-pruned search.
/// Returns the lexicographically smallest witness found, or nullopt.
std::optional<Ranking> aurv_via_acr(const VotingInstance& inst, const Ranking& pi,
                                    long long budget = kDefaultSearchBudget);

/// n = 3: builds the 3m-candidate instance with three candidate copies
/// (copy j of candidate r is labeled r + (j-1)*m), voters as cyclic shifts,
/// and pi' as the triple concatenation of pi. All three voters are equally
/// far from pi'.
std::pair<VotingInstance, Ranking> kemeny_to_acr_instance(const VotingInstance& inst,
                                                          const Ranking& pi);

/// Inverse direction: from a ranking sigma' preferred by all three
/// transformed voters, extracts a ranking of the original candidates with
/// strictly smaller Kemeny rank than pi.
Ranking extract_smaller_kemeny(const VotingInstance& inst, const Ranking& pi,
                               const Ranking& sigma_prime);

}  // namespace poprank
