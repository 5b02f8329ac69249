#include "poprank/small_n.hpp"

#include <algorithm>
#include <array>

#include "poprank/core.hpp"
#include "poprank/kemeny.hpp"
#include "poprank/majority.hpp"

namespace poprank {

bool verify_popular_small(const VotingInstance& inst, const Ranking& r) {
    if (inst.n() > 3) {
        throw InvalidInputError("verify_popular_small handles at most 3 voters");
    }
    return is_topologically_sorted(inst, r);
}

bool verify_popular_4_tournament(const VotingInstance& inst, const Ranking& r) {
    if (inst.n() != 4) {
        throw InvalidInputError("verify_popular_4_tournament requires exactly 4 voters");
    }
    const MajorityGraph g = build_majority_graph(inst);
    if (!is_tournament(g) || !is_acyclic(g)) {
        throw PreconditionError("majority graph is not an acyclic tournament");
    }
    const std::vector<Ranking> sorts = topological_sorts(g, 2);
    if (sorts.size() != 1) {
        throw InvariantViolationError("acyclic tournament without a unique topological sort");
    }
    return r == sorts.front();
}

namespace {

std::vector<std::array<int, 3>> voter_triples(int n) {
    std::vector<std::array<int, 3>> triples;
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            for (int k = j + 1; k <= n; ++k) triples.push_back({i, j, k});
        }
    }
    return triples;
}

VotingInstance subinstance(const VotingInstance& inst, const std::array<int, 3>& triple) {
    return VotingInstance(
        inst.m, {inst.voter(triple[0]), inst.voter(triple[1]), inst.voter(triple[2])});
}

/// Lexicographically smallest block-preserving ranking strictly preferred to
/// pi by every voter, or nullopt. Sound as an existence check: mapping any
/// defeat into the preserved partition never increases a voter's distance.
std::optional<Ranking> all_closer_exhaustive(const VotingInstance& inst,
                                             const Ranking& pi, long long budget) {
    BlockPreservingEnumerator candidates(preserved_partition(inst));
    if (candidates.space_size() > budget) {
        throw ResourceLimitError("search space of " +
                                 std::to_string(candidates.space_size()) +
                                 " rankings exceeds budget " + std::to_string(budget));
    }
    std::vector<int> pi_dist;
    for (const Ranking& voter : inst.voters) {
        pi_dist.push_back(kendall_distance(pi, voter));
    }
    do {
        const Ranking& zeta = candidates.current();
        bool allCloser = true;
        for (int v = 0; v < inst.n(); ++v) {
            if (kendall_distance(zeta, inst.voters[v]) >= pi_dist[v]) {
                allCloser = false;
                break;
            }
        }
        if (allCloser) return zeta;
    } while (candidates.advance());
    return std::nullopt;
}

}  // namespace

std::optional<bool> popular_by_subinstance(const VotingInstance& inst, const Ranking& r) {
    if (inst.n() != 4) {
        throw PreconditionError("popular_by_subinstance requires exactly 4 voters");
    }
    if (!is_acyclic(build_majority_graph(inst))) {
        throw PreconditionError("popular_by_subinstance requires an acyclic majority graph");
    }
    for (const auto& triple : voter_triples(4)) {
        if (verify_popular_small(subinstance(inst, triple), r)) return true;
    }
    return std::nullopt;
}

AcrOutcome three_all_closer_ranking(const VotingInstance& inst, const Ranking& pi,
                                    long long budget) {
    if (inst.n() != 3) {
        throw InvalidInputError("three_all_closer_ranking requires exactly 3 voters");
    }
    if (pi.size() != inst.m) {
        throw InvalidInputError("ranking does not match the instance's candidate set");
    }
    const MajorityGraph g = build_majority_graph(inst);
    if (!is_acyclic(g)) {
        throw PreconditionError("majority graph is cyclic");
    }
    // With three voters the graph is a complete tournament, so the
    // topological sort is unique.
    const Ranking sigma = topological_sorts(g, 1).front();

    std::array<int, 3> gain{};  // K(pi, v) - K(sigma, v); positive = prefers sigma
    for (int v = 0; v < 3; ++v) {
        gain[v] = kendall_distance(pi, inst.voters[v]) -
                  kendall_distance(sigma, inst.voters[v]);
    }
    const int preferrers =
        static_cast<int>(std::count_if(gain.begin(), gain.end(),
                                       [](int d) { return d > 0; }));

    AcrOutcome outcome;
    switch (preferrers) {
        case 3:
            outcome.case_taken = AcrCase::AllPreferTopsort;
            outcome.result = sigma;
            return outcome;
        case 0:
            // sigma is a Kemeny consensus and no voter improves on pi, so pi
            // is itself a consensus; nothing beats it for all three voters.
            outcome.case_taken = AcrCase::NonePreferKemenyArgument;
            return outcome;
        case 1: {
            outcome.case_taken = AcrCase::OnePrefersExhaustiveFallback;
            outcome.result = all_closer_exhaustive(inst, pi, budget);
            return outcome;
        }
        default:
            break;  // two preferrers: run the swap procedure below
    }

    AcrDistances dist;
    int behind = -1;
    {
        std::vector<int> improvements;
        for (int v = 0; v < 3; ++v) {
            if (gain[v] > 0) {
                improvements.push_back(gain[v]);
            } else {
                behind = v;
            }
        }
        dist.d1 = std::min(improvements[0], improvements[1]);
        dist.d2 = std::max(improvements[0], improvements[1]);
        dist.d3 = -gain[behind];
    }
    outcome.distances = dist;
    outcome.case_taken = AcrCase::TwoPreferSwapProcedure;

    const Ranking& v3 = inst.voters[behind];
    Ranking current = sigma;
    for (int round = 0; round <= dist.d3; ++round) {
        std::optional<Swap> good;
        for (int p = 1; p < inst.m; ++p) {
            const Swap candidate{p, current.at(p), current.at(p + 1)};
            if (is_good_swap(candidate, v3)) {
                good = candidate;
                break;
            }
        }
        if (!good) {
            // v3 is already at distance 0, i.e. pi equals v3's own ranking.
            outcome.case_taken = AcrCase::NoSolution;
            return outcome;
        }
        current = apply_swap(current, *good);
    }
    for (const Ranking& voter : inst.voters) {
        if (kendall_distance(current, voter) >= kendall_distance(pi, voter)) {
            outcome.case_taken = AcrCase::NoSolution;
            return outcome;
        }
    }
    outcome.result = std::move(current);
    return outcome;
}

VotingInstance pad_with_incumbent(const VotingInstance& inst, const Ranking& pi,
                                  int copies) {
    if (copies < 0) throw InvalidInputError("copy count must be nonnegative");
    if (pi.size() != inst.m) {
        throw InvalidInputError("ranking does not match the instance's candidate set");
    }
    std::vector<Ranking> voters = inst.voters;
    for (int i = 0; i < copies; ++i) voters.push_back(pi);
    return VotingInstance(inst.m, std::move(voters));
}

std::optional<Ranking> aurv_via_acr(const VotingInstance& inst, const Ranking& pi,
                                    long long budget) {
    if (inst.n() != 4 && inst.n() != 5) {
        throw InvalidInputError("aurv_via_acr handles 4 or 5 voters");
    }
    std::optional<Ranking> best;
    for (const auto& triple : voter_triples(inst.n())) {
        const VotingInstance sub = subinstance(inst, triple);
        std::optional<Ranking> witness;
        if (is_acyclic(build_majority_graph(sub))) {
            witness = three_all_closer_ranking(sub, pi, budget).result;
        } else {
            witness = all_closer_exhaustive(sub, pi, budget);
        }
        if (witness && (!best || *witness < *best)) best = witness;
    }
    return best;
}

namespace {

std::vector<int> shifted(const Ranking& r, int copy, int m) {
    std::vector<int> out;
    out.reserve(m);
    for (int c : r.order()) out.push_back(c + copy * m);
    return out;
}

std::vector<int> concat3(std::vector<int> a, const std::vector<int>& b,
                         const std::vector<int>& c) {
    a.insert(a.end(), b.begin(), b.end());
    a.insert(a.end(), c.begin(), c.end());
    return a;
}

}  // namespace

std::pair<VotingInstance, Ranking> kemeny_to_acr_instance(const VotingInstance& inst,
                                                          const Ranking& pi) {
    if (inst.n() != 3) {
        throw InvalidInputError("kemeny_to_acr_instance requires exactly 3 voters");
    }
    if (pi.size() != inst.m) {
        throw InvalidInputError("ranking does not match the instance's candidate set");
    }
    const int m = inst.m;
    const Ranking& v1 = inst.voters[0];
    const Ranking& v2 = inst.voters[1];
    const Ranking& v3 = inst.voters[2];
    std::vector<Ranking> voters;
    voters.emplace_back(concat3(shifted(v1, 0, m), shifted(v2, 1, m), shifted(v3, 2, m)));
    voters.emplace_back(concat3(shifted(v2, 0, m), shifted(v3, 1, m), shifted(v1, 2, m)));
    voters.emplace_back(concat3(shifted(v3, 0, m), shifted(v1, 1, m), shifted(v2, 2, m)));
    Ranking pi_prime(concat3(shifted(pi, 0, m), shifted(pi, 1, m), shifted(pi, 2, m)));
    return {VotingInstance(3 * m, std::move(voters)), std::move(pi_prime)};
}

Ranking extract_smaller_kemeny(const VotingInstance& inst, const Ranking& pi,
                               const Ranking& sigma_prime) {
    const int m = inst.m;
    if (sigma_prime.size() != 3 * m) {
        throw InvalidInputError("transformed witness must rank all 3m candidate copies");
    }
    const auto [transformed, pi_prime] = kemeny_to_acr_instance(inst, pi);
    for (const Ranking& voter : transformed.voters) {
        if (kendall_distance(sigma_prime, voter) >= kendall_distance(pi_prime, voter)) {
            throw PreconditionError(
                "sigma' is not preferred by all three transformed voters");
        }
    }

    // Normalize copy by copy: order each copy's candidates by their rank in
    // sigma', yielding the block-preserving form of the witness.
    std::vector<std::vector<int>> per_copy(3);
    for (int copy = 0; copy < 3; ++copy) {
        std::vector<int> candidates(m);
        for (int c = 1; c <= m; ++c) candidates[c - 1] = c + copy * m;
        std::sort(candidates.begin(), candidates.end(), [&](int a, int b) {
            return sigma_prime.rank_of(a) < sigma_prime.rank_of(b);
        });
        for (int& c : candidates) c -= copy * m;  // back to original labels
        per_copy[copy] = std::move(candidates);
    }

    const long long pi_prime_rank = kendall_distance(pi_prime, transformed.voters[0]);
    for (int j = 0; j < 3; ++j) {
        const Ranking base(per_copy[j]);
        const Ranking tau(
            concat3(shifted(base, 0, m), shifted(base, 1, m), shifted(base, 2, m)));
        if (kendall_distance(tau, transformed.voters[0]) < pi_prime_rank) {
            if (kemeny_rank(inst, base) >= kemeny_rank(inst, pi)) {
                throw InvariantViolationError(
                    "extracted ranking does not decrease the Kemeny rank");
            }
            return base;
        }
    }
    throw InvariantViolationError("no candidate-copy ranking beats pi' for voter 1");
}

}  // namespace poprank
