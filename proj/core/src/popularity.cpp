#include "poprank/popularity.hpp"

#include <algorithm>
#include <climits>

#include "poprank/core.hpp"

namespace poprank {

ComparisonTally compare(const VotingInstance& inst, const Ranking& left,
                        const Ranking& right) {
    if (left.size() != inst.m || right.size() != inst.m) {
        throw InvalidInputError("rankings do not match the instance's candidate set");
    }
    ComparisonTally tally;
    for (int v = 1; v <= inst.n(); ++v) {
        const int dl = kendall_distance(left, inst.voter(v));
        const int dr = kendall_distance(right, inst.voter(v));
        if (dl < dr) {
            tally.prefer_left.push_back(v);
        } else if (dr < dl) {
            tally.prefer_right.push_back(v);
        } else {
            tally.abstain.push_back(v);
        }
    }
    return tally;
}

bool is_more_popular(const VotingInstance& inst, const Ranking& challenger,
                     const Ranking& incumbent, Mode mode) {
    const ComparisonTally tally = compare(inst, challenger, incumbent);
    const auto pro = static_cast<long long>(tally.prefer_left.size());
    const auto con = static_cast<long long>(tally.prefer_right.size());
    if (mode == Mode::Absolute) {
        return 2 * pro > inst.n();
    }
    return pro > con && pro > 0;
}

BlockPreservingEnumerator::BlockPreservingEnumerator(const OrderedPartition& partition) {
    for (const auto& block : partition.blocks) {
        blocks_.push_back(block);
        std::sort(blocks_.back().begin(), blocks_.back().end());
        long long fact = 1;
        for (size_t k = 2; k <= block.size(); ++k) {
            if (fact > LLONG_MAX / static_cast<long long>(k)) {
                fact = LLONG_MAX;
                break;
            }
            fact *= static_cast<long long>(k);
        }
        if (space_size_ > LLONG_MAX / std::max(fact, 1LL)) {
            space_size_ = LLONG_MAX;
        } else {
            space_size_ *= fact;
        }
    }
    rebuild();
}

void BlockPreservingEnumerator::rebuild() {
    std::vector<int> order;
    for (const auto& block : blocks_) {
        order.insert(order.end(), block.begin(), block.end());
    }
    current_.emplace(std::move(order));
}

bool BlockPreservingEnumerator::advance() {
    // Odometer over per-block permutations, last block least significant;
    // concatenations therefore appear in lexicographic order.
    for (int i = static_cast<int>(blocks_.size()) - 1; i >= 0; --i) {
        if (std::next_permutation(blocks_[i].begin(), blocks_[i].end())) {
            rebuild();
            return true;
        }
        // next_permutation wrapped the block back to sorted order; carry on.
    }
    return false;
}

void BlockPreservingEnumerator::reset() {
    for (auto& block : blocks_) std::sort(block.begin(), block.end());
    rebuild();
}

PopularityVerdict verify_popular(const VotingInstance& inst, const Ranking& r,
                                 Mode mode, long long budget) {
    if (r.size() != inst.m) {
        throw InvalidInputError("ranking does not match the instance's candidate set");
    }
    BlockPreservingEnumerator challengers(preserved_partition(inst));
    if (challengers.space_size() > budget) {
        throw ResourceLimitError("search space of " +
                                 std::to_string(challengers.space_size()) +
                                 " rankings exceeds budget " + std::to_string(budget));
    }
    PopularityVerdict verdict;
    verdict.mode = mode;
    do {
        ++verdict.challengers_searched;
        const Ranking& challenger = challengers.current();
        if (is_more_popular(inst, challenger, r, mode)) {
            verdict.status = Popularity::NotPopular;
            verdict.witness = challenger;
            verdict.certificate = compare(inst, challenger, r);
            return verdict;
        }
    } while (challengers.advance());
    return verdict;
}

std::optional<Ranking> find_popular(const VotingInstance& inst, Mode mode,
                                    long long budget) {
    const MajorityGraph g = build_majority_graph(inst);
    if (!is_acyclic(g)) return std::nullopt;
    const std::vector<Ranking> candidates = topological_sorts(g, budget);
    for (const Ranking& candidate : candidates) {
        const PopularityVerdict verdict = verify_popular(inst, candidate, mode, budget);
        if (verdict.status == Popularity::Popular) return candidate;
    }
    return std::nullopt;
}

Ranking lift_simple_witness_to_absolute(const VotingInstance& inst,
                                        const Ranking& pi, const Ranking& sigma1,
                                        long long budget) {
    if (!is_more_popular(inst, sigma1, pi, Mode::Simple)) {
        throw PreconditionError("sigma1 is not more popular than pi in the simple sense");
    }
    const auto verified = [&](const Ranking& candidate) {
        return is_more_popular(inst, candidate, pi, Mode::Absolute);
    };

    // Case (i): pi is not topologically sorted.
    const MajorityGraph g = build_majority_graph(inst);
    if (!is_topologically_sorted(g, pi)) {
        if (is_acyclic(g)) {
            for (const Ranking& candidate : topological_sorts(g, budget)) {
                if (verified(candidate)) return candidate;
            }
        }
        // Cyclic majority graph, or no topological sort verified: fall back
        // to the exhaustive witness search.
        const PopularityVerdict verdict =
            verify_popular(inst, pi, Mode::Absolute, budget);
        if (verdict.witness) return *verdict.witness;
        throw InvariantViolationError(
            "pi is not topologically sorted yet no absolute witness exists");
    }

    const ComparisonTally tally = compare(inst, sigma1, pi);

    // Case (ii): no abstainers, so the simple majority is already absolute.
    if (tally.abstain.empty()) return sigma1;

    // Case (iii): swap a consecutive pair of sigma1 that at least half of the
    // abstainers would rather see reversed.
    std::vector<Ranking> abstainer_rankings;
    for (int v : tally.abstain) abstainer_rankings.push_back(inst.voter(v));
    const VotingInstance abstainers(inst.m, std::move(abstainer_rankings));
    if (!is_acyclic(build_majority_graph(abstainers))) {
        throw PreconditionError(
            "the voters abstaining between sigma1 and pi have a cyclic majority graph");
    }
    for (int p = 1; p < inst.m; ++p) {
        const int a = sigma1.at(p);
        const int b = sigma1.at(p + 1);
        int prefer_b = 0;
        for (const Ranking& voter : abstainers.voters) {
            if (voter.prefers(b, a)) ++prefer_b;
        }
        if (2 * prefer_b >= abstainers.n()) {
            const Ranking sigma2 = apply_swap(sigma1, {p, a, b});
            if (!verified(sigma2)) {
                throw InvariantViolationError(
                    "constructed sigma2 failed the absolute-majority check");
            }
            return sigma2;
        }
    }
    throw InvariantViolationError(
        "no consecutive pair of sigma1 is opposed by half of the abstainers");
}

std::optional<Ranking> constrained_improvement_search(const VotingInstance& inst,
                                                      const Ranking& pi,
                                                      ImprovementThreshold threshold,
                                                      long long budget) {
    if (inst.n() != 3) {
        throw InvalidInputError("constrained improvement search requires exactly 3 voters");
    }
    if (pi.size() != inst.m) {
        throw InvalidInputError("ranking does not match the instance's candidate set");
    }
    long long space = 1;
    for (int k = 2; k <= inst.m; ++k) {
        space *= k;
        if (space > budget) {
            throw ResourceLimitError("search space exceeds budget " +
                                     std::to_string(budget));
        }
    }
    const auto meets = [&](int strict) {
        switch (threshold) {
            case ImprovementThreshold::ExactlyOne: return strict == 1;
            case ImprovementThreshold::AtLeastOne: return strict >= 1;
            case ImprovementThreshold::ExactlyTwo: return strict == 2;
            case ImprovementThreshold::AtLeastTwo: return strict >= 2;
            case ImprovementThreshold::AllThree: return strict == 3;
        }
        return false;
    };
    std::vector<int> order(inst.m);
    for (int c = 1; c <= inst.m; ++c) order[c - 1] = c;
    do {
        const Ranking zeta(order);
        int strict = 0;
        bool harmed = false;
        for (const Ranking& voter : inst.voters) {
            const int dz = kendall_distance(zeta, voter);
            const int dp = kendall_distance(pi, voter);
            if (dz > dp) {
                harmed = true;
                break;
            }
            if (dz < dp) ++strict;
        }
        if (!harmed && meets(strict)) return zeta;
    } while (std::next_permutation(order.begin(), order.end()));
    return std::nullopt;
}

}  // namespace poprank
