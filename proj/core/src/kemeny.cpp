#include "poprank/kemeny.hpp"

#include <algorithm>

#include "poprank/core.hpp"
#include "poprank/majority.hpp"

namespace poprank {

long long kemeny_rank(const VotingInstance& inst, const Ranking& r) {
    if (r.size() != inst.m) {
        throw InvalidInputError("ranking does not match the instance's candidate set");
    }
    long long total = 0;
    for (const Ranking& voter : inst.voters) {
        total += kendall_distance(r, voter);
    }
    return total;
}

namespace {

// Cost of placing a before b = number of voters preferring b to a.
struct PairCosts {
    int m;
    std::vector<long long> cost;  // cost[(a-1)*m + (b-1)]

    explicit PairCosts(const VotingInstance& inst) : m(inst.m), cost(m * m, 0) {
        const MajorityGraph g = build_majority_graph(inst);
        for (int a = 1; a <= m; ++a) {
            for (int b = 1; b <= m; ++b) {
                if (a != b) at(a, b) = g.support(b, a);
            }
        }
    }

    long long& at(int a, int b) { return cost[(a - 1) * m + (b - 1)]; }
    long long at(int a, int b) const { return cost[(a - 1) * m + (b - 1)]; }
};

struct Search {
    const PairCosts& costs;
    long long budget;
    long long nodes = 0;

    // Enumeration state.
    std::vector<int> prefix;
    std::vector<bool> used;

    // Phase 1 result.
    long long best = 0;

    // Phase 2 output.
    std::vector<Ranking>* minimizers = nullptr;
    int cap = 0;
    bool truncated = false;

    explicit Search(const PairCosts& c, long long b) : costs(c), budget(b) {
        used.assign(costs.m + 1, false);
        prefix.reserve(costs.m);
    }

    void tick() {
        if (++nodes > budget) {
            throw ResourceLimitError("kemeny search exceeded node budget " +
                                     std::to_string(budget));
        }
    }

    long long lower_bound_remaining() const {
        long long lb = 0;
        for (int a = 1; a <= costs.m; ++a) {
            if (used[a]) continue;
            for (int b = a + 1; b <= costs.m; ++b) {
                if (used[b]) continue;
                lb += std::min(costs.at(a, b), costs.at(b, a));
            }
        }
        return lb;
    }

    // Phase 1: tightest optimum, pruning strictly worse branches.
    void find_optimum(long long fixed_cost) {
        tick();
        if (static_cast<int>(prefix.size()) == costs.m) {
            best = std::min(best, fixed_cost);
            return;
        }
        if (fixed_cost + lower_bound_remaining() > best) return;
        for (int c = 1; c <= costs.m; ++c) {
            if (used[c]) continue;
            long long added = 0;
            for (int b = 1; b <= costs.m; ++b) {
                if (b != c && !used[b]) added += costs.at(c, b);
            }
            used[c] = true;
            prefix.push_back(c);
            find_optimum(fixed_cost + added);
            prefix.pop_back();
            used[c] = false;
        }
    }

    // Phase 2: collect every leaf attaining the optimum, in lexicographic order.
    void collect(long long fixed_cost) {
        tick();
        if (static_cast<int>(prefix.size()) == costs.m) {
            if (fixed_cost == best) {
                if (static_cast<int>(minimizers->size()) < cap) {
                    minimizers->emplace_back(prefix);
                } else {
                    truncated = true;
                }
            }
            return;
        }
        if (fixed_cost + lower_bound_remaining() > best) return;
        for (int c = 1; c <= costs.m; ++c) {
            if (used[c]) continue;
            long long added = 0;
            for (int b = 1; b <= costs.m; ++b) {
                if (b != c && !used[b]) added += costs.at(c, b);
            }
            used[c] = true;
            prefix.push_back(c);
            collect(fixed_cost + added);
            prefix.pop_back();
            used[c] = false;
            if (truncated) return;
        }
    }
};

}  // namespace

KemenyResult kemeny_consensus(const VotingInstance& inst, long long budget, int cap) {
    const PairCosts costs(inst);
    Search search(costs, budget);
    // Any voter's own ranking is an upper bound.
    search.best = kemeny_rank(inst, inst.voters.front());
    search.find_optimum(0);

    KemenyResult result;
    result.optimum = search.best;
    search.minimizers = &result.minimizers;
    search.cap = cap;
    search.nodes = 0;
    search.collect(0);
    result.truncated = search.truncated;
    return result;
}

std::optional<Ranking> smaller_kemeny_rank(const VotingInstance& inst,
                                           const Ranking& pi, long long budget) {
    const long long pi_rank = kemeny_rank(inst, pi);
    const KemenyResult result = kemeny_consensus(inst, budget, 1);
    if (result.optimum < pi_rank) return result.minimizers.front();
    return std::nullopt;
}

Ranking consensus_by_improvement(const VotingInstance& inst, const Ranking& start,
                                 long long budget) {
    const long long max_iterations =
        static_cast<long long>(inst.n()) * inst.m * (inst.m - 1) / 2 + 1;
    Ranking current = start;
    for (long long i = 0; i < max_iterations; ++i) {
        std::optional<Ranking> better = smaller_kemeny_rank(inst, current, budget);
        if (!better) return current;
        current = std::move(*better);
    }
    throw InvariantViolationError("improvement loop exceeded the n*m*(m-1)/2 bound");
}

}  // namespace poprank
