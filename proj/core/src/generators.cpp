#include "poprank/generators.hpp"

#include <numeric>
#include <random>

#include "poprank/core.hpp"

namespace poprank {

VotingInstance fig1_instance() {
    return VotingInstance(9, {
        Ranking({1, 2, 3, 6, 4, 5, 8, 9, 7}),
        Ranking({2, 3, 1, 4, 5, 6, 9, 7, 8}),
        Ranking({3, 1, 2, 5, 6, 4, 7, 8, 9}),
        Ranking({1, 2, 3, 4, 5, 6, 7, 8, 9}),
        Ranking({1, 2, 3, 5, 4, 6, 9, 7, 8}),
        Ranking({1, 2, 3, 5, 6, 4, 7, 9, 8}),
    });
}

VotingInstance example1_instance() {
    return VotingInstance(6, {
        Ranking({2, 1, 4, 3, 5, 6}),
        Ranking({1, 2, 4, 3, 6, 5}),
        Ranking({2, 1, 3, 4, 6, 5}),
        Ranking({1, 2, 3, 4, 5, 6}),
    });
}

VotingInstance obs4_instance() {
    return VotingInstance(10, {
        Ranking({1, 2, 3, 4, 5, 6, 7, 8, 9, 10}),
        Ranking({1, 2, 4, 3, 6, 5, 7, 8, 10, 9}),
        Ranking({1, 2, 4, 3, 6, 5, 8, 7, 9, 10}),
        Ranking({2, 1, 3, 4, 5, 6, 8, 7, 10, 9}),
    });
}

VotingInstance appendixB_instance() {
    return VotingInstance(9, {
        Ranking({1, 2, 3, 6, 4, 5, 8, 9, 7}),
        Ranking({2, 3, 1, 4, 5, 6, 9, 7, 8}),
        Ranking({3, 1, 2, 5, 6, 4, 7, 8, 9}),
        Ranking({1, 2, 3, 4, 5, 6, 8, 9, 7}),
        Ranking({1, 2, 3, 5, 6, 4, 7, 8, 9}),
        Ranking({2, 3, 1, 4, 5, 6, 7, 8, 9}),
        Ranking({2, 3, 1, 5, 6, 4, 8, 9, 7}),
        Ranking({2, 3, 1, 5, 6, 4, 8, 9, 7}),
    });
}

TightCInstance tight_c_instance(int j) {
    if (j < 1) throw InvalidInputError("j must be positive");
    const int block_count = 2 * j + 1;
    const int m = 4 * j + 2;

    const auto build = [&](auto decreasing) {
        std::vector<int> order;
        order.reserve(m);
        for (int b = 0; b < block_count; ++b) {
            const int lo = 2 * b + 1;
            if (decreasing(b)) {
                order.push_back(lo + 1);
                order.push_back(lo);
            } else {
                order.push_back(lo);
                order.push_back(lo + 1);
            }
        }
        return Ranking(order);
    };

    const Ranking pi = build([](int) { return false; });
    std::vector<Ranking> voters(2 * j - 1, pi);
    for (int i = 0; i < block_count; ++i) {
        // Voter i's decreasing window covers block positions i..i+j (mod 2j+1).
        voters.push_back(build([&](int b) {
            const int offset = (b - i + block_count) % block_count;
            return offset <= j;
        }));
    }
    const Ranking sigma = build([](int) { return true; });
    return {VotingInstance(m, std::move(voters)), pi, sigma};
}

VotingInstance extended_condorcet(int n) {
    if (n < 3) throw InvalidInputError("extended Condorcet instance needs n >= 3");
    std::vector<Ranking> voters;
    for (int i = 1; i <= n; ++i) {
        std::vector<int> order(n);
        for (int k = 0; k < n; ++k) order[k] = (i - 1 + k) % n + 1;
        voters.emplace_back(std::move(order));
    }
    return VotingInstance(n, std::move(voters));
}

Ranking condorcet_beater(const VotingInstance& inst, const Ranking& pi) {
    const int n = inst.m;
    if (pi.size() != n) {
        throw InvalidInputError("ranking does not match the instance's candidate set");
    }
    for (int a = 1; a <= n; ++a) {
        const int b = a % n + 1;
        if (pi.rank_of(b) < pi.rank_of(a)) {
            std::vector<int> order = pi.order();
            std::swap(order[pi.rank_of(a) - 1], order[pi.rank_of(b) - 1]);
            return Ranking(std::move(order));
        }
    }
    throw InvariantViolationError(
        "ranking agrees with the whole cycle (1,2),...,(n,1), which is impossible");
}

VotingInstance random_instance(int n, int m, Seed seed) {
    if (n < 1 || m < 1) throw InvalidInputError("need n >= 1 and m >= 1");
    std::mt19937_64 rng(seed.value);
    std::vector<Ranking> voters;
    voters.reserve(n);
    for (int v = 0; v < n; ++v) {
        std::vector<int> order(m);
        std::iota(order.begin(), order.end(), 1);
        for (int i = m - 1; i > 0; --i) {
            const auto k = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
            std::swap(order[i], order[k]);
        }
        voters.emplace_back(std::move(order));
    }
    return VotingInstance(m, std::move(voters));
}

}  // namespace poprank
