#include <doctest.h>

#include <vector>

#include "poprank/generators.hpp"
#include "poprank/popularity.hpp"
#include "test_util.hpp"

using namespace poprank;

namespace {

const Ranking kSigma1({1, 2, 3, 5, 6, 4, 9, 7, 8});
const Ranking kSigma2({1, 2, 3, 4, 5, 6, 7, 8, 9});
const Ranking kSigma3({2, 1, 3, 4, 5, 6, 7, 8, 9});

VotingInstance identical(int n, const Ranking& r) {
    return VotingInstance(r.size(), std::vector<Ranking>(n, r));
}

}  // namespace

TEST_SUITE_BEGIN("popularity");

TEST_CASE("compare classifies voters") {
    const VotingInstance fig1 = fig1_instance();
    const ComparisonTally t = compare(fig1, kSigma1, kSigma2);
    CHECK(t.prefer_left == std::vector<int>{5, 6});
    CHECK(t.prefer_right == std::vector<int>{4});
    CHECK(t.abstain == std::vector<int>{1, 2, 3});

    const ComparisonTally same = compare(fig1, kSigma1, kSigma1);
    CHECK(same.prefer_left.empty());
    CHECK(same.prefer_right.empty());
    CHECK(same.abstain == std::vector<int>{1, 2, 3, 4, 5, 6});

    const VotingInstance ex1 = example1_instance();
    const Ranking sigma({2, 1, 4, 3, 6, 5});
    const ComparisonTally e = compare(ex1, sigma, ex1.voter(4));
    CHECK(e.prefer_left == std::vector<int>{1, 2, 3});
    CHECK(e.prefer_right == std::vector<int>{4});
}

TEST_CASE("is_more_popular") {
    const VotingInstance fig1 = fig1_instance();
    CHECK(is_more_popular(fig1, kSigma1, kSigma2, Mode::Simple));
    CHECK_FALSE(is_more_popular(fig1, kSigma1, kSigma2, Mode::Absolute));
    CHECK(is_more_popular(fig1, kSigma2, kSigma3, Mode::Absolute));
    CHECK_FALSE(is_more_popular(fig1, kSigma2, kSigma2, Mode::Absolute));
    CHECK_FALSE(is_more_popular(fig1, kSigma2, kSigma2, Mode::Simple));
}

TEST_CASE("all-abstain challenger never wins in simple mode") {
    // Two voters at equal distance from both rankings.
    const VotingInstance inst(2, {Ranking({1, 2}), Ranking({2, 1})});
    CHECK_FALSE(is_more_popular(inst, Ranking({2, 1}), Ranking({1, 2}), Mode::Simple));
}

TEST_CASE("verify_popular on fig1") {
    const VotingInstance fig1 = fig1_instance();

    const PopularityVerdict abs = verify_popular(fig1, kSigma2, Mode::Absolute);
    CHECK(abs.status == Popularity::Popular);
    CHECK(abs.challengers_searched == 216);
    CHECK_FALSE(abs.witness.has_value());

    const PopularityVerdict sim = verify_popular(fig1, kSigma2, Mode::Simple);
    CHECK(sim.status == Popularity::NotPopular);
    REQUIRE(sim.witness.has_value());
    CHECK(*sim.witness == kSigma1);
    CHECK(is_more_popular(fig1, *sim.witness, kSigma2, Mode::Simple));
}

TEST_CASE("single voter's own ranking is popular") {
    const VotingInstance inst = identical(1, Ranking({2, 4, 1, 3}));
    CHECK(verify_popular(inst, inst.voter(1), Mode::Absolute).status ==
          Popularity::Popular);
    CHECK(verify_popular(inst, inst.voter(1), Mode::Simple).status ==
          Popularity::Popular);
}

TEST_CASE("verify_popular on the eight-voter instance") {
    const VotingInstance inst = appendixB_instance();
    const Ranking pi = inst.voter(7);

    CHECK(verify_popular(inst, pi, Mode::Absolute).status == Popularity::Popular);

    const PopularityVerdict sim = verify_popular(inst, pi, Mode::Simple);
    CHECK(sim.status == Popularity::NotPopular);
    REQUIRE(sim.witness.has_value());
    CHECK(*sim.witness == Ranking({1, 2, 3, 4, 5, 6, 7, 8, 9}));
}

TEST_CASE("verify_popular honors the budget") {
    const VotingInstance fig1 = fig1_instance();
    CHECK_THROWS_AS(verify_popular(fig1, kSigma2, Mode::Absolute, 100),
                    ResourceLimitError);
}

TEST_CASE("pruned verification agrees with the unpruned oracle") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const int n = 1 + static_cast<int>(seed % 5);
        const int m = 2 + static_cast<int>(seed % 4);
        const VotingInstance inst = random_instance(n, m, Seed{seed});
        const Ranking r = random_instance(1, m, Seed{seed + 1000}).voter(1);
        for (const Mode mode : {Mode::Absolute, Mode::Simple}) {
            const bool pruned =
                verify_popular(inst, r, mode).status == Popularity::Popular;
            CHECK(pruned == testutil::brute_popular(inst, r, mode));
        }
    }
}

TEST_CASE("find_popular") {
    const VotingInstance cyc(3, {Ranking({1, 2, 3}), Ranking({2, 3, 1}),
                                 Ranking({3, 1, 2})});
    CHECK_FALSE(find_popular(cyc, Mode::Absolute).has_value());
    CHECK_FALSE(find_popular(cyc, Mode::Simple).has_value());

    const Ranking r({3, 2, 1});
    CHECK(find_popular(identical(4, r), Mode::Absolute) == r);

    // fig1 has five absolutely popular rankings; the smallest is returned.
    const VotingInstance fig1 = fig1_instance();
    int popular_count = 0;
    for (const Ranking& cand : topological_sorts(fig1)) {
        if (verify_popular(fig1, cand, Mode::Absolute).status == Popularity::Popular) {
            ++popular_count;
        }
    }
    CHECK(popular_count == 5);
    CHECK(find_popular(fig1, Mode::Absolute) == kSigma2);
}

TEST_CASE("abstainers split the disagreement pairs evenly") {
    for (std::uint64_t seed = 200; seed < 240; ++seed) {
        const int m = 3 + static_cast<int>(seed % 4);
        const VotingInstance inst = random_instance(4, m, Seed{seed});
        const Ranking sigma = random_instance(1, m, Seed{seed + 1}).voter(1);
        const Ranking pi = random_instance(1, m, Seed{seed + 2}).voter(1);
        const ComparisonTally t = compare(inst, sigma, pi);
        if (t.abstain.empty() || sigma == pi) continue;

        const DisagreementSet d = disagreement_set(sigma, pi);
        CHECK(d.size() % 2 == 0);
        for (const int v : t.abstain) {
            int agree_pi = 0;
            for (const auto& [a, b] : d.pairs) {
                if (prefers(inst.voter(v), a, b) == prefers(pi, a, b)) ++agree_pi;
            }
            CHECK(agree_pi * 2 == d.size());
        }
    }
}

TEST_CASE("lift rejects the fig1 cyclic-abstainer case") {
    CHECK_THROWS_AS(lift_simple_witness_to_absolute(fig1_instance(), kSigma2, kSigma1),
                    PreconditionError);
}

TEST_CASE("lift rejects a non-witness") {
    CHECK_THROWS_AS(lift_simple_witness_to_absolute(fig1_instance(), kSigma1, kSigma2),
                    PreconditionError);
}

TEST_CASE("lift with no abstainers returns sigma1") {
    const VotingInstance inst = identical(1, Ranking({1, 2, 3}));
    const Ranking lifted =
        lift_simple_witness_to_absolute(inst, Ranking({3, 2, 1}), Ranking({1, 2, 3}));
    CHECK(lifted == Ranking({1, 2, 3}));
}

TEST_CASE("lift output beats pi absolutely on random instances") {
    int lifted_cases = 0;
    for (std::uint64_t seed = 300; seed < 500 && lifted_cases < 25; ++seed) {
        const VotingInstance inst = random_instance(5, 5, Seed{seed});
        const Ranking pi = random_instance(1, 5, Seed{seed + 7}).voter(1);
        const PopularityVerdict sim = verify_popular(inst, pi, Mode::Simple);
        if (sim.status == Popularity::Popular) continue;
        Ranking sigma2 = pi;
        try {
            sigma2 = lift_simple_witness_to_absolute(inst, pi, *sim.witness);
        } catch (const PreconditionError&) {
            continue;  // cyclic abstainer graph
        }
        ++lifted_cases;
        CHECK(is_more_popular(inst, sigma2, pi, Mode::Absolute));
        // A lift can only exist when an absolute witness exists at all.
        CHECK(verify_popular(inst, pi, Mode::Absolute).status ==
              Popularity::NotPopular);
    }
    CHECK(lifted_cases == 25);
}

TEST_CASE("constrained improvement search") {
    const Ranking r({1, 2, 3});
    const VotingInstance same = identical(3, r);
    for (const ImprovementThreshold t :
         {ImprovementThreshold::ExactlyOne, ImprovementThreshold::AtLeastOne,
          ImprovementThreshold::ExactlyTwo, ImprovementThreshold::AtLeastTwo,
          ImprovementThreshold::AllThree}) {
        CHECK_FALSE(constrained_improvement_search(same, r, t).has_value());
    }
    CHECK(constrained_improvement_search(same, Ranking({2, 1, 3}),
                                         ImprovementThreshold::AllThree) == r);
    CHECK_FALSE(constrained_improvement_search(same, Ranking({2, 1, 3}),
                                               ImprovementThreshold::ExactlyTwo)
                    .has_value());
}

TEST_CASE("constrained improvement search matches a naive oracle") {
    const auto naive = [](const VotingInstance& inst, const Ranking& pi,
                          int lo, int hi) -> std::optional<Ranking> {
        for (const Ranking& zeta : testutil::all_rankings(inst.m)) {
            int strict = 0;
            bool harmed = false;
            for (const Ranking& v : inst.voters) {
                const int dz = kendall_distance(zeta, v);
                const int dp = kendall_distance(pi, v);
                if (dz > dp) harmed = true;
                if (dz < dp) ++strict;
            }
            if (!harmed && strict >= lo && strict <= hi) return zeta;
        }
        return std::nullopt;
    };

    for (std::uint64_t seed = 600; seed < 640; ++seed) {
        const VotingInstance inst = random_instance(3, 4, Seed{seed});
        const Ranking pi = random_instance(1, 4, Seed{seed + 3}).voter(1);
        CHECK(constrained_improvement_search(inst, pi, ImprovementThreshold::ExactlyOne) ==
              naive(inst, pi, 1, 1));
        CHECK(constrained_improvement_search(inst, pi, ImprovementThreshold::AtLeastOne) ==
              naive(inst, pi, 1, 3));
        CHECK(constrained_improvement_search(inst, pi, ImprovementThreshold::ExactlyTwo) ==
              naive(inst, pi, 2, 2));
        CHECK(constrained_improvement_search(inst, pi, ImprovementThreshold::AtLeastTwo) ==
              naive(inst, pi, 2, 3));
        CHECK(constrained_improvement_search(inst, pi, ImprovementThreshold::AllThree) ==
              naive(inst, pi, 3, 3));
    }
}

TEST_SUITE_END();
