#include <doctest.h>

#include "poprank/generators.hpp"
#include "poprank/io.hpp"
#include "poprank/majority.hpp"
#include "poprank/popularity.hpp"
#include "test_util.hpp"

using namespace poprank;

TEST_SUITE_BEGIN("generators");

TEST_CASE("fig1 instance") {
    const VotingInstance inst = fig1_instance();
    CHECK(inst.n() == 6);
    CHECK(inst.m == 9);
    CHECK(inst.voter(1) == Ranking({1, 2, 3, 6, 4, 5, 8, 9, 7}));
    CHECK(inst.voter(4) == Ranking({1, 2, 3, 4, 5, 6, 7, 8, 9}));
    const MajorityGraph g = build_majority_graph(inst);
    CHECK(is_acyclic(g));
    CHECK_FALSE(is_tournament(g));
}

TEST_CASE("example1 instance") {
    const VotingInstance inst = example1_instance();
    CHECK(inst.n() == 4);
    CHECK(inst.m == 6);
    CHECK(inst.voter(4) == Ranking({1, 2, 3, 4, 5, 6}));
}

TEST_CASE("obs4 instance") {
    const VotingInstance inst = obs4_instance();
    CHECK(inst.n() == 4);
    CHECK(inst.m == 10);
    CHECK(is_topologically_sorted(inst, inst.voter(1)));
    for (int i = 2; i <= 4; ++i) {
        CHECK(kendall_distance(inst.voter(i), inst.voter(1)) == 3);
    }
    const Ranking popular({1, 2, 4, 3, 6, 5, 8, 7, 10, 9});
    CHECK(verify_popular(inst, popular, Mode::Absolute).status ==
          Popularity::Popular);
    CHECK(verify_popular(inst, popular, Mode::Simple).status ==
          Popularity::Popular);
}

TEST_CASE("appendixB instance") {
    const VotingInstance inst = appendixB_instance();
    CHECK(inst.n() == 8);
    CHECK(inst.m == 9);
    CHECK(inst.voter(7) == Ranking({2, 3, 1, 5, 6, 4, 8, 9, 7}));
    CHECK(inst.voter(7) == inst.voter(8));
}

TEST_CASE("tight-c family") {
    for (int j = 1; j <= 3; ++j) {
        const TightCInstance t = tight_c_instance(j);
        CHECK(t.instance.n() == 4 * j);
        CHECK(t.instance.m == 4 * j + 2);
        CHECK(is_topologically_sorted(t.instance, t.pi));
        CHECK(c_sorted_level(t.instance, t.pi) == Rational(3 * j - 1, 4 * j));

        // Each block pair is ranked increasing by exactly 3j-1 voters.
        const MajorityGraph g = build_majority_graph(t.instance);
        for (int b = 0; b < 2 * j + 1; ++b) {
            CHECK(g.support(2 * b + 1, 2 * b + 2) == 3 * j - 1);
        }

        const ComparisonTally tally = compare(t.instance, t.sigma, t.pi);
        CHECK(tally.prefer_left.size() == 2 * j + 1);
        // The sliding-window voters are exactly the last 2j+1.
        for (std::size_t i = 0; i < tally.prefer_left.size(); ++i) {
            CHECK(tally.prefer_left[i] == 2 * j + static_cast<int>(i));
        }
    }
    CHECK_THROWS_AS(tight_c_instance(0), InvalidInputError);
}

TEST_CASE("tight-c pi is beaten for j=2") {
    const TightCInstance t = tight_c_instance(2);
    const PopularityVerdict v = verify_popular(t.instance, t.pi, Mode::Absolute);
    CHECK(v.status == Popularity::NotPopular);
    CHECK(is_more_popular(t.instance, t.sigma, t.pi, Mode::Absolute));
}

TEST_CASE("extended condorcet") {
    const VotingInstance c3 = extended_condorcet(3);
    CHECK(c3.voters == std::vector<Ranking>{Ranking({1, 2, 3}), Ranking({2, 3, 1}),
                                            Ranking({3, 1, 2})});
    CHECK_THROWS_AS(extended_condorcet(2), InvalidInputError);

    for (const int n : {3, 5, 8}) {
        const VotingInstance inst = extended_condorcet(n);
        const MajorityGraph g = build_majority_graph(inst);
        for (int a = 1; a <= n; ++a) {
            const int b = a % n + 1;
            CHECK(g.support(a, b) == n - 1);
            CHECK(g.has_arc(a, b));
        }
        CHECK_FALSE(is_acyclic(g));
    }
}

TEST_CASE("condorcet beater") {
    const VotingInstance c3 = extended_condorcet(3);
    CHECK(condorcet_beater(c3, Ranking({1, 2, 3})) == Ranking({3, 2, 1}));
    const ComparisonTally t =
        compare(c3, Ranking({3, 2, 1}), Ranking({1, 2, 3}));
    CHECK(t.prefer_left.size() == 2);
    CHECK(t.prefer_right.size() == 1);

    const VotingInstance c5 = extended_condorcet(5);
    for (const Ranking& pi : testutil::all_rankings(5)) {
        const Ranking sigma = condorcet_beater(c5, pi);
        const ComparisonTally tally = compare(c5, sigma, pi);
        CHECK(tally.prefer_left.size() == 4);
        CHECK(tally.prefer_right.size() == 1);
        CHECK(condorcet_beater(c5, sigma) != pi);
    }
}

TEST_CASE("random instances are seed-reproducible") {
    const VotingInstance a = random_instance(5, 7, Seed{123});
    const VotingInstance b = random_instance(5, 7, Seed{123});
    CHECK(a.voters == b.voters);
    CHECK(serialize_instance(a) == serialize_instance(b));
    CHECK(random_instance(5, 7, Seed{124}).voters != a.voters);
    CHECK_THROWS_AS(random_instance(0, 3, Seed{0}), InvalidInputError);
}

TEST_CASE("random 3x3 condorcet-cycle rate is near 1/18") {
    int cycles = 0;
    const int draws = 10'000;
    for (int i = 0; i < draws; ++i) {
        const VotingInstance inst =
            random_instance(3, 3, Seed{static_cast<std::uint64_t>(i)});
        if (!is_acyclic(build_majority_graph(inst))) ++cycles;
    }
    const double rate = static_cast<double>(cycles) / draws;
    CHECK(rate > 1.0 / 18 - 0.01);
    CHECK(rate < 1.0 / 18 + 0.01);
}

TEST_CASE("named instances round-trip through the file format") {
    const VotingInstance instances[] = {fig1_instance(), example1_instance(),
                                        obs4_instance(), appendixB_instance(),
                                        tight_c_instance(2).instance,
                                        extended_condorcet(4)};
    for (const VotingInstance& inst : instances) {
        const std::string text = serialize_instance(inst);
        const VotingInstance back = parse_instance_text(text);
        CHECK(back.m == inst.m);
        CHECK(back.voters == inst.voters);
        CHECK(serialize_instance(back) == text);
    }
}

TEST_SUITE_END();
