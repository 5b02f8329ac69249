// Command-line front end: popularity verification, Kemeny consensus,
// majority-graph analysis, instance generation, the 3-voter all-closer
// search, and the simple-to-absolute witness lift.
//
// Exit codes: 0 affirmative/popular, 1 witness-found/negative, 2 error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "poprank/core.hpp"
#include "poprank/generators.hpp"
#include "poprank/io.hpp"
#include "poprank/kemeny.hpp"
#include "poprank/majority.hpp"
#include "poprank/popularity.hpp"
#include "poprank/small_n.hpp"

using json = nlohmann::ordered_json;
using namespace poprank;

namespace {

json ranking_json(const Ranking& r) { return json(r.order()); }

json tally_json(const ComparisonTally& t) {
    return json{{"prefer_challenger", t.prefer_left},
                {"prefer_incumbent", t.prefer_right},
                {"abstain", t.abstain}};
}

Mode parse_mode(const std::string& mode) {
    if (mode == "absolute") return Mode::Absolute;
    if (mode == "simple") return Mode::Simple;
    throw InvalidInputError("mode must be 'absolute' or 'simple'");
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - start)
            .count();
    }
};

int cmd_verify(const std::string& file, const std::string& ranking_arg,
               const std::string& mode_name, long long budget) {
    Timer timer;
    const VotingInstance inst = load_instance(file);
    const Ranking r = parse_ranking_arg(ranking_arg);
    const Mode mode = parse_mode(mode_name);
    const PopularityVerdict verdict = verify_popular(inst, r, mode, budget);
    json report{{"command", "verify"},
                {"file", file},
                {"ranking", ranking_json(r)},
                {"mode", mode_name},
                {"status", verdict.status == Popularity::Popular ? "popular"
                                                                 : "not-popular"},
                {"challengers_searched", verdict.challengers_searched}};
    if (verdict.witness) {
        report["witness"] = ranking_json(*verdict.witness);
        report["tally"] = tally_json(*verdict.certificate);
    }
    report["runtime_ms"] = timer.elapsed_ms();
    std::cout << report.dump(2) << '\n';
    return verdict.status == Popularity::Popular ? 0 : 1;
}

int cmd_kemeny(const std::string& file, const std::optional<std::string>& improve,
               long long budget, int cap) {
    Timer timer;
    const VotingInstance inst = load_instance(file);
    json report{{"command", "kemeny"}, {"file", file}};
    if (improve) {
        const Ranking start = parse_ranking_arg(*improve);
        json chain = json::array();
        chain.push_back(
            json{{"ranking", ranking_json(start)}, {"rank", kemeny_rank(inst, start)}});
        Ranking current = start;
        while (auto better = smaller_kemeny_rank(inst, current, budget)) {
            current = *better;
            chain.push_back(json{{"ranking", ranking_json(current)},
                                 {"rank", kemeny_rank(inst, current)}});
        }
        report["improvement_chain"] = chain;
        report["consensus"] = ranking_json(current);
        report["optimum"] = kemeny_rank(inst, current);
    } else {
        const KemenyResult result = kemeny_consensus(inst, budget, cap);
        report["optimum"] = result.optimum;
        json mins = json::array();
        for (const Ranking& r : result.minimizers) mins.push_back(ranking_json(r));
        report["minimizers"] = mins;
        report["truncated"] = result.truncated;
    }
    report["runtime_ms"] = timer.elapsed_ms();
    std::cout << report.dump(2) << '\n';
    return 0;
}

int cmd_majority(const std::string& file, const std::optional<std::string>& dot_out,
                 long long limit) {
    Timer timer;
    const VotingInstance inst = load_instance(file);
    const MajorityGraph g = build_majority_graph(inst);
    const std::vector<Ranking> sorts = topological_sorts(g, limit);
    json report{{"command", "majority"},
                {"file", file},
                {"acyclic", is_acyclic(g)},
                {"tournament", is_tournament(g)},
                {"arc_count", g.arcs().size()},
                {"topological_sorts", sorts.size()},
                {"topological_sorts_capped",
                 static_cast<long long>(sorts.size()) >= limit}};
    if (dot_out) {
        std::ofstream out(*dot_out);
        if (!out) throw InvalidInputError("cannot write DOT file: " + *dot_out);
        out << export_dot(g);
        report["dot_file"] = *dot_out;
    }
    report["runtime_ms"] = timer.elapsed_ms();
    std::cout << report.dump(2) << '\n';
    return 0;
}

int cmd_generate(const std::string& name, const std::string& out, int j, int n, int m,
                 std::uint64_t seed) {
    std::optional<VotingInstance> inst;
    if (name == "fig1") {
        inst = fig1_instance();
    } else if (name == "example1") {
        inst = example1_instance();
    } else if (name == "obs4") {
        inst = obs4_instance();
    } else if (name == "appendixB") {
        inst = appendixB_instance();
    } else if (name == "tightc") {
        inst = tight_c_instance(j).instance;
    } else if (name == "condorcet") {
        inst = extended_condorcet(n);
    } else if (name == "random") {
        inst = random_instance(n, m, Seed{seed});
    } else {
        throw InvalidInputError("unknown instance name: " + name);
    }
    save_instance(*inst, out);
    json report{{"command", "generate"},
                {"name", name},
                {"out", out},
                {"n", inst->n()},
                {"m", inst->m}};
    std::cout << report.dump(2) << '\n';
    return 0;
}

const char* acr_case_name(AcrCase c) {
    switch (c) {
        case AcrCase::AllPreferTopsort: return "all-prefer-topsort";
        case AcrCase::TwoPreferSwapProcedure: return "two-prefer-swap-procedure";
        case AcrCase::OnePrefersExhaustiveFallback:
            return "one-prefers-exhaustive-fallback";
        case AcrCase::NonePreferKemenyArgument: return "none-prefer-kemeny-argument";
        case AcrCase::NoSolution: return "no-solution";
    }
    return "?";
}

int cmd_acr3(const std::string& file, const std::string& ranking_arg,
             long long budget) {
    Timer timer;
    const VotingInstance inst = load_instance(file);
    const Ranking pi = parse_ranking_arg(ranking_arg);
    const AcrOutcome outcome = three_all_closer_ranking(inst, pi, budget);
    json report{{"command", "acr3"},
                {"file", file},
                {"ranking", ranking_json(pi)},
                {"case", acr_case_name(outcome.case_taken)}};
    if (outcome.distances) {
        report["d1"] = outcome.distances->d1;
        report["d2"] = outcome.distances->d2;
        report["d3"] = outcome.distances->d3;
    }
    report["result"] = outcome.result ? ranking_json(*outcome.result) : json("none");
    report["runtime_ms"] = timer.elapsed_ms();
    std::cout << report.dump(2) << '\n';
    return outcome.result ? 0 : 1;
}

int cmd_lift(const std::string& file, const std::string& pi_arg,
             const std::string& sigma1_arg, long long budget) {
    Timer timer;
    const VotingInstance inst = load_instance(file);
    const Ranking pi = parse_ranking_arg(pi_arg);
    const Ranking sigma1 = parse_ranking_arg(sigma1_arg);
    const Ranking sigma2 = lift_simple_witness_to_absolute(inst, pi, sigma1, budget);
    json report{{"command", "lift"},
                {"file", file},
                {"pi", ranking_json(pi)},
                {"sigma1", ranking_json(sigma1)},
                {"sigma2", ranking_json(sigma2)},
                {"tally", tally_json(compare(inst, sigma2, pi))},
                {"runtime_ms", timer.elapsed_ms()}};
    std::cout << report.dump(2) << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact popularity, majority-graph, and Kemeny analysis of voting instances"};
    app.require_subcommand(1);

    long long budget = kDefaultSearchBudget;
    int threads = 1;
    app.add_option("--threads", threads,
                   "Reserved; results are independent of the thread count");

    std::string file, ranking_arg, mode_name = "absolute";
    auto* verify = app.add_subcommand("verify", "Verify popularity of a ranking");
    verify->add_option("file", file, "Instance file")->required();
    verify->add_option("ranking", ranking_arg, "Ranking, e.g. [1,2,3],[4,5,6]")->required();
    verify->add_option("--mode", mode_name, "absolute or simple")
        ->check(CLI::IsMember({"absolute", "simple"}));
    verify->add_option("--budget", budget, "Max challengers to enumerate");

    std::optional<std::string> improve;
    int cap = kDefaultMinimizerCap;
    auto* kemeny = app.add_subcommand("kemeny", "Exact Kemeny consensus");
    kemeny->add_option("file", file)->required();
    kemeny->add_option("--improve", improve, "Start ranking for the improvement chain");
    kemeny->add_option("--budget", budget, "Max search-tree nodes");
    kemeny->add_option("--cap", cap, "Max minimizers to list");

    std::optional<std::string> dot_out;
    long long limit = 10'000;
    auto* majority = app.add_subcommand("majority", "Majority-graph analysis");
    majority->add_option("file", file)->required();
    majority->add_option("--dot", dot_out, "Write the graph as a DOT file");
    majority->add_option("--limit", limit, "Cap on enumerated topological sorts");

    std::string name, out_file;
    int gen_j = 1, gen_n = 3, gen_m = 3;
    std::uint64_t gen_seed = 0;
    auto* generate = app.add_subcommand("generate", "Write a named instance file");
    generate
        ->add_option("name", name,
                     "fig1|example1|obs4|appendixB|tightc|condorcet|random")
        ->required();
    generate->add_option("--out", out_file, "Output file")->required();
    generate->add_option("--j", gen_j, "Block parameter for tightc");
    generate->add_option("--n", gen_n, "Voters (condorcet, random)");
    generate->add_option("--m", gen_m, "Candidates (random)");
    generate->add_option("--seed", gen_seed, "Seed (random)");

    std::string pi_arg, sigma1_arg;
    auto* acr3 = app.add_subcommand("acr3", "3-voter all-closer-ranking search");
    acr3->add_option("file", file)->required();
    acr3->add_option("ranking", ranking_arg)->required();
    acr3->add_option("--budget", budget);

    auto* lift = app.add_subcommand("lift", "Lift a simple witness to an absolute one");
    lift->add_option("file", file)->required();
    lift->add_option("pi", pi_arg, "Incumbent ranking")->required();
    lift->add_option("sigma1", sigma1_arg, "Simple-sense witness")->required();
    lift->add_option("--budget", budget);

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) return cmd_verify(file, ranking_arg, mode_name, budget);
        if (kemeny->parsed()) return cmd_kemeny(file, improve, budget, cap);
        if (majority->parsed()) return cmd_majority(file, dot_out, limit);
        if (generate->parsed())
            return cmd_generate(name, out_file, gen_j, gen_n, gen_m, gen_seed);
        if (acr3->parsed()) return cmd_acr3(file, ranking_arg, budget);
        if (lift->parsed()) return cmd_lift(file, pi_arg, sigma1_arg, budget);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
