#include "poprank/majority.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace poprank {

MajorityGraph::MajorityGraph(int m, std::vector<std::vector<int>> support_counts)
    : m_(m), support_(std::move(support_counts)) {
    if (m_ < 1) throw InvalidInputError("majority graph needs at least one candidate");
    if (static_cast<int>(support_.size()) != m_ + 1) {
        throw InvalidInputError("support matrix has wrong dimensions");
    }
}

int MajorityGraph::support(int a, int b) const {
    if (a < 1 || a > m_ || b < 1 || b > m_ || a == b) {
        throw InvalidInputError("invalid candidate pair (" + std::to_string(a) +
                                "," + std::to_string(b) + ")");
    }
    return support_[a][b];
}

std::vector<std::pair<int, int>> MajorityGraph::arcs() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 1; a <= m_; ++a) {
        for (int b = 1; b <= m_; ++b) {
            if (a != b && has_arc(a, b)) out.emplace_back(a, b);
        }
    }
    return out;
}

MajorityGraph build_majority_graph(const VotingInstance& inst) {
    std::vector<std::vector<int>> support(inst.m + 1, std::vector<int>(inst.m + 1, 0));
    for (const Ranking& v : inst.voters) {
        for (int p = 1; p <= inst.m; ++p) {
            for (int q = p + 1; q <= inst.m; ++q) {
                support[v.at(p)][v.at(q)]++;
            }
        }
    }
    return MajorityGraph(inst.m, std::move(support));
}

bool is_acyclic(const MajorityGraph& g) {
    // Kahn's algorithm.
    const int m = g.m();
    std::vector<int> indegree(m + 1, 0);
    for (auto [a, b] : g.arcs()) indegree[b]++;
    std::vector<int> ready;
    for (int c = 1; c <= m; ++c) {
        if (indegree[c] == 0) ready.push_back(c);
    }
    int removed = 0;
    while (!ready.empty()) {
        const int c = ready.back();
        ready.pop_back();
        ++removed;
        for (int b = 1; b <= m; ++b) {
            if (b != c && g.has_arc(c, b) && --indegree[b] == 0) ready.push_back(b);
        }
    }
    return removed == m;
}

bool is_tournament(const MajorityGraph& g) {
    for (int a = 1; a <= g.m(); ++a) {
        for (int b = a + 1; b <= g.m(); ++b) {
            if (!g.has_arc(a, b) && !g.has_arc(b, a)) return false;
        }
    }
    return true;
}

bool is_topologically_sorted(const MajorityGraph& g, const Ranking& r) {
    if (r.size() != g.m()) {
        throw InvalidInputError("ranking does not match the graph's candidate set");
    }
    for (auto [a, b] : g.arcs()) {
        if (r.rank_of(a) > r.rank_of(b)) return false;
    }
    return true;
}

bool is_topologically_sorted(const VotingInstance& inst, const Ranking& r) {
    return is_topologically_sorted(build_majority_graph(inst), r);
}

namespace {

void enumerate_sorts(const MajorityGraph& g, std::vector<int>& indegree,
                     std::vector<bool>& used, std::vector<int>& prefix,
                     long long limit, std::vector<Ranking>& out) {
    const int m = g.m();
    if (static_cast<long long>(out.size()) >= limit) return;
    if (static_cast<int>(prefix.size()) == m) {
        out.emplace_back(prefix);
        return;
    }
    for (int c = 1; c <= m; ++c) {
        if (used[c] || indegree[c] != 0) continue;
        used[c] = true;
        prefix.push_back(c);
        for (int b = 1; b <= m; ++b) {
            if (b != c && !used[b] && g.has_arc(c, b)) indegree[b]--;
        }
        enumerate_sorts(g, indegree, used, prefix, limit, out);
        for (int b = 1; b <= m; ++b) {
            if (b != c && !used[b] && g.has_arc(c, b)) indegree[b]++;
        }
        prefix.pop_back();
        used[c] = false;
        if (static_cast<long long>(out.size()) >= limit) return;
    }
}

}  // namespace

std::vector<Ranking> topological_sorts(const MajorityGraph& g, long long limit) {
    const int m = g.m();
    std::vector<int> indegree(m + 1, 0);
    for (auto [a, b] : g.arcs()) indegree[b]++;
    std::vector<bool> used(m + 1, false);
    std::vector<int> prefix;
    prefix.reserve(m);
    std::vector<Ranking> out;
    enumerate_sorts(g, indegree, used, prefix, limit, out);
    return out;
}

std::vector<Ranking> topological_sorts(const VotingInstance& inst, long long limit) {
    return topological_sorts(build_majority_graph(inst), limit);
}

OrderedPartition preserved_partition(const VotingInstance& inst) {
    const int m = inst.m;
    OrderedPartition partition;
    int prev_cut = 0;
    std::vector<std::set<int>> tops(inst.n());
    for (int p = 1; p <= m; ++p) {
        for (int v = 0; v < inst.n(); ++v) {
            tops[v].insert(inst.voters[v].at(p));
        }
        const bool cut =
            p == m || std::all_of(tops.begin() + 1, tops.end(),
                                  [&](const std::set<int>& s) { return s == tops[0]; });
        if (cut) {
            std::vector<int> block;
            for (int q = prev_cut + 1; q <= p; ++q) {
                block.push_back(inst.voters[0].at(q));
            }
            std::sort(block.begin(), block.end());
            partition.blocks.push_back(std::move(block));
            prev_cut = p;
        }
    }
    return partition;
}

Rational c_sorted_level(const VotingInstance& inst, const Ranking& r) {
    if (inst.m < 2) {
        throw InvalidInputError("c-sortedness needs at least two candidates");
    }
    if (r.size() != inst.m) {
        throw InvalidInputError("ranking does not match the instance's candidate set");
    }
    const MajorityGraph g = build_majority_graph(inst);
    Rational level(1, 1);
    for (int p = 1; p <= inst.m; ++p) {
        for (int q = p + 1; q <= inst.m; ++q) {
            const Rational frac(g.support(r.at(p), r.at(q)), inst.n());
            if (frac < level) level = frac;
        }
    }
    return level;
}

std::string export_dot(const MajorityGraph& g) {
    std::ostringstream out;
    out << "digraph majority {\n";
    for (int c = 1; c <= g.m(); ++c) {
        out << "  " << c << ";\n";
    }
    for (auto [a, b] : g.arcs()) {
        out << "  " << a << " -> " << b << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace poprank
