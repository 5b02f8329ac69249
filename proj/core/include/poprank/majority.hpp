#pragma once

#include <string>
#include <vector>

#include "poprank/types.hpp"

namespace poprank {

/// Directed graph on candidates with an arc a -> b iff strictly more voters
/// prefer a to b. Exact ties produce no arc, so even n may yield an
/// incomplete graph.
class MajorityGraph {
public:
    MajorityGraph(int m, std::vector<std::vector<int>> support_counts);

    int m() const { return m_; }

    /// Number of voters preferring a to b.
    int support(int a, int b) const;

    bool has_arc(int a, int b) const { return support(a, b) > support(b, a); }

    /// All arcs, ascending by (source, target).
    std::vector<std::pair<int, int>> arcs() const;

private:
    int m_;
    std::vector<std::vector<int>> support_;  // (m+1) x (m+1), 1-based
};

/// Ordered partition C1,...,Ck of the candidates; blocks are listed in order
/// and each block's candidates are kept ascending.
struct OrderedPartition {
    std::vector<std::vector<int>> blocks;

    int block_count() const { return static_cast<int>(blocks.size()); }
};

MajorityGraph build_majority_graph(const VotingInstance& inst);

bool is_acyclic(const MajorityGraph& g);
bool is_tournament(const MajorityGraph& g);

/// True iff r respects every arc of the instance's majority graph.
bool is_topologically_sorted(const VotingInstance& inst, const Ranking& r);
bool is_topologically_sorted(const MajorityGraph& g, const Ranking& r);

/// All topologically sorted rankings in lexicographic order, up to `limit`.
/// Empty iff the majority graph is cyclic.
std::vector<Ranking> topological_sorts(const VotingInstance& inst,
                                       long long limit = 10'000);
std::vector<Ranking> topological_sorts(const MajorityGraph& g,
                                       long long limit = 10'000);

/// The finest ordered partition preserved by every voter: a cut after
/// position p exists iff all voters have the same set of top-p candidates.
OrderedPartition preserved_partition(const VotingInstance& inst);

/// min over pairs (a before b in r) of |V(a,b)| / n, as an exact rational.
/// r is c-sorted for exactly the values c <= this level.
Rational c_sorted_level(const VotingInstance& inst, const Ranking& r);

/// DOT digraph, nodes and edges in ascending order (bit-stable output).
std::string export_dot(const MajorityGraph& g);

}  // namespace poprank
