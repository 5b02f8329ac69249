#pragma once

#include <cstdint>

#include "poprank/types.hpp"

namespace poprank {

/// Seed for the reproducible random generator. Identical seeds reproduce
/// identical instances.
struct Seed {
    std::uint64_t value = 0;
};

/// The 6-voter, 9-candidate instance with an absolutely but not simply
/// popular ranking.
VotingInstance fig1_instance();

/// 4 voters, 6 candidates; voter 4's ranking is a Kemeny consensus yet is
/// beaten by an absolute majority.
VotingInstance example1_instance();

/// 4 voters, 10 candidates; a non-topologically-sorted ranking beats the
/// topologically sorted one.
VotingInstance obs4_instance();

/// 8 voters, 9 candidates; the unique absolutely popular ranking is voter
/// 7's (= voter 8's), and it is not simply popular.
VotingInstance appendixB_instance();

struct TightCInstance {
    VotingInstance instance;
    Ranking pi;     // all blocks increasing; (3j-1)/(4j)-sorted, not popular
    Ranking sigma;  // all blocks decreasing; preferred by 2j+1 of the 4j voters
};

/// The 4j-voter, (4j+2)-candidate family showing that 3/4-sortedness is the
/// tight threshold: 2j-1 voters rank every pair-block increasing, and 2j+1
/// voters have a sliding window of j+1 decreasing blocks (window of voter i
/// covers block positions {i..i+j} mod (2j+1)).
TightCInstance tight_c_instance(int j);

/// n voters over n candidates, voter i ranking i, i+1, ..., n, 1, ..., i-1.
/// Every pair (1,2),(2,3),...,(n,1) is agreed by exactly n-1 voters.
VotingInstance extended_condorcet(int n);

/// For an extended_condorcet(n) instance: pi with candidates a and b
/// transposed, where (a,b) is the first cycle pair pi disagrees with.
/// Exactly n-1 voters prefer the result to pi, one voter prefers pi.
Ranking condorcet_beater(const VotingInstance& inst, const Ranking& pi);

/// n independent uniform permutations. Generator: std::mt19937_64 seeded
/// with `seed`, Fisher-Yates with modulo reduction; deterministic and
/// byte-stable across platforms and releases.
VotingInstance random_instance(int n, int m, Seed seed);

}  // namespace poprank
