#pragma once

#include <optional>
#include <vector>

#include "poprank/majority.hpp"
#include "poprank/types.hpp"

namespace poprank {

enum class Mode { Absolute, Simple };

/// Per-voter vote split between two rankings. The three index sets (1-based
/// voter indices, ascending) partition {1..n}.
struct ComparisonTally {
    std::vector<int> prefer_left;
    std::vector<int> prefer_right;
    std::vector<int> abstain;
};

enum class Popularity { Popular, NotPopular };

struct PopularityVerdict {
    Popularity status = Popularity::Popular;
    Mode mode = Mode::Absolute;
    std::optional<Ranking> witness;           // present iff NotPopular
    std::optional<ComparisonTally> certificate;
    long long challengers_searched = 0;
};

constexpr long long kDefaultSearchBudget = 10'000'000;

/// Classifies every voter by the sign of K(right, pi_v) - K(left, pi_v).
ComparisonTally compare(const VotingInstance& inst, const Ranking& left,
                        const Ranking& right);

/// Absolute: the challenger is preferred by more than n/2 of all voters.
/// Simple: strictly more voters prefer the challenger than the incumbent,
/// with at least one challenger-preferrer (an all-abstain vote never wins).
bool is_more_popular(const VotingInstance& inst, const Ranking& challenger,
                     const Ranking& incumbent, Mode mode);

/// Exhaustive popularity check against all rankings preserving the instance's
/// finest preserved partition; this suffices because any defeat can be
/// mapped to a block-preserving defeat. The witness, if any, is the
/// lexicographically smallest one. Throws ResourceLimitError if the
/// block-preserving space exceeds `budget`.
PopularityVerdict verify_popular(const VotingInstance& inst, const Ranking& r,
                                 Mode mode, long long budget = kDefaultSearchBudget);

/// Lexicographically smallest popular ranking, or nullopt. Only topologically
/// sorted rankings can be popular, so those are the candidates checked.
std::optional<Ranking> find_popular(const VotingInstance& inst, Mode mode,
                                    long long budget = kDefaultSearchBudget);

/// Given sigma1 more popular than pi in the simple sense, produces a ranking
/// more popular than pi in the absolute sense:
///   (i)   pi not topologically sorted: a verified topologically sorted
///         ranking, falling back to a witness search if none verifies;
///   (ii)  no abstainers: sigma1 itself;
///   (iii) otherwise: sigma1 with one adjacent pair (a*,b*) swapped, where at
///         least half of the abstainers prefer b* to a*. Requires the
///         abstainers' majority graph to be acyclic.
/// The result is verified by compare before returning.
Ranking lift_simple_witness_to_absolute(const VotingInstance& inst,
                                        const Ranking& pi, const Ranking& sigma1,
                                        long long budget = kDefaultSearchBudget);

enum class ImprovementThreshold {
    ExactlyOne,
    AtLeastOne,
    ExactlyTwo,
    AtLeastTwo,
    AllThree,
};

/// For n = 3: smallest ranking zeta such that no voter prefers pi to zeta and
/// the number of voters strictly preferring zeta to pi meets the threshold.
/// Enumerates all m! rankings (exact thresholds are not preserved by block
/// pruning).
std::optional<Ranking> constrained_improvement_search(
    const VotingInstance& inst, const Ranking& pi, ImprovementThreshold threshold,
    long long budget = kDefaultSearchBudget);

/// Enumerates the rankings preserving an ordered partition in lexicographic
/// order. Used by the exhaustive popularity searches.
class BlockPreservingEnumerator {
public:
    explicit BlockPreservingEnumerator(const OrderedPartition& partition);

    /// Product of the block-size factorials; may overflow-saturate at
    /// LLONG_MAX for absurd inputs.
    long long space_size() const { return space_size_; }

    const Ranking& current() const { return *current_; }

    /// Advances to the next ranking; false once exhausted.
    bool advance();

    void reset();

private:
    void rebuild();

    std::vector<std::vector<int>> blocks_;
    long long space_size_ = 1;
    std::optional<Ranking> current_;
};

}  // namespace poprank
