#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace poprank {

// Malformed values: non-permutations, mismatched candidate sets, parse errors.
class InvalidInputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A documented operation precondition does not hold for this input.
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The requested search space exceeds the caller-supplied budget.
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A condition the theory guarantees failed; signals corrupted input or a bug.
class InvariantViolationError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A strict total order of the candidates 1..m, most preferred first.
class Ranking {
public:
    explicit Ranking(std::vector<int> order);

    int size() const { return static_cast<int>(order_.size()); }

    /// Candidate at 1-based position p.
    int at(int position) const;

    /// 1-based position of a candidate.
    int rank_of(int candidate) const;

    bool contains(int candidate) const {
        return candidate >= 1 && candidate <= size();
    }

    /// True iff a is ranked above b. Throws InvalidInputError if a == b or
    /// either candidate is out of range.
    bool prefers(int a, int b) const;

    const std::vector<int>& order() const { return order_; }

    std::string to_string() const;

    bool operator==(const Ranking& other) const { return order_ == other.order_; }
    auto operator<=>(const Ranking& other) const { return order_ <=> other.order_; }

private:
    std::vector<int> order_;   // order_[p-1] = candidate at position p
    std::vector<int> rank_;    // rank_[c-1]  = position of candidate c
};

/// Candidate count plus one ranking per voter.
struct VotingInstance {
    int m = 0;
    std::vector<Ranking> voters;

    VotingInstance(int candidate_count, std::vector<Ranking> voter_rankings);

    int n() const { return static_cast<int>(voters.size()); }
    const Ranking& voter(int v) const { return voters.at(v - 1); }  // 1-based
};

/// Exchange of the entries at positions (position, position + 1),
/// turning (first, second) into (second, first).
struct Swap {
    int position = 0;  // 1-based, 1 <= position <= m-1
    int first = 0;     // entry at `position` before the swap
    int second = 0;    // entry at `position + 1` before the swap

    bool operator==(const Swap&) const = default;
};

/// Exact rational, kept reduced with a positive denominator.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d);

    bool operator==(const Rational&) const = default;
    std::strong_ordering operator<=>(const Rational& o) const;

    std::string to_string() const;
};

}  // namespace poprank
