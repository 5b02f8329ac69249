#include "poprank/types.hpp"

#include <numeric>
#include <sstream>

namespace poprank {

Ranking::Ranking(std::vector<int> order) : order_(std::move(order)) {
    const int m = static_cast<int>(order_.size());
    if (m == 0) {
        throw InvalidInputError("ranking must contain at least one candidate");
    }
    rank_.assign(m, 0);
    for (int p = 1; p <= m; ++p) {
        const int c = order_[p - 1];
        if (c < 1 || c > m) {
            throw InvalidInputError("candidate " + std::to_string(c) +
                                    " out of range 1.." + std::to_string(m));
        }
        if (rank_[c - 1] != 0) {
            throw InvalidInputError("candidate " + std::to_string(c) +
                                    " appears more than once");
        }
        rank_[c - 1] = p;
    }
}

int Ranking::at(int position) const {
    if (position < 1 || position > size()) {
        throw InvalidInputError("position " + std::to_string(position) +
                                " out of range");
    }
    return order_[position - 1];
}

int Ranking::rank_of(int candidate) const {
    if (!contains(candidate)) {
        throw InvalidInputError("candidate " + std::to_string(candidate) +
                                " out of range 1.." + std::to_string(size()));
    }
    return rank_[candidate - 1];
}

bool Ranking::prefers(int a, int b) const {
    if (a == b) {
        throw InvalidInputError("cannot compare candidate " + std::to_string(a) +
                                " with itself");
    }
    return rank_of(a) < rank_of(b);
}

std::string Ranking::to_string() const {
    std::ostringstream out;
    for (int p = 0; p < size(); ++p) {
        if (p > 0) out << ',';
        out << order_[p];
    }
    return out.str();
}

VotingInstance::VotingInstance(int candidate_count, std::vector<Ranking> voter_rankings)
    : m(candidate_count), voters(std::move(voter_rankings)) {
    if (voters.empty()) {
        throw InvalidInputError("a voting instance needs at least one voter");
    }
    for (const Ranking& r : voters) {
        if (r.size() != m) {
            throw InvalidInputError("voter ranking has " + std::to_string(r.size()) +
                                    " candidates, expected " + std::to_string(m));
        }
    }
}

namespace {
long long gcd_ll(long long a, long long b) {
    while (b != 0) {
        long long t = a % b;
        a = b;
        b = t;
    }
    return a < 0 ? -a : a;
}
}  // namespace

Rational::Rational(long long n, long long d) : num(n), den(d) {
    if (den == 0) throw InvalidInputError("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    if (num == 0) {
        den = 1;
    } else {
        const long long g = gcd_ll(num, den);
        num /= g;
        den /= g;
    }
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
    return num * o.den <=> o.num * den;
}

std::string Rational::to_string() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

}  // namespace poprank
