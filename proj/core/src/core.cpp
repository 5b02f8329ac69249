#include "poprank/core.hpp"

#include <algorithm>

namespace poprank {

namespace {

void require_same_candidates(const Ranking& a, const Ranking& b) {
    if (a.size() != b.size()) {
        throw InvalidInputError("rankings are over different candidate sets (" +
                                std::to_string(a.size()) + " vs " +
                                std::to_string(b.size()) + " candidates)");
    }
}

// Inversions in `seq` via merge sort.
int count_inversions(std::vector<int>& seq) {
    const int n = static_cast<int>(seq.size());
    std::vector<int> buf(n);
    int inversions = 0;
    for (int width = 1; width < n; width *= 2) {
        for (int lo = 0; lo < n; lo += 2 * width) {
            const int mid = std::min(lo + width, n);
            const int hi = std::min(lo + 2 * width, n);
            int i = lo, j = mid, k = lo;
            while (i < mid && j < hi) {
                if (seq[i] <= seq[j]) {
                    buf[k++] = seq[i++];
                } else {
                    inversions += mid - i;
                    buf[k++] = seq[j++];
                }
            }
            while (i < mid) buf[k++] = seq[i++];
            while (j < hi) buf[k++] = seq[j++];
            std::copy(buf.begin() + lo, buf.begin() + hi, seq.begin() + lo);
        }
    }
    return inversions;
}

}  // namespace

int kendall_distance(const Ranking& a, const Ranking& b) {
    require_same_candidates(a, b);
    std::vector<int> seq(a.size());
    for (int p = 1; p <= a.size(); ++p) {
        seq[p - 1] = b.rank_of(a.at(p));
    }
    return count_inversions(seq);
}

bool prefers(const Ranking& voter, int a, int b) {
    return voter.prefers(a, b);
}

DisagreementSet disagreement_set(const Ranking& a, const Ranking& b) {
    require_same_candidates(a, b);
    DisagreementSet out;
    const int m = a.size();
    for (int x = 1; x <= m; ++x) {
        for (int y = x + 1; y <= m; ++y) {
            if (a.prefers(x, y) != b.prefers(x, y)) {
                out.pairs.insert({x, y});
            }
        }
    }
    return out;
}

std::vector<Swap> bubble_swap_path(const Ranking& from, const Ranking& to) {
    require_same_candidates(from, to);
    const int m = from.size();
    std::vector<int> cur = from.order();
    std::vector<Swap> path;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int p = 1; p < m; ++p) {
            if (to.rank_of(cur[p - 1]) > to.rank_of(cur[p])) {
                path.push_back({p, cur[p - 1], cur[p]});
                std::swap(cur[p - 1], cur[p]);
                changed = true;
            }
        }
    }
    return path;
}

bool is_good_swap(const Swap& s, const Ranking& voter) {
    return voter.prefers(s.second, s.first);
}

Ranking apply_swap(const Ranking& r, const Swap& s) {
    if (s.position < 1 || s.position >= r.size()) {
        throw InvalidInputError("swap position " + std::to_string(s.position) +
                                " out of range");
    }
    if (r.at(s.position) != s.first || r.at(s.position + 1) != s.second) {
        throw InvalidInputError("stale swap: entries at position " +
                                std::to_string(s.position) + " are (" +
                                std::to_string(r.at(s.position)) + "," +
                                std::to_string(r.at(s.position + 1)) +
                                "), swap expects (" + std::to_string(s.first) +
                                "," + std::to_string(s.second) + ")");
    }
    std::vector<int> order = r.order();
    std::swap(order[s.position - 1], order[s.position]);
    return Ranking(std::move(order));
}

}  // namespace poprank
