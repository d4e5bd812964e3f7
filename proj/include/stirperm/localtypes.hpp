#pragma once

// Local types of permutation entries (with -inf boundaries) and
// node types of (k+1)-ary tree nodes (slot occupancy). Under the depth-first
// contour bijection the two coincide entrywise.

#include "stirperm/core.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace stirperm {

/// L_i for i = 1..n. Bit 1: 0 iff the letter before the first occurrence of i
/// is smaller (the -inf boundary counts as smaller). Middle bit h (2<=h<=k):
/// 0 iff occurrences h-1 and h of i are adjacent. Bit k+1: 0 iff the letter
/// after the last occurrence of i is smaller (or the boundary).
inline std::vector<LocalTypeString> local_types(const KStirlingPermutation& s) {
    if (auto rep = validate_stirling(s); !rep)
        throw std::invalid_argument("local_types: invalid permutation: " + rep.reason);
    const int n = s.size();
    const int k = s.k;
    std::vector<std::vector<int>> occ(n + 1);  // 1-based positions of each letter
    for (int p = 0; p < static_cast<int>(s.word.size()); ++p) occ[s.word[p]].push_back(p + 1);

    // boundary sentinel smaller than every label
    auto at = [&](int j) { return (j >= 1 && j <= static_cast<int>(s.word.size())) ? s.word[j - 1] : 0; };

    std::vector<LocalTypeString> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        const auto& j = occ[i];
        LocalTypeString bits;
        bits.reserve(static_cast<std::size_t>(k) + 1);
        bits.push_back(at(j.front() - 1) < i ? '0' : '1');
        for (int h = 2; h <= k; ++h) bits.push_back(at(j[h - 1] - 1) == i ? '0' : '1');
        bits.push_back(i > at(j.back() + 1) ? '0' : '1');
        out.push_back(std::move(bits));
    }
    return out;
}

/// G_i for i = 1..n: bit h is '1' iff slot h of node i is occupied.
inline std::vector<LocalTypeString> node_types(const KaryIncreasingTree& t) {
    if (auto rep = validate_kary_tree(t); !rep)
        throw std::invalid_argument("node_types: invalid tree: " + rep.reason);
    std::vector<LocalTypeString> out;
    out.reserve(t.slots.size());
    for (const auto& row : t.slots) {
        LocalTypeString bits;
        for (int c : row) bits.push_back(c == 0 ? '0' : '1');
        out.push_back(std::move(bits));
    }
    return out;
}

/// Classical names for the k=1 types.
inline std::string classic_name(const LocalTypeString& type, int k = 1) {
    if (k != 1 || type.size() != 2)
        throw std::invalid_argument("classic_name: defined for k = 1 only");
    if (type == "00") return "peak";
    if (type == "11") return "valley";
    if (type == "01") return "double rise";
    if (type == "10") return "double fall";
    throw std::invalid_argument("classic_name: not a bit string");
}

struct TypeHistogram {
    int k = 1;
    std::map<LocalTypeString, long long> counts;

    long long total() const {
        long long t = 0;
        for (const auto& [_, c] : counts) t += c;
        return t;
    }
};

inline TypeHistogram type_histogram(const KStirlingPermutation& s) {
    TypeHistogram h{s.k, {}};
    for (const auto& t : local_types(s)) ++h.counts[t];
    return h;
}

inline TypeHistogram type_histogram(const KaryIncreasingTree& t) {
    TypeHistogram h{t.k, {}};
    for (const auto& g : node_types(t)) ++h.counts[g];
    return h;
}

}  // namespace stirperm
