#pragma once

// The three statistics tied together by the equidistribution identity:
// PORT outdegree profile, left-right decomposition of ternary trees, and the
// recursive block statistic of 2-Stirling permutations. The identity is a
// statement about distributions, so it is verified as multiset equality over
// the exhaustively enumerated classes.

#include "stirperm/core.hpp"
#include "stirperm/enumerate.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace stirperm {

struct StatProfile {
    enum class Kind { Outdeg, LeftRight, Block };

    Kind kind = Kind::Outdeg;
    int n = 0;
    std::map<int, long long> counts;  // j -> count
    long long aux = 0;  // LeftRight only: nodes whose single child is a leaf on a center edge

    long long at(int j) const {
        auto it = counts.find(j);
        return it == counts.end() ? 0 : it->second;
    }
};

inline StatProfile outdegree_profile(const PortTree& t) {
    if (auto rep = validate_port(t); !rep)
        throw std::invalid_argument("outdegree_profile: invalid tree: " + rep.reason);
    StatProfile p{StatProfile::Kind::Outdeg, t.size(), {}, 0};
    for (const auto& kids : t.children) ++p.counts[static_cast<int>(kids.size())];
    return p;
}

/// Deletes every center edge of a ternary tree and records the multiset of
/// left-right component sizes; aux counts nodes of outdegree one whose single
/// child hangs on the center edge and is a leaf.
inline StatProfile lr_profile(const KaryIncreasingTree& t) {
    if (t.k != 2) throw std::invalid_argument("lr_profile: defined for ternary trees (k = 2)");
    if (auto rep = validate_kary_tree(t); !rep)
        throw std::invalid_argument("lr_profile: invalid tree: " + rep.reason);
    const int n = t.size();
    StatProfile p{StatProfile::Kind::LeftRight, n, {}, 0};
    std::vector<bool> is_component_root(static_cast<std::size_t>(n) + 1, false);
    if (n > 0) is_component_root[1] = true;
    for (int v = 1; v <= n; ++v)
        if (const int c = t.slots[v - 1][1]; c != 0) is_component_root[static_cast<std::size_t>(c)] = true;

    std::function<int(int)> lr_size = [&](int v) -> int {
        int sz = 1;
        if (const int l = t.slots[v - 1][0]; l != 0) sz += lr_size(l);
        if (const int r = t.slots[v - 1][2]; r != 0) sz += lr_size(r);
        return sz;
    };
    for (int v = 1; v <= n; ++v)
        if (is_component_root[static_cast<std::size_t>(v)]) ++p.counts[lr_size(v)];

    for (int v = 1; v <= n; ++v) {
        const auto& row = t.slots[v - 1];
        const int center = row[1];
        if (row[0] == 0 && row[2] == 0 && center != 0) {
            const auto& child = t.slots[center - 1];
            if (child[0] == 0 && child[1] == 0 && child[2] == 0) ++p.aux;
        }
    }
    return p;
}

namespace detail {

/// Top-level maximal blocks of a 2-Stirling word: greedy left scan, each
/// block runs from a letter's first to its last occurrence.
inline std::vector<std::pair<std::size_t, std::size_t>> block_spans(const std::vector<int>& w) {
    std::vector<std::pair<std::size_t, std::size_t>> spans;
    std::size_t p = 0;
    while (p < w.size()) {
        std::size_t q = p;
        for (std::size_t r = p + 1; r < w.size(); ++r)
            if (w[r] == w[p]) q = r;
        spans.emplace_back(p, q);
        p = q + 1;
    }
    return spans;
}

inline std::vector<int> relabel(const std::vector<int>& w) {
    std::vector<int> sorted(w);
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> out;
    out.reserve(w.size());
    for (int v : w)
        out.push_back(static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin()) + 1);
    return out;
}

inline void block_recurse(const std::vector<int>& w, std::map<int, long long>& counts) {
    if (w.empty()) return;
    const auto spans = block_spans(w);
    ++counts[static_cast<int>(spans.size())];
    for (auto [p, q] : spans) {
        if (q <= p + 1) continue;  // empty interior
        std::vector<int> interior(w.begin() + static_cast<std::ptrdiff_t>(p) + 1,
                                  w.begin() + static_cast<std::ptrdiff_t>(q));
        block_recurse(relabel(interior), counts);
    }
}

}  // namespace detail

/// Recursive block statistic of a 2-Stirling permutation: maps j to the
/// number of (sub-)permutations in the recursion with exactly j blocks.
inline StatProfile block_profile(const KStirlingPermutation& s) {
    if (s.k != 2) throw std::invalid_argument("block_profile: defined for 2-Stirling permutations");
    if (auto rep = validate_stirling(s); !rep)
        throw std::invalid_argument("block_profile: invalid permutation: " + rep.reason);
    StatProfile p{StatProfile::Kind::Block, s.size(), {}, 0};
    detail::block_recurse(s.word, p.counts);
    return p;
}

struct EquidistributionReport {
    bool pass = true;
    int n = 0;
    int j_min = 3;
    std::string detail;  // first mismatch, empty when pass
    long long objects_checked = 0;
};

namespace detail {

// multiset of per-object count values, per j
using PerJ = std::map<int, std::map<long long, long long>>;

inline void record(PerJ& per_j, const StatProfile& p, int shift, int j_min, int j_max) {
    for (int j = j_min; j <= j_max; ++j) per_j[j][p.at(j + shift)] += 1;
}

}  // namespace detail

/// Exhaustive three-way comparison: block counts over 2-Stirling permutations
/// of size n, left-right component counts over ternary trees of size n, and
/// outdegree counts over PORTs of size n+1. Component sizes are node counts;
/// a component with j nodes (j-1 edges) pairs with outdegree j, so the
/// distributions line up at the same index j. The outdegree-2 correspondence
/// is the j = 2 instance: deg-2 nodes match two-node components (a single
/// left or right edge).
inline EquidistributionReport equidistribution_report(int n, int j_min = 3) {
    if (n < 1) throw std::invalid_argument("equidistribution_report: n must be >= 1");
    EquidistributionReport rep;
    rep.n = n;
    rep.j_min = j_min;
    const int j_max = n + 1;  // outdegrees in a PORT of size n+1 never exceed n

    detail::PerJ blocks, lr, outdeg;
    std::map<long long, long long> pair_lr, deg2_port;

    for_each_stirling(n, 2, [&](const KStirlingPermutation& s) {
        detail::record(blocks, block_profile(s), 0, j_min, j_max);
        ++rep.objects_checked;
    });
    for_each_kary_tree(n, 2, [&](const KaryIncreasingTree& t) {
        const auto p = lr_profile(t);
        detail::record(lr, p, 0, j_min, j_max);
        pair_lr[p.at(2)] += 1;
        ++rep.objects_checked;
    });
    for_each_port(n + 1, [&](const PortTree& t) {
        const auto p = outdegree_profile(t);
        detail::record(outdeg, p, 0, j_min, j_max);
        deg2_port[p.at(2)] += 1;
        ++rep.objects_checked;
    });

    for (int j = j_min; j <= j_max; ++j) {
        if (blocks[j] != outdeg[j] || lr[j] != outdeg[j]) {
            rep.pass = false;
            std::ostringstream os;
            os << "distribution mismatch at j=" << j;
            rep.detail = os.str();
            return rep;
        }
    }
    if (pair_lr != deg2_port) {
        rep.pass = false;
        rep.detail = "outdegree-2 auxiliary correspondence mismatch";
    }
    return rep;
}

}  // namespace stirperm
