#pragma once

// Exhaustive generation and seeded uniform sampling via the insertion /
// evolution processes. Enumeration order is part of the public contract:
// objects of size m are derived from objects of size m-1 in their order,
// expanding insertion positions in ascending order, depth-first (so streams
// are ordered lexicographically by insertion-position history).

#include "stirperm/core.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <utility>

namespace stirperm {

namespace detail {

/// Vacant slots of a (k+1)-ary tree in depth-first, left-to-right order.
inline void collect_vacant_slots(const KaryIncreasingTree& t, int v,
                                 std::vector<std::pair<int, int>>& out) {
    for (int h = 0; h <= t.k; ++h) {
        const int c = t.slots[v - 1][h];
        if (c == 0)
            out.emplace_back(v, h);
        else
            collect_vacant_slots(t, c, out);
    }
}

}  // namespace detail

inline std::vector<std::pair<int, int>> vacant_slots(const KaryIncreasingTree& t) {
    std::vector<std::pair<int, int>> out;
    if (t.size() > 0) detail::collect_vacant_slots(t, 1, out);
    return out;
}

/// PORT insertion positions (node, child-gap) in DFS-preorder node order,
/// gap index ascending; a tree of size n has 2n-1 of them.
inline std::vector<std::pair<int, int>> port_positions(const PortTree& t) {
    std::vector<std::pair<int, int>> out;
    std::function<void(int)> walk = [&](int v) {
        const int d = outdegree(t, v);
        for (int g = 0; g <= d; ++g) out.emplace_back(v, g);
        for (int c : t.children[v - 1]) walk(c);
    };
    if (t.size() > 0) walk(1);
    return out;
}

/// Calls fn once per k-Stirling permutation of size n, in insertion order.
inline void for_each_stirling(int n, int k,
                              const std::function<void(const KStirlingPermutation&)>& fn) {
    if (k < 1) throw std::invalid_argument("for_each_stirling: k must be >= 1");
    if (n < 0) throw std::invalid_argument("for_each_stirling: n must be >= 0");
    KStirlingPermutation cur{k, {}};
    std::function<void(int)> rec = [&](int m) {
        if (m > n) {
            fn(cur);
            return;
        }
        // insert the block m^k at every gap, ascending
        for (std::size_t g = 0; g + 0 <= cur.word.size(); ++g) {
            cur.word.insert(cur.word.begin() + static_cast<std::ptrdiff_t>(g), k, m);
            rec(m + 1);
            cur.word.erase(cur.word.begin() + static_cast<std::ptrdiff_t>(g),
                           cur.word.begin() + static_cast<std::ptrdiff_t>(g + k));
        }
    };
    rec(1);
}

/// Calls fn once per (k+1)-ary increasing tree of size n, in insertion order
/// (vacant slots ordered depth-first, left-to-right).
inline void for_each_kary_tree(int n, int k,
                               const std::function<void(const KaryIncreasingTree&)>& fn) {
    if (k < 1) throw std::invalid_argument("for_each_kary_tree: k must be >= 1");
    if (n < 0) throw std::invalid_argument("for_each_kary_tree: n must be >= 0");
    KaryIncreasingTree cur{k, {}};
    std::function<void(int)> rec = [&](int m) {
        if (m > n) {
            fn(cur);
            return;
        }
        if (cur.size() == 0) {
            cur.slots.emplace_back(k + 1, 0);
            rec(m + 1);
            cur.slots.pop_back();
            return;
        }
        for (auto [v, h] : vacant_slots(cur)) {
            cur.slots[v - 1][h] = m;
            cur.slots.emplace_back(k + 1, 0);
            rec(m + 1);
            cur.slots.pop_back();
            cur.slots[v - 1][h] = 0;
        }
    };
    rec(1);
}

/// Calls fn once per plane-oriented recursive tree of size n.
inline void for_each_port(int n, const std::function<void(const PortTree&)>& fn) {
    if (n < 1) throw std::domain_error("for_each_port: undefined for n < 1");
    PortTree cur;
    std::function<void(int)> rec = [&](int m) {
        if (m > n) {
            fn(cur);
            return;
        }
        if (cur.size() == 0) {
            cur.children.emplace_back();
            rec(m + 1);
            cur.children.pop_back();
            return;
        }
        for (auto [v, g] : port_positions(cur)) {
            cur.children[v - 1].insert(cur.children[v - 1].begin() + g, m);
            cur.children.emplace_back();
            rec(m + 1);
            cur.children.pop_back();
            cur.children[v - 1].erase(cur.children[v - 1].begin() + g);
        }
    };
    rec(1);
}

inline std::vector<KStirlingPermutation> enum_stirling(int n, int k) {
    std::vector<KStirlingPermutation> out;
    for_each_stirling(n, k, [&](const KStirlingPermutation& s) { out.push_back(s); });
    return out;
}

inline std::vector<KaryIncreasingTree> enum_kary_trees(int n, int k) {
    std::vector<KaryIncreasingTree> out;
    for_each_kary_tree(n, k, [&](const KaryIncreasingTree& t) { out.push_back(t); });
    return out;
}

inline std::vector<PortTree> enum_ports(int n) {
    std::vector<PortTree> out;
    for_each_port(n, [&](const PortTree& t) { out.push_back(t); });
    return out;
}

/// Seeded deterministic generator: std::mt19937_64 (standardized output
/// stream) with rejection sampling, so identical seed means identical object
/// on every platform.
class EvolutionRng {
  public:
    explicit EvolutionRng(std::uint64_t seed) : gen_(seed) {}

    /// Uniform draw from {0, ..., bound-1}, unbiased.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = bound * (UINT64_MAX / bound);
        std::uint64_t x;
        do {
            x = gen_();
        } while (x >= limit);
        return x % bound;
    }

  private:
    std::mt19937_64 gen_;
};

inline KStirlingPermutation random_stirling(int n, int k, std::uint64_t seed) {
    if (k < 1 || n < 0) throw std::invalid_argument("random_stirling: bad n or k");
    EvolutionRng rng(seed);
    KStirlingPermutation s{k, {}};
    for (int m = 1; m <= n; ++m) {
        const auto g = static_cast<std::ptrdiff_t>(rng.below(s.word.size() + 1));
        s.word.insert(s.word.begin() + g, k, m);
    }
    return s;
}

inline KaryIncreasingTree random_kary_tree(int n, int k, std::uint64_t seed) {
    if (k < 1 || n < 0) throw std::invalid_argument("random_kary_tree: bad n or k");
    EvolutionRng rng(seed);
    KaryIncreasingTree t{k, {}};
    for (int m = 1; m <= n; ++m) {
        if (t.size() == 0) {
            t.slots.emplace_back(k + 1, 0);
            continue;
        }
        const auto free = vacant_slots(t);
        const auto [v, h] = free[rng.below(free.size())];
        t.slots[v - 1][h] = m;
        t.slots.emplace_back(k + 1, 0);
    }
    return t;
}

inline PortTree random_port(int n, std::uint64_t seed) {
    if (n < 1) throw std::domain_error("random_port: undefined for n < 1");
    EvolutionRng rng(seed);
    PortTree t;
    for (int m = 1; m <= n; ++m) {
        if (t.size() == 0) {
            t.children.emplace_back();
            continue;
        }
        const auto pos = port_positions(t);
        const auto [v, g] = pos[rng.below(pos.size())];
        auto& kids = t.children[v - 1];
        kids.insert(kids.begin() + g, m);
        t.children.emplace_back();
    }
    return t;
}

}  // namespace stirperm
