#pragma once

// Domain types for k-Stirling permutations, (k+1)-ary increasing trees and
// plane-oriented recursive trees (PORTs), together with validity checking
// and exact counting. All counting is exact integer arithmetic.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace stirperm {

using BigCount = boost::multiprecision::cpp_int;

/// Word over {1..n} with every letter repeated k times; letters strictly
/// between the first and last occurrence of i are >= i.
struct KStirlingPermutation {
    int k = 1;
    std::vector<int> word;

    int size() const { return k > 0 ? static_cast<int>(word.size()) / k : 0; }

    friend bool operator==(const KStirlingPermutation& a, const KStirlingPermutation& b) {
        return a.k == b.k && a.word == b.word;
    }
    friend auto operator<=>(const KStirlingPermutation& a, const KStirlingPermutation& b) = default;
};

/// Rooted tree where every node has k+1 ordered child slots and labels
/// increase along root paths. slots[v-1][h] is the label occupying slot h of
/// node v, or 0 when the slot is vacant (an "external node"). Node 1 is the
/// root; the empty tree has no nodes.
struct KaryIncreasingTree {
    int k = 1;
    std::vector<std::vector<int>> slots;

    int size() const { return static_cast<int>(slots.size()); }

    friend bool operator==(const KaryIncreasingTree& a, const KaryIncreasingTree& b) {
        return a.k == b.k && a.slots == b.slots;
    }
    friend auto operator<=>(const KaryIncreasingTree& a, const KaryIncreasingTree& b) = default;
};

/// Plane increasing tree with unbounded ordered outdegree. children[v-1] is
/// the ordered child list of node v.
struct PortTree {
    std::vector<std::vector<int>> children;

    int size() const { return static_cast<int>(children.size()); }

    friend bool operator==(const PortTree& a, const PortTree& b) { return a.children == b.children; }
    friend auto operator<=>(const PortTree& a, const PortTree& b) = default;
};

/// Bit string of length k+1; '0' = vacant / non-descending context,
/// '1' = occupied / strict context.
using LocalTypeString = std::string;

/// Structured validity outcome. Invalid input is a report, not a fault.
struct ValidityReport {
    bool valid = true;
    std::string reason;        // empty when valid
    int letter = 0;            // offending letter, 0 when not applicable
    std::ptrdiff_t position = -1;  // 0-based index of offending entry, -1 when n/a

    explicit operator bool() const { return valid; }
};

inline ValidityReport validity_failure(std::string reason, int letter = 0, std::ptrdiff_t pos = -1) {
    return ValidityReport{false, std::move(reason), letter, pos};
}

/// Checks the k-Stirling invariants. Reports the smallest violating letter,
/// then the smallest violating position.
inline ValidityReport validate_stirling(std::span<const int> word, int k) {
    if (k < 1) return validity_failure("k must be >= 1");
    if (word.size() % static_cast<std::size_t>(k) != 0)
        return validity_failure("word length not divisible by k");
    const int n = static_cast<int>(word.size()) / k;

    std::vector<int> mult(n + 1, 0);
    for (std::size_t p = 0; p < word.size(); ++p) {
        const int v = word[p];
        if (v < 1 || v > n)
            return validity_failure("letter outside 1..n", v, static_cast<std::ptrdiff_t>(p));
        ++mult[v];
    }
    for (int i = 1; i <= n; ++i)
        if (mult[i] != k)
            return validity_failure("letter does not occur exactly k times", i);

    // Betweenness: all letters strictly between the first and last occurrence
    // of i are >= i.
    for (int i = 1; i <= n; ++i) {
        std::size_t first = word.size(), last = 0;
        for (std::size_t p = 0; p < word.size(); ++p)
            if (word[p] == i) {
                if (first == word.size()) first = p;
                last = p;
            }
        for (std::size_t p = first + 1; p < last; ++p)
            if (word[p] < i)
                return validity_failure("letter below i between occurrences of i", i,
                                        static_cast<std::ptrdiff_t>(p));
    }
    return {};
}

inline ValidityReport validate_stirling(const KStirlingPermutation& s) {
    return validate_stirling(std::span<const int>(s.word), s.k);
}

/// Validates labels-increase-along-paths, single-parent and root invariants.
inline ValidityReport validate_kary_tree(const KaryIncreasingTree& t) {
    if (t.k < 1) return validity_failure("k must be >= 1");
    const int n = t.size();
    if (n == 0) return {};
    std::vector<int> parent(n + 1, 0);
    for (int v = 1; v <= n; ++v) {
        if (static_cast<int>(t.slots[v - 1].size()) != t.k + 1)
            return validity_failure("node does not have k+1 slots", v);
        for (int c : t.slots[v - 1]) {
            if (c == 0) continue;
            if (c < 1 || c > n) return validity_failure("child label outside 1..n", v);
            if (c <= v) return validity_failure("labels must increase along root paths", c);
            if (parent[c] != 0) return validity_failure("node occupies two parent slots", c);
            parent[c] = v;
        }
    }
    for (int v = 2; v <= n; ++v)
        if (parent[v] == 0) return validity_failure("node unreachable from root", v);
    if (parent[1] != 0) return validity_failure("root must be node 1", 1);
    return {};
}

inline ValidityReport validate_port(const PortTree& t) {
    const int n = t.size();
    if (n == 0) return validity_failure("PORT of size 0 is undefined");
    std::vector<int> parent(n + 1, 0);
    for (int v = 1; v <= n; ++v)
        for (int c : t.children[v - 1]) {
            if (c < 1 || c > n) return validity_failure("child label outside 1..n", v);
            if (c <= v) return validity_failure("labels must increase along root paths", c);
            if (parent[c] != 0) return validity_failure("node has two parents", c);
            parent[c] = v;
        }
    for (int v = 2; v <= n; ++v)
        if (parent[v] == 0) return validity_failure("node unreachable from root", v);
    return {};
}

/// Q_n = prod_{i=1}^{n-1} (k*i + 1); empty product for n <= 1.
inline BigCount count_stirling(int n, int k) {
    if (k < 1) throw std::invalid_argument("count_stirling: k must be >= 1");
    if (n < 0) throw std::invalid_argument("count_stirling: n must be >= 0");
    BigCount r = 1;
    for (int i = 1; i <= n - 1; ++i) r *= k * i + 1;
    return r;
}

/// T_n = prod_{l=1}^{n} (k*(l-1) + 1), equal to count_stirling(n, k).
inline BigCount count_kary_trees(int n, int k) { return count_stirling(n, k); }

/// (2n-3)!! with T_1 = 1; undefined for n = 0.
inline BigCount count_port(int n) {
    if (n < 1) throw std::domain_error("count_port: undefined for n < 1");
    BigCount r = 1;
    for (int l = 1; l <= n - 1; ++l) r *= 2 * l - 1;
    return r;
}

/// Number of vacant slots (external nodes) of a (k+1)-ary tree; k*n+1 for
/// every valid tree of size n >= 1.
inline int vacant_slot_count(const KaryIncreasingTree& t) {
    int c = 0;
    for (const auto& row : t.slots)
        for (int s : row)
            if (s == 0) ++c;
    return c;
}

inline int outdegree(const PortTree& t, int v) {
    return static_cast<int>(t.children[v - 1].size());
}

}  // namespace stirperm
