#pragma once

// The codecs: depth-first contour code between k-Stirling permutations and
// (k+1)-ary increasing trees; labeled-lattice-path diagrams for (k+1)-ary
// trees (refined alphabet) and for plane-oriented recursive trees.

#include "stirperm/core.hpp"
#include "stirperm/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace stirperm {

inline long long binom(int n, int r) {
    if (r < 0 || r > n) return 0;
    long long v = 1;
    for (int i = 1; i <= r; ++i) v = v * (n - r + i) / i;
    return v;
}

// ---------------------------------------------------------------------------
// Gessel contour codec
// ---------------------------------------------------------------------------

/// Depth-first contour code: code(v) = code(c_1) v code(c_2) v ... v code(c_{k+1}).
inline KStirlingPermutation tree_to_perm(const KaryIncreasingTree& t) {
    if (auto rep = validate_kary_tree(t); !rep)
        throw std::invalid_argument("tree_to_perm: invalid tree: " + rep.reason);
    KStirlingPermutation out{t.k, {}};
    std::function<void(int)> walk = [&](int v) {
        for (int h = 0; h <= t.k; ++h) {
            if (const int c = t.slots[v - 1][h]; c != 0) walk(c);
            if (h < t.k) out.word.push_back(v);
        }
    };
    if (t.size() > 0) walk(1);
    return out;
}

/// Inverse contour code: split at the k occurrences of the minimum letter;
/// part h becomes the subtree in slot h.
inline KaryIncreasingTree perm_to_tree(const KStirlingPermutation& s) {
    if (auto rep = validate_stirling(s); !rep)
        throw std::invalid_argument("perm_to_tree: invalid permutation: " + rep.reason);
    const int k = s.k;
    KaryIncreasingTree t{k, std::vector<std::vector<int>>(static_cast<std::size_t>(s.size()),
                                                          std::vector<int>(k + 1, 0))};
    std::function<void(std::span<const int>)> build = [&](std::span<const int> w) {
        if (w.empty()) return;
        const int root = *std::min_element(w.begin(), w.end());
        std::size_t part_begin = 0;
        int h = 0;
        for (std::size_t p = 0; p <= w.size(); ++p) {
            if (p < w.size() && w[p] != root) continue;
            std::span<const int> part = w.subspan(part_begin, p - part_begin);
            if (!part.empty()) {
                const int child = *std::min_element(part.begin(), part.end());
                t.slots[root - 1][h] = child;
                build(part);
            }
            part_begin = p + 1;
            ++h;
        }
    };
    build(std::span<const int>(s.word));
    return t;
}

// ---------------------------------------------------------------------------
// Variant numbering for slot subsets
// ---------------------------------------------------------------------------

/// Fixed bijection between bit strings of length k+1 with a given number of
/// ones and variant indices: strings ordered by decreasing binary value
/// (110, 101, 011 for k=2, two ones).
class VariantMap {
  public:
    explicit VariantMap(int k) : k_(k), by_ones_(static_cast<std::size_t>(k) + 2) {
        for (int code = (1 << (k + 1)) - 1; code >= 1; --code) {
            std::string bits;
            for (int h = k; h >= 0; --h) bits.push_back(((code >> h) & 1) ? '1' : '0');
            const int ones = std::popcount(static_cast<unsigned>(code));
            index_[bits] = static_cast<int>(by_ones_[ones].size()) + 1;
            by_ones_[ones].push_back(std::move(bits));
        }
    }

    int k() const { return k_; }

    /// Bit strings with exactly `ones` ones, 1 <= ones <= k+1.
    const std::vector<std::string>& variants(int ones) const {
        return by_ones_.at(static_cast<std::size_t>(ones));
    }

    /// 1-based index of `bits` within its ones class.
    int variant_index(const std::string& bits) const { return index_.at(bits); }

  private:
    int k_;
    std::vector<std::vector<std::string>> by_ones_;
    std::map<std::string, int> index_;
};

// ---------------------------------------------------------------------------
// Path diagrams
// ---------------------------------------------------------------------------

struct PathStep {
    enum class Kind { Rise, Fall, Level };
    Kind kind = Kind::Fall;
    int rise = 0;     // l >= 1 for Rise
    int variant = 0;  // 1-based refined variant for arity-(k+1) Rise/Level; 0 for PORT kinds

    int height_delta() const { return kind == Kind::Rise ? rise : kind == Kind::Fall ? -1 : 0; }

    friend auto operator<=>(const PathStep&, const PathStep&) = default;
};

/// Labeled lattice-path word plus possibility sequence. k >= 1 selects the
/// refined arity-(k+1) alphabet; k == 0 marks the PORT alphabet (unbounded
/// rises, no variants).
struct PathDiagram {
    int k = 0;
    std::vector<PathStep> word;
    std::vector<int> possibility;

    bool is_port() const { return k == 0; }

    friend auto operator<=>(const PathDiagram&, const PathDiagram&) = default;
};

struct PathDiagramError : std::runtime_error {
    int step;  // 1-based offending step, 0 for structural errors
    PathDiagramError(std::string msg, int step_) : std::runtime_error(std::move(msg)), step(step_) {}
};

namespace detail {

// Trees under construction carry three slot states: -1 blocked (declared
// vacant in the final tree), 0 open vacancy, >0 occupied.
struct KaryBuilder {
    int k;
    std::vector<std::vector<int>> slots;

    std::vector<std::pair<int, int>> vacancies() const {
        std::vector<std::pair<int, int>> out;
        if (slots.empty()) {
            out.emplace_back(0, 0);  // the root position
            return out;
        }
        std::function<void(int)> walk = [&](int v) {
            for (int h = 0; h <= k; ++h) {
                const int c = slots[v - 1][h];
                if (c == 0)
                    out.emplace_back(v, h);
                else if (c > 0)
                    walk(c);
            }
        };
        walk(1);
        return out;
    }

    void place(int node, std::pair<int, int> at, const std::string& bits) {
        auto [parent, slot] = at;
        if (parent != 0) slots[parent - 1][slot] = node;
        std::vector<int> row(static_cast<std::size_t>(k) + 1, -1);
        for (int h = 0; h <= k; ++h)
            if (bits[static_cast<std::size_t>(h)] == '1') row[static_cast<std::size_t>(h)] = 0;
        slots.push_back(std::move(row));
    }

    KaryIncreasingTree finish() const {
        KaryIncreasingTree t{k, slots};
        for (auto& row : t.slots)
            for (int& c : row)
                if (c < 0) c = 0;
        return t;
    }
};

struct PortBuilder {
    std::vector<std::vector<int>> children;  // 0 entries are open vacancies

    std::vector<std::pair<int, int>> vacancies() const {
        std::vector<std::pair<int, int>> out;
        if (children.empty()) {
            out.emplace_back(0, 0);
            return out;
        }
        std::function<void(int)> walk = [&](int v) {
            const auto& kids = children[static_cast<std::size_t>(v - 1)];
            for (int g = 0; g < static_cast<int>(kids.size()); ++g) {
                if (kids[static_cast<std::size_t>(g)] == 0)
                    out.emplace_back(v, g);
                else
                    walk(kids[static_cast<std::size_t>(g)]);
            }
        };
        walk(1);
        return out;
    }

    void place(int node, std::pair<int, int> at, int outdeg) {
        auto [parent, gap] = at;
        if (parent != 0) children[static_cast<std::size_t>(parent - 1)][static_cast<std::size_t>(gap)] = node;
        children.emplace_back(static_cast<std::size_t>(outdeg), 0);
    }
};

inline std::string kary_step_bits(const PathStep& step, const VariantMap& vm) {
    const int k = vm.k();
    switch (step.kind) {
        case PathStep::Kind::Fall:
            return std::string(static_cast<std::size_t>(k) + 1, '0');
        case PathStep::Kind::Level: {
            const auto& vs = vm.variants(1);
            if (step.variant < 1 || step.variant > static_cast<int>(vs.size()))
                throw PathDiagramError("level variant out of range", 0);
            return vs[static_cast<std::size_t>(step.variant - 1)];
        }
        case PathStep::Kind::Rise: {
            if (step.rise < 1 || step.rise > k) throw PathDiagramError("rise out of range", 0);
            const auto& vs = vm.variants(step.rise + 1);
            if (step.variant < 1 || step.variant > static_cast<int>(vs.size()))
                throw PathDiagramError("rise variant out of range", 0);
            return vs[static_cast<std::size_t>(step.variant - 1)];
        }
    }
    throw PathDiagramError("bad step", 0);
}

}  // namespace detail

/// Decodes a refined path diagram of length n into a (k+1)-ary increasing
/// tree of size n+1: step j places node j, declared outdegree l+1 for
/// Rise(l, i) / 1 for Level(i) / 0 for Fall, at the (1+s_j)-th open vacancy
/// in planar left-to-right order; node n+1 fills the last vacancy as a leaf.
inline KaryIncreasingTree pathdiagram_to_tree(const PathDiagram& d) {
    if (d.k < 1) throw std::invalid_argument("pathdiagram_to_tree: refined diagram required");
    if (d.word.size() != d.possibility.size())
        throw PathDiagramError("word and possibility sequence lengths differ", 0);
    const VariantMap vm(d.k);
    detail::KaryBuilder b{d.k, {}};
    const int n = static_cast<int>(d.word.size());
    for (int j = 1; j <= n; ++j) {
        const auto& step = d.word[static_cast<std::size_t>(j - 1)];
        std::string bits;
        try {
            bits = detail::kary_step_bits(step, vm);
        } catch (const PathDiagramError& e) {
            throw PathDiagramError(e.what(), j);
        }
        const auto vac = b.vacancies();
        const int s = d.possibility[static_cast<std::size_t>(j - 1)];
        if (s < 0 || s >= static_cast<int>(vac.size()))
            throw PathDiagramError("possibility entry out of bounds", j);
        b.place(j, vac[static_cast<std::size_t>(s)], bits);
        const int open = static_cast<int>(vac.size()) - 1 + (step.height_delta() + 1);
        if (open < 1) throw PathDiagramError("path drops below zero", j);
    }
    const auto vac = b.vacancies();
    if (vac.size() != 1) throw PathDiagramError("path does not end at height zero", n);
    b.place(n + 1, vac.front(), std::string(static_cast<std::size_t>(d.k) + 1, '0'));
    return b.finish();
}

/// Exact inverse of pathdiagram_to_tree; defined for every valid tree of
/// size >= 1 (the largest label is always a leaf).
inline PathDiagram tree_to_pathdiagram(const KaryIncreasingTree& t) {
    if (auto rep = validate_kary_tree(t); !rep)
        throw std::invalid_argument("tree_to_pathdiagram: invalid tree: " + rep.reason);
    if (t.size() < 1) throw std::invalid_argument("tree_to_pathdiagram: empty tree");
    const int n = t.size() - 1;
    const VariantMap vm(t.k);

    // parent slot of each node in the final tree
    std::vector<std::pair<int, int>> parent_of(static_cast<std::size_t>(t.size()) + 1, {0, 0});
    for (int v = 1; v <= t.size(); ++v)
        for (int h = 0; h <= t.k; ++h)
            if (const int c = t.slots[v - 1][h]; c != 0) parent_of[static_cast<std::size_t>(c)] = {v, h};

    PathDiagram d{t.k, {}, {}};
    detail::KaryBuilder b{t.k, {}};
    for (int j = 1; j <= n; ++j) {
        std::string bits;
        int occupied = 0;
        for (int h = 0; h <= t.k; ++h) {
            const bool occ = t.slots[j - 1][h] != 0;
            bits.push_back(occ ? '1' : '0');
            occupied += occ;
        }
        PathStep step;
        if (occupied == 0)
            step = {PathStep::Kind::Fall, 0, 0};
        else if (occupied == 1)
            step = {PathStep::Kind::Level, 0, vm.variant_index(bits)};
        else
            step = {PathStep::Kind::Rise, occupied - 1, vm.variant_index(bits)};

        const auto vac = b.vacancies();
        const auto it = std::find(vac.begin(), vac.end(), parent_of[static_cast<std::size_t>(j)]);
        if (it == vac.end()) throw PathDiagramError("node position is not an open vacancy", j);
        d.word.push_back(step);
        d.possibility.push_back(static_cast<int>(it - vac.begin()));
        b.place(j, *it, bits);
    }
    return d;
}

/// PORT analogue: Rise(l) declares outdegree l+1, Level outdegree 1, Fall a
/// leaf; a vacancy is a reserved child position, and at every step the number
/// of open vacancies equals height + 1.
inline PortTree port_pathdiagram_to_tree(const PathDiagram& d) {
    if (!d.is_port()) throw std::invalid_argument("port_pathdiagram_to_tree: PORT diagram required");
    if (d.word.size() != d.possibility.size())
        throw PathDiagramError("word and possibility sequence lengths differ", 0);
    detail::PortBuilder b;
    const int n = static_cast<int>(d.word.size());
    for (int j = 1; j <= n; ++j) {
        const auto& step = d.word[static_cast<std::size_t>(j - 1)];
        if (step.variant != 0) throw PathDiagramError("PORT letters carry no variant", j);
        int outdeg = 0;
        switch (step.kind) {
            case PathStep::Kind::Rise:
                if (step.rise < 1) throw PathDiagramError("rise out of range", j);
                outdeg = step.rise + 1;
                break;
            case PathStep::Kind::Level:
                outdeg = 1;
                break;
            case PathStep::Kind::Fall:
                outdeg = 0;
                break;
        }
        const auto vac = b.vacancies();
        const int s = d.possibility[static_cast<std::size_t>(j - 1)];
        if (s < 0 || s >= static_cast<int>(vac.size()))
            throw PathDiagramError("possibility entry out of bounds", j);
        b.place(j, vac[static_cast<std::size_t>(s)], outdeg);
        if (static_cast<int>(vac.size()) - 1 + outdeg < 1)
            throw PathDiagramError("path drops below zero", j);
    }
    const auto vac = b.vacancies();
    if (vac.size() != 1) throw PathDiagramError("path does not end at height zero", n);
    b.place(n + 1, vac.front(), 0);
    return PortTree{b.children};
}

inline PathDiagram port_tree_to_pathdiagram(const PortTree& t) {
    if (auto rep = validate_port(t); !rep)
        throw std::invalid_argument("port_tree_to_pathdiagram: invalid tree: " + rep.reason);
    const int n = t.size() - 1;
    std::vector<std::pair<int, int>> parent_of(static_cast<std::size_t>(t.size()) + 1, {0, 0});
    for (int v = 1; v <= t.size(); ++v) {
        const auto& kids = t.children[static_cast<std::size_t>(v - 1)];
        for (int g = 0; g < static_cast<int>(kids.size()); ++g)
            parent_of[static_cast<std::size_t>(kids[static_cast<std::size_t>(g)])] = {v, g};
    }
    PathDiagram d{0, {}, {}};
    detail::PortBuilder b;
    for (int j = 1; j <= n; ++j) {
        const int outdeg = static_cast<int>(t.children[static_cast<std::size_t>(j - 1)].size());
        PathStep step;
        if (outdeg == 0)
            step = {PathStep::Kind::Fall, 0, 0};
        else if (outdeg == 1)
            step = {PathStep::Kind::Level, 0, 0};
        else
            step = {PathStep::Kind::Rise, outdeg - 1, 0};
        const auto vac = b.vacancies();
        const auto it = std::find(vac.begin(), vac.end(), parent_of[static_cast<std::size_t>(j)]);
        if (it == vac.end()) throw PathDiagramError("node position is not an open vacancy", j);
        d.word.push_back(step);
        d.possibility.push_back(static_cast<int>(it - vac.begin()));
        b.place(j, *it, outdeg);
    }
    if (n >= 0 && static_cast<int>(t.children[static_cast<std::size_t>(t.size() - 1)].size()) != 0)
        throw PathDiagramError("largest label must be a leaf", n);
    return d;
}

// ---------------------------------------------------------------------------
// Exhaustive diagram generation (verification support)
// ---------------------------------------------------------------------------

/// All valid refined diagrams of the given length for arity k+1, heights and
/// possibility bounds enforced.
inline void for_each_pathdiagram(int k, int length,
                                 const std::function<void(const PathDiagram&)>& fn) {
    if (k < 1) throw std::invalid_argument("for_each_pathdiagram: k must be >= 1");
    PathDiagram d{k, {}, {}};
    std::function<void(int, int)> rec = [&](int j, int height) {
        if (j > length) {
            if (height == 0) fn(d);
            return;
        }
        const int remaining = length - j;
        auto try_step = [&](PathStep step) {
            const int nh = height + step.height_delta();
            if (nh < 0 || nh > remaining) return;  // cannot return to zero in time
            d.word.push_back(step);
            for (int s = 0; s <= height; ++s) {
                d.possibility.push_back(s);
                rec(j + 1, nh);
                d.possibility.pop_back();
            }
            d.word.pop_back();
        };
        for (int i = 1; i <= k + 1; ++i) try_step({PathStep::Kind::Level, 0, i});
        for (int l = 1; l <= k; ++l)
            for (int i = 1; i <= static_cast<int>(binom(k + 1, l + 1)); ++i)
                try_step({PathStep::Kind::Rise, l, i});
        try_step({PathStep::Kind::Fall, 0, 0});
    };
    rec(1, 0);
}

/// All valid PORT diagrams of the given length.
inline void for_each_port_pathdiagram(int length,
                                      const std::function<void(const PathDiagram&)>& fn) {
    PathDiagram d{0, {}, {}};
    std::function<void(int, int)> rec = [&](int j, int height) {
        if (j > length) {
            if (height == 0) fn(d);
            return;
        }
        const int remaining = length - j;
        auto try_step = [&](PathStep step) {
            const int nh = height + step.height_delta();
            if (nh < 0 || nh > remaining) return;
            d.word.push_back(step);
            for (int s = 0; s <= height; ++s) {
                d.possibility.push_back(s);
                rec(j + 1, nh);
                d.possibility.pop_back();
            }
            d.word.pop_back();
        };
        try_step({PathStep::Kind::Level, 0, 0});
        for (int l = 1; l <= remaining - height; ++l) try_step({PathStep::Kind::Rise, l, 0});
        try_step({PathStep::Kind::Fall, 0, 0});
    };
    rec(1, 0);
}

}  // namespace stirperm
