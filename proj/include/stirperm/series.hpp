#pragma once

// Truncated multivariate formal power series with exact integer coefficients,
// the continued-fraction recursion for height-bounded labeled paths under the
// commutative morphism (rise/level/fall letters at height j pick up a factor
// (j+1)*t times their type marker), and the word-level expansion used as the
// non-ambiguity oracle.

#include "stirperm/bijections.hpp"
#include "stirperm/core.hpp"
#include "stirperm/enumerate.hpp"
#include "stirperm/localtypes.hpp"

#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace stirperm {

/// Marker variables for context k: index 0 is z_0 (the unique zero-slot
/// marker); class m in 1..k+1 contributes C(k+1, m) variants in VariantMap
/// order. 2^{k+1} variables in total.
struct MarkerLayout {
    int k = 1;

    int count() const { return 1 << (k + 1); }

    int index(int m, int i) const {
        if (m == 0) {
            if (i != 1) throw std::out_of_range("marker class 0 has a single variant");
            return 0;
        }
        if (m < 0 || m > k + 1) throw std::out_of_range("marker class out of range");
        int off = 1;
        for (int c = 1; c < m; ++c) off += static_cast<int>(binom(k + 1, c));
        if (i < 1 || i > static_cast<int>(binom(k + 1, m)))
            throw std::out_of_range("marker variant out of range");
        return off + i - 1;
    }

    /// (class, variant) for a flat variable index.
    std::pair<int, int> decompose(int var) const {
        if (var == 0) return {0, 1};
        int off = 1;
        for (int m = 1; m <= k + 1; ++m) {
            const int width = static_cast<int>(binom(k + 1, m));
            if (var < off + width) return {m, var - off + 1};
            off += width;
        }
        throw std::out_of_range("marker variable out of range");
    }
};

/// Polynomial in t and the markers, truncated at a t-degree. The t-exponent
/// of every term equals its total marker degree (each path letter contributes
/// one t and one marker), so monomials store marker exponents only.
class TruncatedSeries {
  public:
    using Monomial = std::vector<std::uint8_t>;

    TruncatedSeries(int k, int max_deg) : layout_{k}, max_deg_(max_deg) {
        if (k < 1 || max_deg < 0) throw std::invalid_argument("TruncatedSeries: bad k or max_deg");
    }

    int k() const { return layout_.k; }
    int max_deg() const { return max_deg_; }
    const MarkerLayout& layout() const { return layout_; }
    const std::map<Monomial, BigCount>& terms() const { return terms_; }

    static int degree(const Monomial& m) {
        return std::accumulate(m.begin(), m.end(), 0, [](int a, std::uint8_t b) { return a + b; });
    }

    Monomial unit_monomial() const { return Monomial(static_cast<std::size_t>(layout_.count()), 0); }

    void add_term(const Monomial& m, const BigCount& c) {
        if (c == 0) return;
        if (degree(m) > max_deg_) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    TruncatedSeries& operator+=(const TruncatedSeries& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries r(a.k(), a.max_deg());
        Monomial prod(static_cast<std::size_t>(a.layout_.count()), 0);
        for (const auto& [ma, ca] : a.terms_) {
            const int da = degree(ma);
            for (const auto& [mb, cb] : b.terms_) {
                if (da + degree(mb) > a.max_deg_) continue;
                for (std::size_t v = 0; v < prod.size(); ++v)
                    prod[v] = static_cast<std::uint8_t>(ma[v] + mb[v]);
                r.add_term(prod, ca * cb);
            }
        }
        return r;
    }

    static TruncatedSeries one(int k, int max_deg) {
        TruncatedSeries r(k, max_deg);
        r.add_term(r.unit_monomial(), 1);
        return r;
    }

    /// (1 - x)^{-1} = sum of x^l; requires val(x) >= 1 in t.
    TruncatedSeries quasi_inverse() const {
        if (terms_.count(unit_monomial()))
            throw std::invalid_argument("quasi_inverse: nonzero constant term");
        TruncatedSeries r = one(k(), max_deg_);
        for (int it = 0; it < max_deg_; ++it) {
            TruncatedSeries next = (*this) * r;
            next.add_term(next.unit_monomial(), 1);
            r = std::move(next);
        }
        return r;
    }

    /// Exact coefficient for a marker exponent vector (t-degree is implied by
    /// the marker degree). Exponents beyond the truncation are an error.
    BigCount coefficient(const std::vector<int>& marker_exps) const {
        if (static_cast<int>(marker_exps.size()) != layout_.count())
            throw std::invalid_argument("coefficient: exponent vector has wrong arity");
        Monomial m;
        int deg = 0;
        for (int e : marker_exps) {
            if (e < 0) throw std::invalid_argument("coefficient: negative exponent");
            deg += e;
            m.push_back(static_cast<std::uint8_t>(e));
        }
        if (deg > max_deg_) throw std::out_of_range("coefficient: exponent beyond truncation");
        auto it = terms_.find(m);
        return it == terms_.end() ? BigCount(0) : it->second;
    }

    /// Coefficients of t^0..t^max_deg with every marker set to one.
    std::vector<BigCount> all_ones() const {
        std::vector<BigCount> out(static_cast<std::size_t>(max_deg_) + 1, 0);
        for (const auto& [m, c] : terms_) out[static_cast<std::size_t>(degree(m))] += c;
        return out;
    }

    /// The homogeneous t^deg part.
    TruncatedSeries homogeneous(int deg) const {
        TruncatedSeries r(k(), max_deg_);
        for (const auto& [m, c] : terms_)
            if (degree(m) == deg) r.add_term(m, c);
        return r;
    }

    /// Multiplies by t*z_0 (the unmarked final leaf), raising the truncation
    /// order by one.
    TruncatedSeries mark_last_leaf() const {
        TruncatedSeries r(k(), max_deg_ + 1);
        for (const auto& [m, c] : terms_) {
            Monomial shifted = m;
            ++shifted[0];
            r.add_term(shifted, c);
        }
        return r;
    }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.layout_.k == b.layout_.k && a.max_deg_ == b.max_deg_ && a.terms_ == b.terms_;
    }

  private:
    MarkerLayout layout_;
    int max_deg_;
    std::map<Monomial, BigCount> terms_;
};

namespace detail {

struct CfContext {
    int k;
    int max_deg;
    MarkerLayout layout;
    std::map<std::pair<int, int>, TruncatedSeries> memo;

    TruncatedSeries letter_sum(int level, int marker_class) const {
        // (level+1) * t * sum over the variants of the class
        TruncatedSeries s(k, max_deg);
        const int variants = marker_class == 0 ? 1 : static_cast<int>(binom(k + 1, marker_class));
        for (int v = 1; v <= variants; ++v) {
            TruncatedSeries::Monomial m(static_cast<std::size_t>(layout.count()), 0);
            ++m[static_cast<std::size_t>(layout.index(marker_class, v))];
            s.add_term(m, level + 1);
        }
        return s;
    }

    // S_i^[h]: commutative image of the characteristic series of labeled
    // paths running between levels i and i+h.
    const TruncatedSeries& level_series(int i, int h) {
        const auto key = std::make_pair(i, h);
        if (auto it = memo.find(key); it != memo.end()) return it->second;

        TruncatedSeries bracket = letter_sum(i, 1);  // level steps c_i
        for (int l = 1; l <= std::min(k, h); ++l) {
            TruncatedSeries term = letter_sum(i, l + 1);  // rise a_{i,l}
            for (int m = 1; m <= l; ++m) {
                term = term * level_series(i + m, h - m);
                term = term * letter_sum(i + m, 0);  // fall b_{i+m}
            }
            bracket += term;
        }
        return memo.emplace(key, bracket.quasi_inverse()).first->second;
    }
};

}  // namespace detail

/// Commutative image of the height-h continued fraction at level 0, truncated
/// at t^max_deg. The default h = k*max_deg is sufficient: omitted paths reach
/// height above h and are longer than max_deg.
inline TruncatedSeries cf_series(int k, int max_deg, int h = -1) {
    if (k < 1 || max_deg < 0) throw std::invalid_argument("cf_series: bad k or max_deg");
    if (h < 0) h = k * max_deg;
    detail::CfContext ctx{k, max_deg, MarkerLayout{k}, {}};
    return ctx.level_series(0, h);
}

/// Oracle: classify every k-Stirling permutation of size N directly and sum
/// the marker monomials (one t and one marker per letter).
inline TruncatedSeries brute_force_type_gf(int N, int k) {
    TruncatedSeries r(k, N);
    const MarkerLayout layout{k};
    const VariantMap vm(k);
    for_each_stirling(N, k, [&](const KStirlingPermutation& s) {
        TruncatedSeries::Monomial m(static_cast<std::size_t>(layout.count()), 0);
        for (const auto& bits : local_types(s)) {
            const int ones = static_cast<int>(std::count(bits.begin(), bits.end(), '1'));
            const int idx = ones == 0 ? 0 : layout.index(ones, vm.variant_index(bits));
            ++m[static_cast<std::size_t>(idx)];
        }
        r.add_term(m, 1);
    });
    return r;
}

// ---------------------------------------------------------------------------
// Word-level expansion (the non-ambiguity oracle)
// ---------------------------------------------------------------------------

/// A path letter together with the height it starts from.
struct LabeledLetter {
    PathStep::Kind kind = PathStep::Kind::Fall;
    int rise = 0;  // l >= 1 for Rise
    int height = 0;

    friend auto operator<=>(const LabeledLetter&, const LabeledLetter&) = default;
};

using LabeledWord = std::vector<LabeledLetter>;

struct AmbiguityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

using WordSet = std::set<LabeledWord>;

struct WordContext {
    int k;
    int max_len;
    std::map<std::pair<int, int>, WordSet> memo;

    static WordSet singleton(LabeledLetter l) { return WordSet{LabeledWord{l}}; }

    WordSet cat(const WordSet& a, const WordSet& b) const {
        WordSet r;
        for (const auto& u : a)
            for (const auto& v : b) {
                if (u.size() + v.size() > static_cast<std::size_t>(max_len)) continue;
                LabeledWord w = u;
                w.insert(w.end(), v.begin(), v.end());
                if (!r.insert(std::move(w)).second)
                    throw AmbiguityError("duplicate production in catenation");
            }
        return r;
    }

    static void merge_disjoint(WordSet& into, const WordSet& from) {
        for (const auto& w : from)
            if (!into.insert(w).second) throw AmbiguityError("duplicate production in union");
    }

    WordSet star(const WordSet& e) const {
        WordSet r{LabeledWord{}};
        WordSet level{LabeledWord{}};
        while (true) {
            level = cat(e, level);
            if (level.empty()) break;
            for (const auto& w : level)
                if (!r.insert(w).second) throw AmbiguityError("duplicate production in star");
        }
        return r;
    }

    const WordSet& words(int i, int h) {
        const auto key = std::make_pair(i, h);
        if (auto it = memo.find(key); it != memo.end()) return it->second;

        WordSet e = singleton({PathStep::Kind::Level, 0, i});
        for (int l = 1; l <= std::min(k, h); ++l) {
            // a rise of l is followed by excursions at levels i+l down to i+1,
            // each closed by the fall back to the level below
            WordSet term = singleton({PathStep::Kind::Rise, l, i});
            for (int m = l; m >= 1; --m) {
                term = cat(term, words(i + m, h - m));
                term = cat(term, singleton({PathStep::Kind::Fall, 0, i + m}));
            }
            merge_disjoint(e, term);
        }
        return memo.emplace(key, star(e)).first->second;
    }
};

}  // namespace detail

/// Materializes all labeled words of length <= max_len produced by the
/// height-h recursion at level 0. Throws AmbiguityError if any word is
/// produced twice.
inline std::vector<LabeledWord> expand_words(int k, int h, int max_len) {
    if (k < 1 || h < 0 || max_len < 0) throw std::invalid_argument("expand_words: bad arguments");
    detail::WordContext ctx{k, max_len, {}};
    const auto& s = ctx.words(0, h);
    return {s.begin(), s.end()};
}

/// Commutative image of a set of labeled words (summed), for consistency
/// checks against cf_series. Unrefined letters expand to the sum of their
/// variants.
inline TruncatedSeries mu_image(int k, const std::vector<LabeledWord>& words, int max_deg) {
    detail::CfContext ctx{k, max_deg, MarkerLayout{k}, {}};
    TruncatedSeries total(k, max_deg);
    for (const auto& w : words) {
        TruncatedSeries prod = TruncatedSeries::one(k, max_deg);
        for (const auto& l : w) {
            int marker_class = 0;
            switch (l.kind) {
                case PathStep::Kind::Rise: marker_class = l.rise + 1; break;
                case PathStep::Kind::Level: marker_class = 1; break;
                case PathStep::Kind::Fall: marker_class = 0; break;
            }
            prod = prod * ctx.letter_sum(l.height, marker_class);
        }
        total += prod;
    }
    return total;
}

}  // namespace stirperm
