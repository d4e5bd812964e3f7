#pragma once

// Canonical text formats. Every format/parse pair is a round-trip identity
// and formatted strings compare equal iff the objects do. Malformed input
// raises ParseError with line/column; invariant violations are delegated to
// the validators and rejected.

#include "stirperm/bijections.hpp"
#include "stirperm/core.hpp"
#include "stirperm/localtypes.hpp"
#include "stirperm/series.hpp"
#include "stirperm/stats.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace stirperm {

struct ParseError : std::runtime_error {
    int line;
    int column;
    ParseError(const std::string& msg, int line_, int column_)
        : std::runtime_error(msg + " at line " + std::to_string(line_) + ", column " +
                             std::to_string(column_)),
          line(line_),
          column(column_) {}
};

namespace detail {

class Scanner {
  public:
    explicit Scanner(std::string_view text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
    }

    bool at_end() {
        skip_ws();
        return pos_ >= text_.size();
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    char take() {
        if (pos_ >= text_.size()) fail("unexpected end of input");
        const char c = text_[pos_];
        advance();
        return c;
    }

    void expect(char c) {
        skip_ws();
        if (peek() != c) fail(std::string("expected '") + c + "'");
        advance();
    }

    bool accept(char c) {
        skip_ws();
        if (peek() != c) return false;
        advance();
        return true;
    }

    int integer() {
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer");
        long long v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            if (v > 1'000'000'000) fail("integer too large");
            advance();
        }
        return static_cast<int>(v);
    }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, col_); }

  private:
    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

}  // namespace detail

// --- k-Stirling permutations: whitespace-separated decimals --------------

inline std::string format(const KStirlingPermutation& s) {
    std::ostringstream os;
    for (std::size_t i = 0; i < s.word.size(); ++i) {
        if (i) os << ' ';
        os << s.word[i];
    }
    return os.str();
}

inline KStirlingPermutation parse_stirling(std::string_view text, int k) {
    detail::Scanner sc(text);
    KStirlingPermutation s{k, {}};
    while (!sc.at_end()) s.word.push_back(sc.integer());
    if (auto rep = validate_stirling(s); !rep)
        throw std::invalid_argument("parse_stirling: " + rep.reason);
    return s;
}

// --- (k+1)-ary trees: "(label child ... child)", "_" for vacant ----------

inline std::string format(const KaryIncreasingTree& t) {
    if (t.size() == 0) return "()";
    std::ostringstream os;
    std::function<void(int)> emit = [&](int v) {
        os << '(' << v;
        for (int h = 0; h <= t.k; ++h) {
            os << ' ';
            if (const int c = t.slots[v - 1][h]; c == 0)
                os << '_';
            else
                emit(c);
        }
        os << ')';
    };
    emit(1);
    return os.str();
}

inline KaryIncreasingTree parse_kary_tree(std::string_view text, int k) {
    detail::Scanner sc(text);
    std::vector<std::pair<int, std::vector<int>>> nodes;  // (label, slot labels)
    std::function<int()> node = [&]() -> int {
        sc.expect('(');
        if (sc.accept(')')) return 0;  // the empty tree
        const int label = sc.integer();
        std::vector<int> slots;
        for (int h = 0; h <= k; ++h) {
            sc.skip_ws();
            if (sc.accept('_'))
                slots.push_back(0);
            else
                slots.push_back(node());
        }
        sc.expect(')');
        nodes.emplace_back(label, std::move(slots));
        return label;
    };
    node();
    if (!sc.at_end()) sc.fail("trailing input after tree");

    KaryIncreasingTree t{k, {}};
    int max_label = 0;
    for (const auto& [label, _] : nodes) max_label = std::max(max_label, label);
    if (max_label != static_cast<int>(nodes.size()))
        throw std::invalid_argument("parse_kary_tree: labels must be 1..n");
    t.slots.assign(static_cast<std::size_t>(max_label), std::vector<int>(k + 1, 0));
    for (auto& [label, slots] : nodes) {
        if (label < 1) throw std::invalid_argument("parse_kary_tree: labels must be positive");
        t.slots[static_cast<std::size_t>(label - 1)] = std::move(slots);
    }
    if (auto rep = validate_kary_tree(t); !rep)
        throw std::invalid_argument("parse_kary_tree: " + rep.reason);
    return t;
}

// --- PORTs: "(label child ...)" with no vacancy markers ------------------

inline std::string format(const PortTree& t) {
    std::ostringstream os;
    std::function<void(int)> emit = [&](int v) {
        os << '(' << v;
        for (int c : t.children[static_cast<std::size_t>(v - 1)]) {
            os << ' ';
            emit(c);
        }
        os << ')';
    };
    if (t.size() > 0) emit(1);
    return os.str();
}

inline PortTree parse_port(std::string_view text) {
    detail::Scanner sc(text);
    std::vector<std::pair<int, std::vector<int>>> nodes;
    std::function<int()> node = [&]() -> int {
        sc.expect('(');
        const int label = sc.integer();
        std::vector<int> kids;
        sc.skip_ws();
        while (sc.peek() == '(') {
            kids.push_back(node());
            sc.skip_ws();
        }
        sc.expect(')');
        nodes.emplace_back(label, std::move(kids));
        return label;
    };
    node();
    if (!sc.at_end()) sc.fail("trailing input after tree");

    PortTree t;
    int max_label = 0;
    for (const auto& [label, _] : nodes) max_label = std::max(max_label, label);
    if (max_label != static_cast<int>(nodes.size()))
        throw std::invalid_argument("parse_port: labels must be 1..n");
    t.children.assign(static_cast<std::size_t>(max_label), {});
    for (auto& [label, kids] : nodes)
        t.children[static_cast<std::size_t>(label - 1)] = std::move(kids);
    if (auto rep = validate_port(t); !rep) throw std::invalid_argument("parse_port: " + rep.reason);
    return t;
}

// --- Path diagrams: word tokens, ";", comma-separated possibilities ------
// Refined tokens "a<l>:<i>", "c:<i>", "b"; PORT tokens "a<l>", "c", "b".

inline std::string format(const PathDiagram& d) {
    std::ostringstream os;
    for (std::size_t i = 0; i < d.word.size(); ++i) {
        const auto& st = d.word[i];
        if (i) os << ' ';
        switch (st.kind) {
            case PathStep::Kind::Rise:
                os << 'a' << st.rise;
                if (!d.is_port()) os << ':' << st.variant;
                break;
            case PathStep::Kind::Level:
                os << 'c';
                if (!d.is_port()) os << ':' << st.variant;
                break;
            case PathStep::Kind::Fall:
                os << 'b';
                break;
        }
    }
    os << (d.word.empty() ? ";" : " ;");
    for (std::size_t i = 0; i < d.possibility.size(); ++i)
        os << (i == 0 ? " " : ",") << d.possibility[i];
    return os.str();
}

/// k >= 1 parses the refined alphabet; k == 0 the PORT alphabet.
inline PathDiagram parse_pathdiagram(std::string_view text, int k) {
    detail::Scanner sc(text);
    PathDiagram d{k, {}, {}};
    while (!sc.at_end() && sc.peek() != ';') {
        PathStep st;
        const char c = sc.take();
        if (c == 'a') {
            st.kind = PathStep::Kind::Rise;
            st.rise = sc.integer();
        } else if (c == 'c') {
            st.kind = PathStep::Kind::Level;
        } else if (c == 'b') {
            st.kind = PathStep::Kind::Fall;
        } else {
            sc.fail("expected a path letter (a/b/c)");
        }
        if (k >= 1 && st.kind != PathStep::Kind::Fall) {
            sc.expect(':');
            st.variant = sc.integer();
        }
        d.word.push_back(st);
    }
    sc.expect(';');
    while (!sc.at_end()) {
        d.possibility.push_back(sc.integer());
        if (!sc.at_end()) sc.expect(',');
    }
    if (d.word.size() != d.possibility.size())
        throw std::invalid_argument("parse_pathdiagram: word and possibility lengths differ");
    return d;
}

// --- Series: one term per line ---------------------------------------------

/// "coeff t^a z[m,i]^b ...", sorted by t-degree then by exponent vector.
inline std::string format(const TruncatedSeries& s) {
    std::vector<std::pair<TruncatedSeries::Monomial, BigCount>> terms(s.terms().begin(),
                                                                      s.terms().end());
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        const int da = TruncatedSeries::degree(a.first), db = TruncatedSeries::degree(b.first);
        return da != db ? da < db : a.first < b.first;
    });
    std::ostringstream os;
    for (const auto& [m, c] : terms) {
        os << c << " t^" << TruncatedSeries::degree(m);
        for (std::size_t v = 0; v < m.size(); ++v) {
            if (m[v] == 0) continue;
            const auto [cls, variant] = s.layout().decompose(static_cast<int>(v));
            os << " z[" << cls << ',' << variant << "]^" << static_cast<int>(m[v]);
        }
        os << '\n';
    }
    return os.str();
}

// --- Histograms and profiles ----------------------------------------------

inline std::string format(const TypeHistogram& h) {
    std::ostringstream os;
    for (const auto& [bits, c] : h.counts) os << bits << ' ' << c << '\n';
    return os.str();
}

inline nlohmann::json to_json(const TypeHistogram& h) {
    nlohmann::json counts = nlohmann::json::object();
    for (const auto& [bits, c] : h.counts) counts[bits] = c;
    return {{"k", h.k}, {"counts", counts}};
}

inline std::string format(const StatProfile& p) {
    std::ostringstream os;
    for (const auto& [j, c] : p.counts) os << j << ':' << c << '\n';
    if (p.kind == StatProfile::Kind::LeftRight) os << "aux:" << p.aux << '\n';
    return os.str();
}

inline nlohmann::json to_json(const StatProfile& p) {
    const char* kind = p.kind == StatProfile::Kind::Outdeg     ? "outdeg"
                       : p.kind == StatProfile::Kind::LeftRight ? "lr"
                                                                 : "block";
    nlohmann::json counts = nlohmann::json::object();
    for (const auto& [j, c] : p.counts) counts[std::to_string(j)] = c;
    nlohmann::json out = {{"kind", kind}, {"n", p.n}, {"counts", counts}};
    if (p.kind == StatProfile::Kind::LeftRight) out["aux"] = p.aux;
    return out;
}

}  // namespace stirperm
