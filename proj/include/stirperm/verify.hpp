#pragma once

// Self-contained verification suites shared by `stirperm verify` and the
// acceptance harness. Every check is exact (or a frozen chi-square bound for
// the sampling checks) and prints one line with the number of objects
// covered, so logs double as coverage evidence.

#include "stirperm/bijections.hpp"
#include "stirperm/core.hpp"
#include "stirperm/enumerate.hpp"
#include "stirperm/io.hpp"
#include "stirperm/localtypes.hpp"
#include "stirperm/series.hpp"
#include "stirperm/stats.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace stirperm::verify {

struct CheckLine {
    bool pass = true;
    std::string text;
};

struct SuiteResult {
    std::string name;
    std::vector<CheckLine> lines;

    bool pass() const {
        return std::all_of(lines.begin(), lines.end(), [](const CheckLine& l) { return l.pass; });
    }
};

namespace detail {

class Suite {
  public:
    explicit Suite(std::string name) : result_{std::move(name), {}} {}

    void check(bool ok, const std::string& what, long long covered = -1) {
        std::ostringstream os;
        os << (ok ? "ok   " : "FAIL ") << what;
        if (covered >= 0) os << " (" << covered << " checked)";
        result_.lines.push_back({ok, os.str()});
    }

    SuiteResult take() { return std::move(result_); }

  private:
    SuiteResult result_;
};

/// Independent word-level oracle: direct DFS over labeled positive paths
/// ending at height zero. Does not touch the continued-fraction recursion.
inline std::set<LabeledWord> walk_labeled_paths(int k, int max_len) {
    std::set<LabeledWord> out;
    LabeledWord cur;
    std::function<void(int)> rec = [&](int height) {
        if (height == 0) out.insert(cur);
        if (static_cast<int>(cur.size()) >= max_len) return;
        for (int l = 1; l <= k; ++l) {
            cur.push_back({PathStep::Kind::Rise, l, height});
            rec(height + l);
            cur.pop_back();
        }
        cur.push_back({PathStep::Kind::Level, 0, height});
        rec(height);
        cur.pop_back();
        if (height >= 1) {
            cur.push_back({PathStep::Kind::Fall, 0, height});
            rec(height - 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

/// Chi-square statistic of observed counts against the uniform distribution.
inline double chi_square(const std::map<std::string, long long>& observed, long long categories,
                         long long samples) {
    const double expected = static_cast<double>(samples) / static_cast<double>(categories);
    double stat = 0.0;
    long long seen = 0;
    for (const auto& [_, c] : observed) {
        const double d = static_cast<double>(c) - expected;
        stat += d * d / expected;
        seen += c;
    }
    // categories never sampled still contribute their expectation
    stat += static_cast<double>(categories - static_cast<long long>(observed.size())) * expected;
    (void)seen;
    return stat;
}

// 0.999 quantiles of the chi-square distribution, frozen.
inline constexpr double kChi2Q999Df14 = 36.12327368039813;
inline constexpr double kChi2Q999Df104 = 154.31407954898623;

}  // namespace detail

// ---------------------------------------------------------------------------

inline SuiteResult counts_suite(int max_n) {
    detail::Suite s("counts");

    {
        bool ok = true;
        long long covered = 0;
        for (int k = 1; k <= 3; ++k)
            for (int n = 0; n <= std::min(max_n, 6); ++n) {
                long long c = 0;
                for_each_stirling(n, k, [&](const KStirlingPermutation&) { ++c; });
                ok = ok && BigCount(c) == count_stirling(n, k);
                covered += c;
            }
        s.check(ok, "count_stirling matches enumeration cardinality, n <= 6, k <= 3", covered);
    }
    s.check(count_stirling(2, 3) == 4, "count_stirling(2, k=3) = 4");
    {
        bool ok = true;
        for (int n = 0; n <= 8; ++n) ok = ok && count_port(n + 1) == count_stirling(n, 2);
        s.check(ok, "count_port(n+1) = count_stirling(n, 2), n <= 8", 9);
    }
    {
        bool ok = true;
        for (int k = 1; k <= 3; ++k)
            for (int n = 0; n <= 7; ++n) ok = ok && count_kary_trees(n, k) == count_stirling(n, k);
        s.check(ok, "count_kary_trees = count_stirling, n <= 7, k <= 3", 24);
    }
    {
        bool ok = true;
        long long covered = 0;
        for (int k = 1; k <= 3; ++k)
            for (int n = 1; n <= std::min(max_n, 5); ++n)
                for_each_kary_tree(n, k, [&](const KaryIncreasingTree& t) {
                    ok = ok && vacant_slot_count(t) == k * n + 1;
                    ++covered;
                });
        s.check(ok, "vacant slot count is k*n+1 on every enumerated tree", covered);
    }
    {
        bool ok = true;
        long long covered = 0;
        for (int k = 1; k <= 3; ++k)
            for (int n = 0; n <= std::min(max_n, 5); ++n)
                for_each_stirling(n, k, [&](const KStirlingPermutation& p) {
                    ok = ok && static_cast<bool>(validate_stirling(p));
                    ++covered;
                });
        s.check(ok, "every enumerated permutation passes validate_stirling", covered);
    }
    return s.take();
}

inline SuiteResult gessel_suite(int max_n) {
    detail::Suite s("gessel");
    {
        bool ok = true;
        long long covered = 0;
        for (int k = 1; k <= 3; ++k)
            for (int n = 0; n <= std::min(max_n, 5); ++n) {
                std::set<KStirlingPermutation> image;
                for_each_kary_tree(n, k, [&](const KaryIncreasingTree& t) {
                    const auto p = tree_to_perm(t);
                    ok = ok && static_cast<bool>(validate_stirling(p));
                    ok = ok && perm_to_tree(p) == t;
                    image.insert(p);
                    ++covered;
                });
                // injectivity and exact image
                std::set<KStirlingPermutation> all;
                for_each_stirling(n, k, [&](const KStirlingPermutation& p) { all.insert(p); });
                ok = ok && image == all;
            }
        s.check(ok, "perm<->tree round trip, injective, image = Q_n(k), n <= 5, k <= 3", covered);
    }
    {
        // inserting (n+1)^k at gap g equals inserting node n+1 at vacant slot g
        bool ok = true;
        long long covered = 0;
        for (int k = 1; k <= 2; ++k)
            for (int n = 1; n <= std::min(max_n, 4); ++n)
                for_each_stirling(n, k, [&](const KStirlingPermutation& p) {
                    const auto t = perm_to_tree(p);
                    const auto slots = vacant_slots(t);
                    for (std::size_t g = 0; g <= p.word.size(); ++g) {
                        KStirlingPermutation grown = p;
                        grown.word.insert(grown.word.begin() + static_cast<std::ptrdiff_t>(g), k,
                                          n + 1);
                        KaryIncreasingTree tg = t;
                        auto [v, h] = slots[g];
                        tg.slots[v - 1][h] = n + 1;
                        tg.slots.emplace_back(k + 1, 0);
                        ok = ok && tree_to_perm(tg) == grown;
                        ++covered;
                    }
                });
        s.check(ok, "gap g in the code = vacant slot g in the tree, n <= 4, k <= 2", covered);
    }
    return s.take();
}

inline SuiteResult types_suite(int max_n) {
    detail::Suite s("types");
    {
        bool ok = true;
        long long covered = 0;
        for (int k = 1; k <= 3; ++k)
            for (int n = 1; n <= std::min(max_n, 5); ++n)
                for_each_kary_tree(n, k, [&](const KaryIncreasingTree& t) {
                    ok = ok && local_types(tree_to_perm(t)) == node_types(t);
                    ++covered;
                });
        s.check(ok, "L_i(tree_to_perm(T)) = G_i(T) entrywise, n <= 5, k <= 3", covered);
    }
    {
        const auto lt = local_types(KStirlingPermutation{1, {2, 5, 3, 4, 7, 1, 6}});
        const std::vector<LocalTypeString> want{"11", "01", "11", "01", "00", "00", "00"};
        s.check(lt == want, "golden: local types of 2534716 (k=1)");
    }
    {
        const auto lt = local_types(
            KStirlingPermutation{3, {1, 1, 2, 2, 3, 3, 3, 2, 1, 4, 4, 5, 5, 5, 4, 6, 6, 6}});
        const std::vector<LocalTypeString> want{"0011", "0010", "0000", "0011", "0000", "0000"};
        s.check(lt == want, "golden: local types of 112233321445554666 (k=3)");
    }
    {
        bool ok = true;
        long long covered = 0;
        for (int k = 1; k <= 3; ++k)
            for (int n = 1; n <= std::min(max_n, 4); ++n)
                for_each_stirling(n, k, [&](const KStirlingPermutation& p) {
                    const auto lt = local_types(p);
                    ok = ok && lt.back() == std::string(static_cast<std::size_t>(k) + 1, '0');
                    const auto h = type_histogram(p);
                    ok = ok && h.total() == n;
                    ok = ok && static_cast<int>(h.counts.size()) <= (1 << (k + 1));
                    ++covered;
                });
        s.check(ok, "largest letter is a leaf; histogram totals n with <= 2^{k+1} keys", covered);
    }
    {
        bool ok = true;
        long long covered = 0;
        for (int n = 1; n <= std::min(max_n, 7); ++n)
            for_each_stirling(n, 1, [&](const KStirlingPermutation& p) {
                const auto lt = local_types(p);
                const auto peaks = std::count(lt.begin(), lt.end(), "00");
                const auto valleys = std::count(lt.begin(), lt.end(), "11");
                ok = ok && peaks - valleys == 1;
                ++covered;
            });
        s.check(ok, "#peaks - #valleys = 1 for every permutation, n <= 7", covered);
    }
    return s.take();
}

inline SuiteResult pathdiagram_suite(int max_n) {
    detail::Suite s("pathdiagram");
    for (int k = 1; k <= 2; ++k) {
        bool ok = true;
        long long covered = 0;
        for (int n = 0; n <= std::min(max_n, 5); ++n) {
            std::set<KaryIncreasingTree> image;
            long long diagrams = 0;
            for_each_pathdiagram(k, n, [&](const PathDiagram& d) {
                const auto t = pathdiagram_to_tree(d);
                ok = ok && static_cast<bool>(validate_kary_tree(t));
                ok = ok && tree_to_pathdiagram(t) == d;
                image.insert(t);
                ++diagrams;
            });
            ok = ok && BigCount(diagrams) == count_stirling(n + 1, k);
            ok = ok && static_cast<long long>(image.size()) == diagrams;  // injective
            covered += diagrams;
        }
        std::ostringstream what;
        what << "refined diagrams of length n decode bijectively to size-(n+1) trees, k = " << k;
        s.check(ok, what.str(), covered);
    }
    {
        bool ok = true;
        long long covered = 0;
        for (int n = 0; n <= std::min(max_n + 1, 6); ++n) {
            std::set<PortTree> image;
            long long diagrams = 0;
            for_each_port_pathdiagram(n, [&](const PathDiagram& d) {
                const auto t = port_pathdiagram_to_tree(d);
                ok = ok && static_cast<bool>(validate_port(t));
                ok = ok && port_tree_to_pathdiagram(t) == d;
                image.insert(t);
                ++diagrams;
            });
            ok = ok && BigCount(diagrams) == count_port(n + 1);
            ok = ok && static_cast<long long>(image.size()) == diagrams;
            covered += diagrams;
        }
        s.check(ok, "PORT diagrams of length n decode bijectively to size-(n+1) PORTs, n <= 6",
                covered);
    }
    {
        // the worked k=2 example
        const PathDiagram d = parse_pathdiagram("a2:1 a1:2 b b c:3 b ; 0,0,3,0,1,1", 2);
        const auto t = pathdiagram_to_tree(d);
        const auto p = tree_to_perm(t);
        const std::vector<int> want{4, 4, 2, 2, 7, 7, 1, 5, 5, 6, 6, 1, 3, 3};
        s.check(p.word == want && tree_to_pathdiagram(t) == d,
                "golden: diagram a2:1 a1:2 b b c:3 b ; 0,0,3,0,1,1 decodes to 44227715566133");
    }
    return s.take();
}

inline SuiteResult series_suite(int max_n) {
    detail::Suite s("series");
    {
        const auto coeffs = cf_series(2, 4).all_ones();
        const std::vector<BigCount> want{1, 3, 15, 105, 945};
        s.check(coeffs == want, "odd double factorial expansion: 1, 3, 15, 105, 945 (k = 2)");
    }
    {
        const auto coeffs = cf_series(1, 5).all_ones();
        bool ok = true;
        BigCount f = 1;
        for (int n = 0; n <= 5; ++n) {
            f *= n + 1;
            ok = ok && coeffs[static_cast<std::size_t>(n)] == f;
        }
        s.check(ok, "all-ones coefficients are (n+1)! for k = 1, n <= 5");
    }
    {
        bool ok = true;
        long long covered = 0;
        for (int k = 1; k <= 2; ++k) {
            const int n_cap = std::min(max_n, k == 1 ? 5 : 4);
            const auto cf = cf_series(k, std::max(n_cap - 1, 0));
            for (int N = 1; N <= n_cap; ++N) {
                const auto oracle = brute_force_type_gf(N, k);
                const auto predicted = cf.homogeneous(N - 1).mark_last_leaf();
                ok = ok && oracle.terms() == predicted.terms();
                covered += static_cast<long long>(count_stirling(N, k));
            }
        }
        s.check(ok, "brute-force type generating function = t*z_0 * CF component", covered);
    }
    {
        const int k = 2, D = 4;
        s.check(cf_series(k, D) == cf_series(k, D, k * D + 3),
                "truncation-height stabilization: h = k*max_deg vs h + 3");
    }
    {
        // coefficient extraction goldens
        const auto cf = cf_series(2, 2);
        const MarkerLayout layout{2};
        bool ok = true;
        for (int v = 1; v <= 3; ++v) {
            std::vector<int> exps(static_cast<std::size_t>(layout.count()), 0);
            exps[static_cast<std::size_t>(layout.index(1, v))] = 1;
            ok = ok && cf.coefficient(exps) == 1;
        }
        std::vector<int> zero(static_cast<std::size_t>(layout.count()), 0);
        ok = ok && cf.coefficient(zero) == 1;
        BigCount mass = 0;
        const auto quadratic = cf.homogeneous(2);
        for (const auto& [m, c] : quadratic.terms()) mass += c;
        ok = ok && mass == 15;
        s.check(ok, "coefficient extraction goldens (t^0, t^1 z[1,v], t^2 mass)");
    }
    return s.take();
}

inline SuiteResult words_suite(int max_n) {
    detail::Suite s("words");
    const int len_cap = std::min(max_n + 1, 6);
    for (int k = 1; k <= 2; ++k) {
        bool ok = true;
        bool ambiguous = false;
        long long covered = 0;
        std::vector<LabeledWord> words;
        try {
            words = expand_words(k, k * len_cap, len_cap);
        } catch (const AmbiguityError&) {
            ambiguous = true;
        }
        const auto oracle = detail::walk_labeled_paths(k, len_cap);
        ok = !ambiguous && std::set<LabeledWord>(words.begin(), words.end()) == oracle &&
             words.size() == oracle.size();
        covered = static_cast<long long>(oracle.size());
        std::ostringstream what;
        what << "expand_words = independent path walk, no duplicate productions, len <= "
             << len_cap << ", k = " << k;
        s.check(ok, what.str(), covered);

        if (!ambiguous) {
            const auto mu = mu_image(k, words, len_cap);
            s.check(mu == cf_series(k, len_cap),
                    "commutative image of the word expansion equals cf_series, k = " +
                        std::to_string(k));
        }
    }
    return s.take();
}

inline SuiteResult stats_suite(int max_n) {
    detail::Suite s("stats");
    {
        bool ok = true;
        long long covered = 0;
        for (int n = 1; n <= std::min(max_n, 5); ++n) {
            for_each_port(n + 1, [&](const PortTree& t) {
                const auto p = outdegree_profile(t);
                long long nodes = 0, edges = 0;
                for (const auto& [j, c] : p.counts) {
                    nodes += c;
                    edges += static_cast<long long>(j) * c;
                }
                ok = ok && nodes == n + 1 && edges == n;
                ++covered;
            });
            for_each_kary_tree(n, 2, [&](const KaryIncreasingTree& t) {
                const auto p = lr_profile(t);
                long long total = 0;
                for (const auto& [j, c] : p.counts) total += static_cast<long long>(j) * c;
                ok = ok && total == n;
                ++covered;
            });
            for_each_stirling(n, 2, [&](const KStirlingPermutation& p) {
                for (const auto& [j, c] : block_profile(p).counts) ok = ok && j >= 1 && c >= 1;
                ++covered;
            });
        }
        s.check(ok, "profile sum laws on every enumerated object", covered);
    }
    {
        const auto p = block_profile(
            KStirlingPermutation{2, {2, 2, 1, 5, 5, 3, 3, 6, 7, 7, 8, 8, 6, 1, 4, 4, 9, 9}});
        const std::map<int, long long> want{{4, 1}, {3, 1}, {2, 1}};
        s.check(p.counts == want, "golden: block profile of 221553367788614499 = {4:1, 3:1, 2:1}");
    }
    {
        bool ok = true;
        long long covered = 0;
        for (int n = 1; n <= std::min(max_n, 6); ++n) {
            const auto rep = equidistribution_report(n);
            ok = ok && rep.pass;
            covered += rep.objects_checked;
        }
        s.check(ok, "three-way equidistribution (j > 2) + outdegree-2 auxiliary, n <= 6", covered);
    }
    return s.take();
}

inline SuiteResult uniformity_suite() {
    detail::Suite s("uniformity");
    const int samples = 10000;

    auto run = [&](const std::string& label, long long categories, double threshold,
                   const std::function<std::string(std::uint64_t)>& draw) {
        std::map<std::string, long long> observed;
        for (std::uint64_t seed = 0; seed < static_cast<std::uint64_t>(samples); ++seed)
            ++observed[draw(seed)];
        const double stat = detail::chi_square(observed, categories, samples);
        std::ostringstream what;
        what << "chi-square " << label << " = " << stat << " < " << threshold << " (0.999 quantile)";
        s.check(stat < threshold, what.str(), samples);
    };

    run("stirling(n=4, k=2) over 105 objects", 105, detail::kChi2Q999Df104,
        [](std::uint64_t seed) { return format(random_stirling(4, 2, seed)); });
    run("kary(n=4, k=2) over 105 objects", 105, detail::kChi2Q999Df104,
        [](std::uint64_t seed) { return format(random_kary_tree(4, 2, seed)); });
    run("port(n=4) over 15 objects", 15, detail::kChi2Q999Df14,
        [](std::uint64_t seed) { return format(random_port(4, seed)); });

    {
        bool ok = true;
        for (std::uint64_t seed : {0ull, 1ull, 42ull, 123456789ull}) {
            ok = ok && random_stirling(6, 3, seed) == random_stirling(6, 3, seed);
            ok = ok && random_kary_tree(6, 2, seed) == random_kary_tree(6, 2, seed);
            ok = ok && random_port(7, seed) == random_port(7, seed);
        }
        s.check(ok, "identical seed produces identical object", 12);
    }
    return s.take();
}

/// Runs the named suite; "all" runs everything (including uniformity).
inline std::vector<SuiteResult> run_suites(const std::string& which, int max_n) {
    std::vector<SuiteResult> out;
    auto want = [&](const char* name) { return which == "all" || which == name; };
    if (want("counts")) out.push_back(counts_suite(max_n));
    if (want("gessel")) out.push_back(gessel_suite(max_n));
    if (want("types")) out.push_back(types_suite(max_n));
    if (want("pathdiagram")) out.push_back(pathdiagram_suite(max_n));
    if (want("series")) out.push_back(series_suite(max_n));
    if (want("words")) out.push_back(words_suite(max_n));
    if (want("stats")) out.push_back(stats_suite(max_n));
    if (which == "all") out.push_back(uniformity_suite());
    if (out.empty()) throw std::invalid_argument("unknown suite: " + which);
    return out;
}

}  // namespace stirperm::verify
