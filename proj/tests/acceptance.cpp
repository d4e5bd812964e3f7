// Acceptance harness: one line per criterion, nonzero exit on any failure.

#include "stirperm/bijections.hpp"
#include "stirperm/core.hpp"
#include "stirperm/io.hpp"
#include "stirperm/localtypes.hpp"
#include "stirperm/stats.hpp"
#include "stirperm/verify.hpp"

#include <iostream>
#include <string>

namespace {

bool suite_passes(const stirperm::verify::SuiteResult& r, bool verbose_failures = true) {
    if (!r.pass() && verbose_failures)
        for (const auto& line : r.lines)
            if (!line.pass) std::cout << "       " << r.name << ": " << line.text << '\n';
    return r.pass();
}

void report(int criterion, const std::string& what, bool ok, bool& all) {
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << criterion << ". " << what << '\n';
    all = all && ok;
}

bool golden_checks() {
    using namespace stirperm;
    bool ok = true;

    const auto lt1 = local_types(KStirlingPermutation{1, {2, 5, 3, 4, 7, 1, 6}});
    ok = ok && lt1 == std::vector<LocalTypeString>{"11", "01", "11", "01", "00", "00", "00"};

    const auto lt3 = local_types(
        KStirlingPermutation{3, {1, 1, 2, 2, 3, 3, 3, 2, 1, 4, 4, 5, 5, 5, 4, 6, 6, 6}});
    ok = ok && lt3 == std::vector<LocalTypeString>{"0011", "0010", "0000", "0011", "0000", "0000"};

    const KStirlingPermutation sigma{2, {4, 4, 2, 2, 7, 7, 1, 5, 5, 6, 6, 1, 3, 3}};
    const auto t = perm_to_tree(sigma);
    ok = ok && tree_to_perm(t) == sigma;
    ok = ok && node_types(t) == local_types(sigma);

    const auto blocks = block_profile(
        KStirlingPermutation{2, {2, 2, 1, 5, 5, 3, 3, 6, 7, 7, 8, 8, 6, 1, 4, 4, 9, 9}});
    ok = ok && blocks.counts == std::map<int, long long>{{4, 1}, {3, 1}, {2, 1}};

    return ok;
}

}  // namespace

int main() {
    using namespace stirperm::verify;
    bool all = true;

    report(1, "exact counts match exhaustive enumeration", suite_passes(counts_suite(6)), all);
    report(2, "contour bijection round-trips exhaustively (k <= 3, n <= 5)",
           suite_passes(gessel_suite(5)), all);
    report(3, "local types equal node types entrywise (k <= 3, n <= 5)",
           suite_passes(types_suite(5)), all);
    report(4, "worked-example goldens (type lists, 44227715566133, block profile)",
           golden_checks(), all);
    report(5, "path diagrams decode bijectively (k <= 2, n <= 5; PORT n <= 6)",
           suite_passes(pathdiagram_suite(5)), all);
    report(6, "continued-fraction series matches brute-force classification",
           suite_passes(series_suite(5)), all);
    report(7, "word-level expansion is unambiguous and complete",
           suite_passes(words_suite(5)), all);
    report(8, "three-way statistic equidistribution (n <= 6)", suite_passes(stats_suite(6)), all);
    report(9, "seeded sampling is uniform (chi-square) and deterministic",
           suite_passes(uniformity_suite()), all);

    std::cout << (all ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL") << '\n';
    return all ? 0 : 1;
}
