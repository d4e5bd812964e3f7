#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "stirperm/bijections.hpp"
#include "stirperm/enumerate.hpp"
#include "stirperm/localtypes.hpp"

#include <algorithm>

using namespace stirperm;

TEST_CASE("local types of 2534716 (k = 1)") {
    const auto lt = local_types(KStirlingPermutation{1, {2, 5, 3, 4, 7, 1, 6}});
    CHECK(lt == std::vector<LocalTypeString>{"11", "01", "11", "01", "00", "00", "00"});
}

TEST_CASE("local types of 112233321445554666 (k = 3)") {
    const auto lt = local_types(
        KStirlingPermutation{3, {1, 1, 2, 2, 3, 3, 3, 2, 1, 4, 4, 5, 5, 5, 4, 6, 6, 6}});
    CHECK(lt == std::vector<LocalTypeString>{"0011", "0010", "0000", "0011", "0000", "0000"});
}

TEST_CASE("type histogram of 111222 (k = 3)") {
    const auto h = type_histogram(KStirlingPermutation{3, {1, 1, 1, 2, 2, 2}});
    CHECK(h.counts == std::map<LocalTypeString, long long>{{"0001", 1}, {"0000", 1}});
    CHECK(h.total() == 2);
}

TEST_CASE("local types equal node types under the contour bijection") {
    for (int k = 1; k <= 3; ++k)
        for (int n = 1; n <= 4; ++n)
            for_each_kary_tree(n, k, [](const KaryIncreasingTree& t) {
                CHECK(local_types(tree_to_perm(t)) == node_types(t));
            });
}

TEST_CASE("largest letter always has the all-zero type") {
    for (int n = 1; n <= 4; ++n)
        for_each_stirling(n, 2, [](const KStirlingPermutation& p) {
            CHECK(local_types(p).back() == "000");
        });
}

TEST_CASE("peaks minus valleys is one for ordinary permutations") {
    for (int n = 1; n <= 6; ++n)
        for_each_stirling(n, 1, [](const KStirlingPermutation& p) {
            const auto lt = local_types(p);
            const auto peaks = std::count(lt.begin(), lt.end(), "00");
            const auto valleys = std::count(lt.begin(), lt.end(), "11");
            CHECK(peaks - valleys == 1);
        });
}

TEST_CASE("classic names for k = 1") {
    CHECK(classic_name("00") == "peak");
    CHECK(classic_name("11") == "valley");
    CHECK(classic_name("01") == "double rise");
    CHECK(classic_name("10") == "double fall");
    CHECK_THROWS_AS(classic_name("000", 2), std::invalid_argument);
}

TEST_CASE("invalid inputs are rejected") {
    CHECK_THROWS_AS(local_types(KStirlingPermutation{2, {1, 2, 1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(node_types(KaryIncreasingTree{1, {{2, 0}, {1, 0}}}), std::invalid_argument);
}
