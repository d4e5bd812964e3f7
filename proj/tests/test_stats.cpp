#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "stirperm/enumerate.hpp"
#include "stirperm/stats.hpp"

using namespace stirperm;

TEST_CASE("block profile of 221553367788614499") {
    const auto p = block_profile(
        KStirlingPermutation{2, {2, 2, 1, 5, 5, 3, 3, 6, 7, 7, 8, 8, 6, 1, 4, 4, 9, 9}});
    CHECK(p.counts == std::map<int, long long>{{4, 1}, {3, 1}, {2, 1}});
    CHECK(p.at(4) == 1);
    CHECK(p.at(7) == 0);
}

TEST_CASE("block profile of simple words") {
    CHECK(block_profile(KStirlingPermutation{2, {1, 1, 2, 2}}).counts ==
          std::map<int, long long>{{2, 1}});
    // 1221: one top block, interior 22 relabels to 11 with one block
    CHECK(block_profile(KStirlingPermutation{2, {1, 2, 2, 1}}).counts ==
          std::map<int, long long>{{1, 2}});
}

TEST_CASE("outdegree profile counts nodes and edges") {
    for_each_port(5, [](const PortTree& t) {
        const auto p = outdegree_profile(t);
        long long nodes = 0, edges = 0;
        for (const auto& [j, c] : p.counts) {
            nodes += c;
            edges += static_cast<long long>(j) * c;
        }
        CHECK(nodes == 5);
        CHECK(edges == 4);
    });
}

TEST_CASE("lr profile components cover every node") {
    for_each_kary_tree(4, 2, [](const KaryIncreasingTree& t) {
        const auto p = lr_profile(t);
        long long total = 0;
        for (const auto& [j, c] : p.counts) total += static_cast<long long>(j) * c;
        CHECK(total == 4);
        CHECK(p.aux >= 0);
    });
}

TEST_CASE("lr profile aux counts center-leaf chains") {
    // 1 -center-> 2 -center-> 3 (leaf): node 2 qualifies, node 1 does not
    KaryIncreasingTree t{2, {{0, 2, 0}, {0, 3, 0}, {0, 0, 0}}};
    const auto p = lr_profile(t);
    CHECK(p.aux == 1);
    CHECK(p.counts == std::map<int, long long>{{1, 3}});
}

TEST_CASE("profiles reject the wrong arity") {
    CHECK_THROWS_AS(lr_profile(KaryIncreasingTree{1, {{0, 0}}}), std::invalid_argument);
    CHECK_THROWS_AS(block_profile(KStirlingPermutation{3, {1, 1, 1}}), std::invalid_argument);
}

TEST_CASE("three-way equidistribution holds exhaustively for small n") {
    for (int n = 1; n <= 5; ++n) {
        const auto rep = equidistribution_report(n);
        CHECK(rep.pass);
        CHECK(rep.detail.empty());
        CHECK(rep.objects_checked > 0);
    }
}
