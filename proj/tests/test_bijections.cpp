#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "stirperm/bijections.hpp"
#include "stirperm/enumerate.hpp"

#include <set>

using namespace stirperm;

TEST_CASE("perm <-> tree round trip is exact and onto") {
    for (int k = 1; k <= 3; ++k)
        for (int n = 0; n <= 4; ++n) {
            std::set<KStirlingPermutation> image;
            for_each_kary_tree(n, k, [&](const KaryIncreasingTree& t) {
                const auto p = tree_to_perm(t);
                CHECK(validate_stirling(p).valid);
                CHECK(perm_to_tree(p) == t);
                image.insert(p);
            });
            std::set<KStirlingPermutation> all;
            for_each_stirling(n, k, [&](const KStirlingPermutation& p) { all.insert(p); });
            CHECK(image == all);
        }
}

TEST_CASE("VariantMap orders bit strings by decreasing binary value") {
    const VariantMap vm(2);
    CHECK(vm.variants(2) == std::vector<std::string>{"110", "101", "011"});
    CHECK(vm.variants(1) == std::vector<std::string>{"100", "010", "001"});
    CHECK(vm.variants(3) == std::vector<std::string>{"111"});
    CHECK(vm.variant_index("101") == 2);
    CHECK(vm.variant_index("011") == 3);
    CHECK(vm.variant_index("111") == 1);
}

TEST_CASE("the worked k = 2 diagram decodes to 44227715566133") {
    PathDiagram d{2,
                  {{PathStep::Kind::Rise, 2, 1},
                   {PathStep::Kind::Rise, 1, 2},
                   {PathStep::Kind::Fall, 0, 0},
                   {PathStep::Kind::Fall, 0, 0},
                   {PathStep::Kind::Level, 0, 3},
                   {PathStep::Kind::Fall, 0, 0}},
                  {0, 0, 3, 0, 1, 1}};
    const auto t = pathdiagram_to_tree(d);
    CHECK(tree_to_perm(t).word ==
          std::vector<int>{4, 4, 2, 2, 7, 7, 1, 5, 5, 6, 6, 1, 3, 3});
    CHECK(tree_to_pathdiagram(t) == d);
}

TEST_CASE("refined diagrams decode bijectively onto trees") {
    for (int k = 1; k <= 2; ++k)
        for (int n = 0; n <= 4; ++n) {
            std::set<KaryIncreasingTree> image;
            long long diagrams = 0;
            for_each_pathdiagram(k, n, [&](const PathDiagram& d) {
                const auto t = pathdiagram_to_tree(d);
                CHECK(validate_kary_tree(t).valid);
                CHECK(tree_to_pathdiagram(t) == d);
                image.insert(t);
                ++diagrams;
            });
            CHECK(BigCount(diagrams) == count_stirling(n + 1, k));
            CHECK(static_cast<long long>(image.size()) == diagrams);
        }
}

TEST_CASE("PORT diagrams decode bijectively onto PORTs") {
    for (int n = 0; n <= 5; ++n) {
        std::set<PortTree> image;
        long long diagrams = 0;
        for_each_port_pathdiagram(n, [&](const PathDiagram& d) {
            const auto t = port_pathdiagram_to_tree(d);
            CHECK(validate_port(t).valid);
            CHECK(port_tree_to_pathdiagram(t) == d);
            image.insert(t);
            ++diagrams;
        });
        CHECK(BigCount(diagrams) == count_port(n + 1));
        CHECK(static_cast<long long>(image.size()) == diagrams);
    }
}

TEST_CASE("malformed diagrams raise PathDiagramError with the step index") {
    // possibility entry exceeds the number of open vacancies at step 1
    PathDiagram d{2, {{PathStep::Kind::Level, 0, 1}}, {5}};
    CHECK_THROWS_AS(pathdiagram_to_tree(d), PathDiagramError);
    try {
        pathdiagram_to_tree(d);
    } catch (const PathDiagramError& e) {
        CHECK(e.step == 1);
    }
    // variant out of range
    PathDiagram bad{2, {{PathStep::Kind::Level, 0, 9}}, {0}};
    CHECK_THROWS_AS(pathdiagram_to_tree(bad), PathDiagramError);
    // path ends above zero
    PathDiagram open{2, {{PathStep::Kind::Rise, 1, 1}}, {0}};
    CHECK_THROWS_AS(pathdiagram_to_tree(open), PathDiagramError);
    // length mismatch
    PathDiagram mism{2, {{PathStep::Kind::Level, 0, 1}}, {}};
    CHECK_THROWS_AS(pathdiagram_to_tree(mism), PathDiagramError);
}

TEST_CASE("bijections reject invalid inputs") {
    CHECK_THROWS_AS(tree_to_perm(KaryIncreasingTree{1, {{2, 0}, {1, 0}}}), std::invalid_argument);
    CHECK_THROWS_AS(perm_to_tree(KStirlingPermutation{2, {1, 2, 1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(pathdiagram_to_tree(PathDiagram{0, {}, {}}), std::invalid_argument);
    CHECK_THROWS_AS(port_pathdiagram_to_tree(PathDiagram{2, {}, {}}), std::invalid_argument);
}

TEST_CASE("empty objects round trip") {
    CHECK(tree_to_perm(KaryIncreasingTree{2, {}}).word.empty());
    CHECK(perm_to_tree(KStirlingPermutation{2, {}}).size() == 0);
    // length-0 diagram decodes to the single-node tree
    CHECK(pathdiagram_to_tree(PathDiagram{2, {}, {}}).size() == 1);
    CHECK(port_pathdiagram_to_tree(PathDiagram{0, {}, {}}).size() == 1);
}
