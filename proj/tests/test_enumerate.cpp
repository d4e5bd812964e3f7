#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "stirperm/core.hpp"
#include "stirperm/enumerate.hpp"

#include <set>

using namespace stirperm;

TEST_CASE("enumeration cardinalities match closed-form counts") {
    for (int k = 1; k <= 3; ++k)
        for (int n = 0; n <= 5; ++n) {
            CHECK(BigCount(enum_stirling(n, k).size()) == count_stirling(n, k));
            CHECK(BigCount(enum_kary_trees(n, k).size()) == count_kary_trees(n, k));
        }
    for (int n = 1; n <= 7; ++n) CHECK(BigCount(enum_ports(n).size()) == count_port(n));
}

TEST_CASE("stirling enumeration order follows insertion gaps ascending") {
    const auto v = enum_stirling(2, 3);
    REQUIRE(v.size() == 4);
    CHECK(v[0].word == std::vector<int>{2, 2, 2, 1, 1, 1});
    CHECK(v[1].word == std::vector<int>{1, 2, 2, 2, 1, 1});
    CHECK(v[2].word == std::vector<int>{1, 1, 2, 2, 2, 1});
    CHECK(v[3].word == std::vector<int>{1, 1, 1, 2, 2, 2});
}

TEST_CASE("enumeration produces distinct valid objects") {
    std::set<KStirlingPermutation> perms;
    for_each_stirling(4, 2, [&](const KStirlingPermutation& p) {
        CHECK(validate_stirling(p).valid);
        CHECK(perms.insert(p).second);
    });
    std::set<KaryIncreasingTree> trees;
    for_each_kary_tree(4, 2, [&](const KaryIncreasingTree& t) {
        CHECK(validate_kary_tree(t).valid);
        CHECK(trees.insert(t).second);
    });
    std::set<PortTree> ports;
    for_each_port(5, [&](const PortTree& t) {
        CHECK(validate_port(t).valid);
        CHECK(ports.insert(t).second);
    });
}

TEST_CASE("vacant_slots and port_positions sizes") {
    for_each_kary_tree(3, 2, [](const KaryIncreasingTree& t) {
        CHECK(static_cast<int>(vacant_slots(t).size()) == 2 * 3 + 1);
    });
    for_each_port(4, [](const PortTree& t) {
        CHECK(static_cast<int>(port_positions(t).size()) == 2 * 4 - 1);
    });
}

TEST_CASE("vacant_slots order is depth-first left-to-right") {
    // 1 with 2 in slot 0; slots of 2 come before the remaining slots of 1
    KaryIncreasingTree t{2, {{2, 0, 0}, {0, 0, 0}}};
    const auto v = vacant_slots(t);
    REQUIRE(v.size() == 5);
    CHECK(v[0] == std::pair<int, int>{2, 0});
    CHECK(v[1] == std::pair<int, int>{2, 1});
    CHECK(v[2] == std::pair<int, int>{2, 2});
    CHECK(v[3] == std::pair<int, int>{1, 1});
    CHECK(v[4] == std::pair<int, int>{1, 2});
}

TEST_CASE("random generation is seed-deterministic and valid") {
    for (std::uint64_t seed : {0ull, 1ull, 99ull}) {
        const auto a = random_stirling(6, 2, seed);
        CHECK(a == random_stirling(6, 2, seed));
        CHECK(validate_stirling(a).valid);
        const auto t = random_kary_tree(6, 3, seed);
        CHECK(t == random_kary_tree(6, 3, seed));
        CHECK(validate_kary_tree(t).valid);
        const auto p = random_port(7, seed);
        CHECK(p == random_port(7, seed));
        CHECK(validate_port(p).valid);
    }
    CHECK(random_stirling(5, 2, 1) != random_stirling(5, 2, 2));
}

TEST_CASE("EvolutionRng::below stays within bounds") {
    EvolutionRng rng(12345);
    for (int i = 0; i < 1000; ++i) CHECK(rng.below(7) < 7);
}

TEST_CASE("argument validation") {
    CHECK_THROWS_AS(for_each_port(0, [](const PortTree&) {}), std::domain_error);
    CHECK_THROWS_AS(random_port(0, 1), std::domain_error);
    CHECK_THROWS_AS(random_stirling(3, 0, 1), std::invalid_argument);
}
