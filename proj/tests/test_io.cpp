#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "stirperm/enumerate.hpp"
#include "stirperm/io.hpp"

using namespace stirperm;

TEST_CASE("stirling format round trip") {
    const KStirlingPermutation p{2, {1, 2, 2, 1, 3, 3}};
    CHECK(format(p) == "1 2 2 1 3 3");
    CHECK(parse_stirling("1 2 2 1 3 3", 2) == p);
    CHECK(parse_stirling("  1\n2 2 1 3 3 ", 2) == p);
}

TEST_CASE("kary tree format round trip") {
    for_each_kary_tree(4, 2, [](const KaryIncreasingTree& t) {
        CHECK(parse_kary_tree(format(t), 2) == t);
    });
    CHECK(format(KaryIncreasingTree{3, {}}) == "()");
    CHECK(parse_kary_tree("()", 3).size() == 0);
    const KaryIncreasingTree t{1, {{2, 0}, {0, 0}}};
    CHECK(format(t) == "(1 (2 _ _) _)");
}

TEST_CASE("port format round trip") {
    for_each_port(5, [](const PortTree& t) { CHECK(parse_port(format(t)) == t); });
    const PortTree t{{{2, 3}, {}, {}}};
    CHECK(format(t) == "(1 (2) (3))");
    CHECK(parse_port("(1 (2) (3))") == t);
}

TEST_CASE("path diagram format round trip") {
    const PathDiagram d{2,
                        {{PathStep::Kind::Rise, 2, 1},
                         {PathStep::Kind::Rise, 1, 2},
                         {PathStep::Kind::Fall, 0, 0},
                         {PathStep::Kind::Fall, 0, 0},
                         {PathStep::Kind::Level, 0, 3},
                         {PathStep::Kind::Fall, 0, 0}},
                        {0, 0, 3, 0, 1, 1}};
    CHECK(format(d) == "a2:1 a1:2 b b c:3 b ; 0,0,3,0,1,1");
    CHECK(parse_pathdiagram("a2:1 a1:2 b b c:3 b ; 0,0,3,0,1,1", 2) == d);

    const PathDiagram port{0,
                           {{PathStep::Kind::Rise, 1, 0}, {PathStep::Kind::Fall, 0, 0}},
                           {0, 1}};
    CHECK(format(port) == "a1 b ; 0,1");
    CHECK(parse_pathdiagram("a1 b ; 0,1", 0) == port);

    const PathDiagram empty{2, {}, {}};
    CHECK(format(empty) == ";");
    CHECK(parse_pathdiagram(";", 2) == empty);
}

TEST_CASE("parse errors carry line and column") {
    try {
        parse_kary_tree("(1 _\n %)", 1);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(e.column == 2);
    }
    CHECK_THROWS_AS(parse_stirling("1 x", 1), ParseError);
    CHECK_THROWS_AS(parse_pathdiagram("q ; 0", 2), ParseError);
    CHECK_THROWS_AS(parse_port("(1 (2)) junk"), ParseError);
}

TEST_CASE("parsers reject invariant violations") {
    CHECK_THROWS_AS(parse_stirling("1 2 1 2", 2), std::invalid_argument);
    CHECK_THROWS_AS(parse_kary_tree("(2 _ _)", 1), std::invalid_argument);
    CHECK_THROWS_AS(parse_port("(1 (3))"), std::invalid_argument);
}

TEST_CASE("series format lists terms by degree") {
    const auto s = cf_series(2, 1);
    const std::string text = format(s);
    CHECK(text.find("1 t^0\n") == 0);
    CHECK(text.find("t^1 z[1,1]^1") != std::string::npos);
}

TEST_CASE("json output for histograms and profiles") {
    const auto h = type_histogram(KStirlingPermutation{3, {1, 1, 1, 2, 2, 2}});
    const auto jh = to_json(h);
    CHECK(jh["k"] == 3);
    CHECK(jh["counts"]["0001"] == 1);
    CHECK(jh["counts"]["0000"] == 1);

    const auto p = lr_profile(KaryIncreasingTree{2, {{0, 2, 0}, {0, 0, 0}}});
    const auto jp = to_json(p);
    CHECK(jp["kind"] == "lr");
    CHECK(jp["aux"] == 1);
    CHECK(format(p).find("aux:1") != std::string::npos);
}
