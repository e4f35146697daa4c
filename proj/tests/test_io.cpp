#include <random>

#include "doctest.h"
#include "support/generators.hpp"
#include "thetadiv/io.hpp"

using namespace thetadiv;

TEST_CASE("graph documents round-trip") {
    const DualGraph ex54 = fixture("ex54");
    const std::string text = serialize_graph(ex54);
    const ParsedInput parsed = parse_input(text);
    CHECK(serialize_graph(parsed.graph) == text);
    CHECK_FALSE(parsed.multidegree.has_value());

    const Multidegree d({2, -1, 0});
    const ParsedInput with_d = parse_input(serialize_graph(ex54, &d));
    REQUIRE(with_d.multidegree.has_value());
    CHECK(*with_d.multidegree == d);
    CHECK(serialize_graph(with_d.graph, &*with_d.multidegree) == serialize_graph(ex54, &d));
}

TEST_CASE("round-trip holds for random graphs and multidegrees") {
    std::mt19937 rng(140721);
    for (int trial = 0; trial < 100; ++trial) {
        const DualGraph g = gen::random_graph(rng);
        const Multidegree d = gen::random_multidegree(rng, g);
        const std::string text = serialize_graph(g, &d);
        const ParsedInput parsed = parse_input(text);
        CHECK(serialize_graph(parsed.graph, &*parsed.multidegree) == text);
        CHECK(parse_multidegree_document(g, serialize_multidegree(g, d)) == d);
    }
}

TEST_CASE("parse failures carry a location") {
    CHECK_THROWS_AS(parse_input("{"), ParseError);
    CHECK_THROWS_AS(parse_input("[1,2]"), ParseError);
    CHECK_THROWS_AS(parse_input(R"({"vertices": []})"), ParseError);
    CHECK_THROWS_WITH_AS(
        parse_input(R"({"vertices": [{"id": "a", "weight": 0}], "edges": [["a", "b"]]})"),
        doctest::Contains("'b'"), ParseError);
    CHECK_THROWS_WITH_AS(
        parse_input(R"({"vertices": [{"id": "a", "weight": -2}], "edges": []})"),
        doctest::Contains("weight"), ParseError);
    CHECK_THROWS_WITH_AS(
        parse_input(R"({"vertices": [{"id": "a", "weight": 0}], "edges": [["a"]]})"),
        doctest::Contains("edges[0]"), ParseError);
    const DualGraph fig1 = fixture("fig1");
    CHECK_THROWS_AS(parse_multidegree_document(fig1, R"({"values": {"v": 1}})"), ParseError);
    CHECK_THROWS_AS(parse_multidegree_document(fig1, R"({"values": {"v": 1, "w": 0, "x": 2}})"),
                    ParseError);
}

TEST_CASE("multidegree literals") {
    const DualGraph ex63 = fixture("ex63");
    CHECK(parse_multidegree_literal(ex63, "0,3,0") == Multidegree({0, 3, 0}));
    CHECK(parse_multidegree_literal(ex63, "-1,2,-4") == Multidegree({-1, 2, -4}));
    CHECK(multidegree_literal(Multidegree({-1, 2, -4})) == "-1,2,-4");
    CHECK_THROWS_AS(parse_multidegree_literal(ex63, "1,2"), ParseError);
    CHECK_THROWS_AS(parse_multidegree_literal(ex63, "1,x,3"), ParseError);
    CHECK_THROWS_AS(parse_multidegree_literal(ex63, "1,2 3,4"), ParseError);
}

TEST_CASE("orientation tokens") {
    const DualGraph ex54 = fixture("ex54");
    const Orientation o = parse_orientation_tokens(ex54, "ab,ba,ab,ba");
    CHECK(orientation_tokens(ex54, o) == "ab,ba,ab,ba");

    const DualGraph looped = DualGraph::from_indexed({{"a", 1}, {"b", 0}}, {{0, 0}, {0, 1}});
    CHECK(orientation_tokens(looped, parse_orientation_tokens(looped, "loop,ba")) == "loop,ba");
    CHECK_THROWS_AS(parse_orientation_tokens(looped, "ab,ba"), ParseError);
    CHECK_THROWS_AS(parse_orientation_tokens(looped, "loop"), ParseError);
    CHECK_THROWS_AS(parse_orientation_tokens(looped, "loop,xy"), ParseError);

    std::mt19937 rng(555);
    for (int trial = 0; trial < 60; ++trial) {
        const DualGraph g = gen::random_graph(rng);
        const auto en = enumerate_orientations(g);
        std::uniform_int_distribution<std::uint64_t> pick(0, en.size() - 1);
        const Orientation random_o = en.at(pick(rng));
        CHECK(parse_orientation_tokens(g, orientation_tokens(g, random_o)) == random_o);
    }
}
