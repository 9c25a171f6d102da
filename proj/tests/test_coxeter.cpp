#include "doctest.h"
#include "zigzagcat/coxeter.hpp"

using namespace zzc;

TEST_CASE("free reduction") {
    CHECK(free_reduce({1, -1}).empty());
    CHECK(free_reduce({1, 2, -2, -1}).empty());
    CHECK(free_reduce({1, 2, 1}) == BraidWord{1, 2, 1});
    CHECK(free_reduce({3, 1, -1, 2}) == BraidWord{3, 2});
}

TEST_CASE("special words") {
    auto a2 = CoxeterGraph::type_a(2);
    CHECK(special_word(a2, SpecialKind::CoxeterElement) == BraidWord{1, 2});
    CHECK(special_word(a2, SpecialKind::HalfTwist) == BraidWord{1, 2, 1});
    CHECK(special_word(CoxeterGraph::type_a(1), SpecialKind::HalfTwist) == BraidWord{1});
    CHECK(special_word(CoxeterGraph::type_a(3), SpecialKind::HalfTwist).size() == 6);
    CHECK(special_word(CoxeterGraph::type_a(4), SpecialKind::CoxeterElement) == BraidWord{1, 2, 3, 4});
}

TEST_CASE("dual generators") {
    auto a3 = CoxeterGraph::type_a(3);
    CHECK(dual_generator(a3, 1, 0) == BraidWord{1});
    CHECK(dual_generator(a3, 1, 1) == BraidWord{1, 2, -1});
    CHECK(dual_generator(a3, 2, 1) == BraidWord{2, 3, -2});
    CHECK(dual_generator(a3, 1, 2) == BraidWord{1, 2, 3, -2, -1});
    CHECK(dual_generators(a3).size() == 6);
    CHECK(dual_generators(CoxeterGraph::type_a(5)).size() == 15);
}

TEST_CASE("named graphs") {
    struct Case {
        const char* name;
        int rank, edges;
    };
    for (auto c : {Case{"a2", 2, 1}, Case{"A5", 5, 4}, Case{"a9", 9, 8}, Case{"d4", 4, 3}, Case{"d6", 6, 5},
                   Case{"e6", 6, 5}, Case{"E8", 8, 7}}) {
        auto g = CoxeterGraph::from_name(c.name);
        CHECK(g.rank() == c.rank);
        CHECK(static_cast<int>(g.edges().size()) == c.edges);
    }
    auto d4 = CoxeterGraph::type_d(4);
    int branch = 0;
    for (int v : d4.vertices()) branch = std::max<int>(branch, d4.neighbours(v).size());
    CHECK(branch == 3);
    for (const char* bad : {"a0", "d3", "e9", "b3", "", "a"}) CHECK_THROWS(CoxeterGraph::from_name(bad));
}

TEST_CASE("orientation") {
    auto a3 = CoxeterGraph::type_a(3);
    CHECK(a3.is_linear_a());
    CHECK(a3.oriented(1, 2));
    CHECK_FALSE(a3.oriented(2, 1));
    CHECK_FALSE(a3.adjacent(1, 3));
    CoxeterGraph flipped(3, {{2, 1}, {2, 3}});
    CHECK_FALSE(flipped.is_linear_a());
    CHECK(flipped.oriented(2, 1));
    CHECK_FALSE(CoxeterGraph::type_d(4).is_linear_a());
}

TEST_CASE("based extension") {
    auto b = based_extension(CoxeterGraph::type_a(2));
    CHECK(b.based());
    CHECK(b.rank() == 2);
    CHECK(b.has_vertex(0));
    CHECK(b.oriented(0, 1));
    CHECK(b.generator_vertices() == std::vector<int>{1, 2});
    CHECK_THROWS(based_extension(CoxeterGraph::type_d(4)));
}

TEST_CASE("word syntax") {
    CHECK(parse_word("1 -2 3") == BraidWord{1, -2, 3});
    CHECK(parse_word("").empty());
    CHECK(format_word({1, -2, 3}) == "1 -2 3");
    CHECK(parse_word(format_word({-4, 2, 2})) == BraidWord{-4, 2, 2});
    CHECK_THROWS_AS(parse_word("Z"), std::invalid_argument);
    CHECK_THROWS_AS(parse_word("1 0"), std::invalid_argument);
    CHECK(inverse({1, -2, 3}) == BraidWord{-3, 2, -1});
    CHECK(power({1, 2}, -2) == BraidWord{-2, -1, -2, -1});
    CHECK_THROWS(check_word(CoxeterGraph::type_a(2), {3}));
}
