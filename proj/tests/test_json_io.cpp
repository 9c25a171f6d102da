#include "doctest.h"
#include "zigzagcat/json_io.hpp"

using namespace zzc;

TEST_CASE("graph round trip") {
    for (auto g : {CoxeterGraph::type_a(4), CoxeterGraph::type_d(5), CoxeterGraph(3, {{2, 1}, {2, 3}})}) {
        auto back = graph_from_json(to_json(g));
        CHECK(back == g);
    }
    auto j = to_json(CoxeterGraph::type_a(3));
    j["orientation"] = json::array({json::array({1, 2}), json::array({1, 3})});
    CHECK_THROWS_AS(graph_from_json(j), DomainError);
    CHECK_THROWS_AS(graph_from_json(json::parse(R"({"edges": []})")), std::invalid_argument);
}

TEST_CASE("complex round trip and digest") {
    auto a = make_algebra(CoxeterGraph::type_a(3));
    auto c = apply_word({1, -2, 3}, ProjComplex::projective(a, 2));
    auto back = complex_from_json(a, json::parse(to_json(c).dump()));
    CHECK(back.str() == c.str());
    CHECK(complex_digest(back) == complex_digest(c));
    CHECK(complex_digest(c) != complex_digest(c.shifted(0, 1, 0)));
    CHECK(hex_digest(complex_digest(c)).size() == 16);
    auto bad = to_json(c);
    bad["diff"][0]["row"] = 99;
    CHECK_THROWS_AS(complex_from_json(a, bad), DomainError);
    CHECK_THROWS_AS(complex_from_json(a, json::parse(R"({"gens": []})")), std::invalid_argument);
}

TEST_CASE("elements and coefficients") {
    AlgebraElement e(Path::arrow(1, 2), mpq_class(-3, 2));
    e.add(Path::x(1), 2);
    auto back = element_from_json(to_json(e));
    CHECK(back == e);
    CHECK(to_json(e)[0].contains("coef"));
}
