#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "zigzagcat/metrics.hpp"

using namespace zzc;

TEST_CASE("layers") {
    auto a2 = make_algebra(CoxeterGraph::type_a(2));
    auto p1 = ProjComplex::projective(a2, 1);
    for (auto gr : {Grading::Classical, Grading::Dual}) {
        CHECK(layer_range(p1, gr) == std::pair{0, 0});
        CHECK(layer_range(apply_word({1}, p1), gr) == std::pair{1, 1});
        CHECK(layer_range(apply_word({1, 2, -1}, ProjComplex::projective(a2, 2)), gr).first <=
              layer_range(apply_word({1, 2, -1}, ProjComplex::projective(a2, 2)), gr).second);
    }
    ProjComplex x(a2);
    x.add_generator({1, 0, 0, 0});
    x.add_generator({2, 1, -1, 0});
    x.set_entry(1, 0, AlgebraElement(Path::arrow(1, 2)));
    CHECK(layer_range(x, Grading::Classical) == std::pair{0, 0});
    CHECK(layer_range(x, Grading::Dual) == std::pair{0, 0});
    CHECK(parse_grading("dual") == Grading::Dual);
    CHECK_THROWS(parse_grading("diagonal"));
}

TEST_CASE("linear generators") {
    auto a2 = make_algebra(CoxeterGraph::type_a(2));
    std::set<std::string> dual, classical;
    for (const auto& c : linear_generators(a2, Grading::Dual)) dual.insert(c.str());
    for (const auto& c : linear_generators(a2, Grading::Classical)) classical.insert(c.str());
    CHECK(dual == std::set<std::string>{"P1", "P2", "P1 -> P2<-1>[1]"});
    CHECK(classical == std::set<std::string>{"P1", "P2", "P1 -> P2<-1>[1]", "P2<1>{1}[-1] -> P1"});
    CHECK(linear_generators(make_algebra(CoxeterGraph::type_a(3)), Grading::Dual).size() == 6);
    CHECK(linear_generators(make_algebra(CoxeterGraph::type_a(3)), Grading::Classical).size() == 11);
    CHECK_THROWS(linear_generators(make_algebra(CoxeterGraph::type_d(4)), Grading::Classical));
}

TEST_CASE("word lengths") {
    auto g = CoxeterGraph::type_a(2);
    auto a = make_algebra(g);
    auto dual = garside_generators(g, Grading::Dual), classical = garside_generators(g, Grading::Classical);
    CHECK(dual.size() == 4);
    CHECK(classical.size() == 5);
    CHECK(word_length_bfs(a, {}, dual, 3) == 0);
    CHECK(word_length_bfs(a, {1}, dual, 3) == 1);
    CHECK(word_length_bfs(a, {1, 2, 1}, classical, 3) == 1);
    CHECK(word_length_bfs(a, {1, -2}, dual, 3) == 2);
    CHECK(word_length_bfs(a, {1, 2, 1, 2, 1, 2}, dual, 2) == std::nullopt);
}

TEST_CASE("spread: fixed values and symmetry") {
    auto g = CoxeterGraph::type_a(2);
    auto a = make_algebra(g);
    CHECK(spread(a, {}, Grading::Dual) == 0);
    CHECK(spread(a, {1}, Grading::Dual) == 1);
    CHECK(spread(a, {1, 2}, Grading::Dual) == 1);
    CHECK(spread(a, {1, -2}, Grading::Dual) == 2);
    CHECK(spread(a, {1, 2, 1}, Grading::Classical) == 1);
    std::mt19937 rng(4);
    auto gens = garside_generators(g, Grading::Dual);
    for (int t = 0; t < 20; ++t) {
        auto w = oracle::random_word(rng, 2, 5);
        int s = spread(a, w, Grading::Dual);
        CHECK(s == spread(a, inverse(w), Grading::Dual));
        CHECK(word_length_bfs(a, w, gens, 5) == s);
    }
}

TEST_CASE("Garside intervals") {
    auto a2 = CoxeterGraph::type_a(2), a3 = CoxeterGraph::type_a(3);
    auto d2 = enumerate_interval(a2, Grading::Dual);
    auto a = make_algebra(a2);
    std::vector<BraidWord> expect{{}, {1}, {2}, {1, 2, -1}, {1, 2}};
    REQUIRE(d2.size() == expect.size());
    for (const auto& e : expect) {
        bool found = false;
        for (const auto& w : d2) found = found || canonical_tuple(a, w).equals(canonical_tuple(a, e));
        CHECK(found);
    }
    CHECK(enumerate_interval(a3, Grading::Dual).size() == 14);
    CHECK(enumerate_interval(a3, Grading::Classical).size() == 24);
    CHECK(enumerate_interval(a2, Grading::Classical).size() == 6);
    auto dg = digne_gobet_check(a3);
    CHECK(dg.size() == 14);
    auto a3alg = make_algebra(a3);
    for (const auto& e : dg) {
        CHECK(e.certified);
        CHECK(canonical_tuple(a3alg, e.u).equals(canonical_tuple(a3alg, concat(e.a, inverse(e.b)))));
    }
}
