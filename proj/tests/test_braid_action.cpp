#include "doctest.h"
#include "oracles.hpp"
#include "zigzagcat/burau.hpp"
#include "zigzagcat/metrics.hpp"
#include "zigzagcat/stability_a2.hpp"

using namespace zzc;

namespace {

ProjComplex P(const AlgebraPtr& a, int v) { return ProjComplex::projective(a, v); }

}  // namespace

TEST_CASE("generator images") {
    auto a2 = make_algebra(CoxeterGraph::type_a(2));
    CHECK(apply_word({1}, P(a2, 1)).str() == "P1<2>{1}[-1]");
    CHECK(apply_word({2}, P(a2, 1)).str() == "P2<1>{1}[-1] -> P1");
    CHECK(apply_word({1}, P(a2, 2)).str() == "P1<1>[-1] -> P2");
    CHECK(apply_word({-1}, P(a2, 1)).str() == "P1<-2>{-1}[1]");
    auto a3 = make_algebra(CoxeterGraph::type_a(3));
    CHECK(apply_word({1}, P(a3, 3)).str() == "P3");
    CHECK(apply_word({-1}, P(a3, 3)).str() == "P3");
}

TEST_CASE("conjugated generator on the stable X") {
    auto a = a2::algebra();
    auto x = a2::stable_object(a2::SX);
    auto img = apply_word({1, 2, -1}, x);
    REQUIRE(img.size() == 2);
    auto s = img.sorted_labels();
    CHECK(s[0].v == 1);
    CHECK(s[1].v == 2);
    CHECK(s[0].m == 1);
    CHECK(s[1].m == 1);
    CHECK(s[1].k - s[0].k == 1);
    auto m = burau_of_word(a->graph(), {1, 2, -1});
    auto ex = euler_class(x), im = euler_class(img);
    for (int r = 1; r <= 2; ++r) {
        Laurent acc;
        for (int c = 1; c <= 2; ++c) acc += m.at(r, c) * ex.at(c);
        CHECK(acc == im.at(r));
    }
}

TEST_CASE("canonical tuples") {
    auto a2 = make_algebra(CoxeterGraph::type_a(2));
    auto id = canonical_tuple(a2, {});
    CHECK(id.comps[0].str() == "P1");
    CHECK(id.comps[1].str() == "P2");
    CHECK(canonical_tuple(a2, {1, -1}).equals(id));
    CHECK(canonical_tuple(a2, {1, 2, 1}).equals(canonical_tuple(a2, {2, 1, 2})));
    CHECK_FALSE(canonical_tuple(a2, {1, 2}).equals(canonical_tuple(a2, {2, 1})));
    auto d4 = make_algebra(CoxeterGraph::type_d(4));
    for (auto [i, j] : std::vector<std::pair<int, int>>{{1, 2}, {2, 3}, {2, 4}})
        CHECK(canonical_tuple(d4, {i, j, i}).equals(canonical_tuple(d4, {j, i, j})));
    CHECK(canonical_tuple(d4, {1, 3}).equals(canonical_tuple(d4, {3, 1})));
    CHECK(canonical_tuple(d4, {3, 4}).equals(canonical_tuple(d4, {4, 3})));
}

TEST_CASE("the full twist is central and acts by shifts") {
    auto g = CoxeterGraph::type_a(3);
    auto a = make_algebra(g);
    auto delta2 = power(special_word(g, SpecialKind::HalfTwist), 2);
    for (const auto& c : canonical_tuple(a, delta2).comps) CHECK(c.size() == 1);
    std::mt19937 rng(3);
    for (int t = 0; t < 10; ++t) {
        auto w = oracle::random_word(rng, 3, 6);
        CHECK(canonical_tuple(a, concat(w, delta2)).equals(canonical_tuple(a, concat(delta2, w))));
    }
}

TEST_CASE("the action is by autoequivalences") {
    for (auto g : {CoxeterGraph::type_a(3), CoxeterGraph::type_d(4)}) {
        auto a = make_algebra(g);
        std::mt19937 rng(17);
        for (int t = 0; t < 6; ++t) {
            auto w = oracle::random_word(rng, g.rank(), 5, 1);
            for (int i = 1; i <= g.rank(); ++i) {
                auto wi = apply_word(w, P(a, i));
                CHECK(is_spherical(wi));
                CHECK(apply_word(inverse(w), wi).sorted_labels() == P(a, i).sorted_labels());
                int j = 1 + (i + t) % g.rank();
                CHECK(hom_dims(wi, apply_word(w, P(a, j))).graded == hom_dims(P(a, i), P(a, j)).graded);
            }
        }
    }
}

TEST_CASE("ball sizes in B3 agree with the faithful Burau representation") {
    auto a = make_algebra(CoxeterGraph::type_a(2));
    auto ball = bfs_ball(a, {{1}, {2}}, 5);
    std::vector<int> spheres(6);
    for (const auto& e : ball) ++spheres[e.dist];
    CHECK(spheres == oracle::burau_sphere_sizes(5));
    CHECK(spheres[1] == 4);
}

TEST_CASE("element store") {
    auto a = make_algebra(CoxeterGraph::type_a(2));
    ElementStore s;
    CHECK(s.insert(canonical_tuple(a, {1, 2, 1})).second);
    CHECK_FALSE(s.insert(canonical_tuple(a, {2, 1, 2})).second);
    CHECK(s.find(canonical_tuple(a, {2, 1, 2})) == 0);
    CHECK(s.find(canonical_tuple(a, {1})) == -1);
    auto t = left_multiply(canonical_tuple(a, {2}), {1});
    CHECK(t.equals(canonical_tuple(a, {1, 2})));
}

TEST_CASE("spherical twists") {
    auto a3 = make_algebra(CoxeterGraph::type_a(3));
    for (int i = 1; i <= 3; ++i) {
        CHECK(spherical_twist(P(a3, i), P(a3, i), 1).str() == P(a3, i).shifted(-1, 2, 1).str());
        CHECK(is_isomorphic(spherical_twist(P(a3, i), P(a3, i), -1), apply_word({-i}, P(a3, i))));
    }
    CHECK(spherical_twist(P(a3, 1), P(a3, 3), 1).str() == "P3");
    auto a = a2::algebra();
    auto x = a2::stable_object(a2::SX);
    for (int k = 1; k <= 2; ++k) {
        CHECK(is_isomorphic(spherical_twist(x, P(a, k), 1), apply_word({1, 2, -1}, P(a, k))));
        CHECK(is_isomorphic(spherical_twist(x, P(a, k), -1), apply_word({1, -2, -1}, P(a, k))));
    }
    ProjComplex sum = direct_sum(P(a3, 1), P(a3, 2));
    CHECK_FALSE(is_spherical(sum));
    CHECK_THROWS_AS(spherical_twist(sum, P(a3, 1), 1), DomainError);
}

TEST_CASE("Dehornoy signs: fixed values") {
    auto a2 = CoxeterGraph::type_a(2);
    CHECK(dehornoy_sign(a2, {1, -2}) == DehornoySign::Positive);
    CHECK(dehornoy_sign(a2, {-1, 2}) == DehornoySign::Negative);
    CHECK(dehornoy_sign(a2, {}) == DehornoySign::Zero);
    CHECK(dehornoy_sign(a2, {1, 2, 1, -2, -1, -2}) == DehornoySign::Zero);
    CHECK(dehornoy_sign(a2, {2, 2, -1}) == DehornoySign::Negative);
}

TEST_CASE("Dehornoy signs agree with handle reduction") {
    std::mt19937 rng(2024);
    for (int n : {2, 3, 4}) {
        auto g = CoxeterGraph::type_a(n);
        for (int t = 0; t < 30; ++t) {
            auto w = oracle::random_word(rng, n, 8);
            CHECK(static_cast<int>(dehornoy_sign(g, w)) == oracle::handle_sign(w));
        }
    }
}
