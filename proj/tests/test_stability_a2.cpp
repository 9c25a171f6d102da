#include "doctest.h"
#include "oracles.hpp"
#include "zigzagcat/stability_a2.hpp"

using namespace zzc;
using namespace zzc::a2;

namespace {

// gamma = s1 s2 permutes the stables up to shift: P1 -> P2 -> X -> P1.
Support rotate(Support s) {
    Support out = 0;
    if (s & bit(SP1)) out |= bit(SP2);
    if (s & bit(SP2)) out |= bit(SX);
    if (s & bit(SX)) out |= bit(SP1);
    return out;
}

}  // namespace

TEST_CASE("supports of small objects") {
    auto a = algebra();
    CHECK(hn_support(stable_object(SP1)) == bit(SP1));
    CHECK(hn_support(stable_object(SX)) == bit(SX));
    CHECK(hn_support(apply_word({1}, stable_object(SP1))) == bit(SP1));
    CHECK(hn_support(apply_word({2}, ProjComplex::projective(a, 1))) == (bit(SP1) | bit(SP2)));
    CHECK(support_str(bit(SP1) | bit(SX)) == "{P1,X}");
    CHECK(parse_support("P1,X") == (bit(SP1) | bit(SX)));
    CHECK_THROWS(hn_support(direct_sum(stable_object(SP1), stable_object(SP2))));
    CHECK_THROWS(hn_support(ProjComplex::projective(make_algebra(CoxeterGraph::type_a(3)), 1)));
}

TEST_CASE("gamma permutes supports") {
    std::mt19937 rng(31);
    for (int t = 0; t < 60; ++t) {
        auto w = oracle::random_word(rng, 2, 7);
        auto c = apply_word(w, stable_object(static_cast<Stable>(t % 3)));
        CHECK(hn_support(apply_word({1, 2}, c)) == rotate(hn_support(c)));
    }
}

TEST_CASE("no morphisms from higher to lower phase") {
    for (int s = 0; s < 3; ++s)
        for (int t = 0; t < 3; ++t)
            for (int dk = -3; dk <= 3; ++dk)
                for (int dl = -5; dl <= 5; ++dl)
                    for (int dm = -3; dm <= 3; ++dm) {
                        auto from = stable_object(static_cast<Stable>(s));
                        auto to = stable_object(static_cast<Stable>(t)).shifted(dk, dl, dm);
                        if (shifted_phase(static_cast<Stable>(s), 0, 0) > shifted_phase(static_cast<Stable>(t), dk, dl))
                            CHECK(hom_dims(from, to).graded.count(HomDeg{0, 0, 0}) == 0);
                    }
}

TEST_CASE("letters") {
    CHECK(expand({kSX}) == BraidWord{1, 2, -1});
    CHECK(expand({kGamma, -kSX}) == BraidWord{1, 2, 1, -2, -1});
    CHECK(parse_letters("1 X -2 g") == Letters{1, kSX, -2, kGamma});
    CHECK(format_letters(parse_letters("2 -X")) == format_letters({2, -kSX}));
    CHECK_THROWS(parse_letters("3"));
}

TEST_CASE("automaton runs") {
    const auto& b = basic_automaton();
    int A = b.state("A");
    auto r = recognize(b, {2, 2, 2}, A);
    CHECK(r.accepted);
    CHECK(b.names[r.state] == "A");
    r = recognize(b, {1}, A);
    CHECK_FALSE(r.accepted);
    CHECK(r.position == 1);
    r = recognize(b, {1, kSX}, A);
    CHECK(r.accepted);
    CHECK(b.names[r.state] == "C");
    CHECK_THROWS(b.state("Z"));
}

TEST_CASE("automaton labels track supports") {
    std::mt19937 rng(5);
    auto sample = [&](const Automaton& a) {
        std::uniform_int_distribution<int> len(1, 5), pick(0, static_cast<int>(a.alphabet.size()) - 1);
        Letters w(len(rng));
        for (auto& x : w) x = a.alphabet[pick(rng)];
        return w;
    };
    auto state_of = [](const Automaton& a, Support s) {
        for (int i = 0; i < static_cast<int>(a.labels.size()); ++i)
            if (a.labels[i] == s) return i;
        return -1;
    };
    int checked = 0;
    for (const auto* a : {&basic_automaton(), &extended_automaton()}) {
        bool triples = a == &extended_automaton();
        for (int t = 0; t < 300; ++t) {
            auto u = oracle::random_word(rng, 2, 6);
            std::vector<ProjComplex> objs;
            if (triples)
                for (const auto& d : base_triple()) objs.push_back(apply_word(u, d));
            else
                objs.push_back(apply_word(u, base_triple()[t % 3]));
            int s = state_of(*a, support_union(objs));
            if (s < 0) continue;
            auto w = sample(*a);
            auto r = recognize(*a, w, s);
            if (!r.accepted) continue;
            ++checked;
            for (auto& o : objs) o = apply_word(expand(w), o);
            CHECK(support_union(objs) == a->labels[r.state]);
        }
    }
    CHECK(checked > 50);
}

TEST_CASE("normal forms") {
    auto a = algebra();
    auto nf = normal_form({1, 2});
    CHECK(nf.n == 1);
    CHECK(nf.runs.empty());
    nf = normal_form(concat({1, 2, -1}, {1}));
    CHECK(nf.n == 1);
    CHECK(nf.runs.empty());
    nf = normal_form({1, -2});
    CHECK(nf.n == -1);
    CHECK(canonical_tuple(a, nf.word()).equals(canonical_tuple(a, {1, -2})));
    std::mt19937 rng(6);
    for (int t = 0; t < 40; ++t) {
        auto w = oracle::random_word(rng, 2, 8);
        auto f = normal_form(w);
        CHECK(canonical_tuple(a, f.word()).equals(canonical_tuple(a, w)));
        for (auto [l, m] : f.runs) {
            CHECK(m > 0);
            CHECK((l >= 1 && l <= 3));
        }
        auto again = normal_form(f.word());
        CHECK(again.n == f.n);
        CHECK(again.runs == f.runs);
    }
}

TEST_CASE("walls") {
    CHECK(count_separating_walls({}, {}, 2) == 0);
    CHECK(count_separating_walls({1, -2}, {1, -2}, 2) == 0);
    CHECK(count_separating_walls({}, {-2}, 3) == count_separating_walls({-2}, {}, 3));
    CHECK(count_separating_walls({}, {-2}, 3) == count_separating_walls({}, {-2}, 4));
    CHECK(count_separating_walls({}, {2, 2}, 2) >= 2);
}
