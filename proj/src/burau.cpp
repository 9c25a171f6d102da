#include "zigzagcat/burau.hpp"

#include <cstdlib>
#include <map>

#include "zigzagcat/braid_action.hpp"

namespace zzc {

LaurentMatrix burau_generator(const CoxeterGraph& g, int letter) {
    int i = std::abs(letter);
    if (letter == 0 || i > g.rank()) throw DomainError("generator " + std::to_string(letter) + " is not a vertex");
    int e = letter > 0 ? 1 : -1;
    int off = g.min_vertex();
    int n = g.rank() + 1 - off;
    LaurentMatrix m = LaurentMatrix::identity(n, off);
    m.at(i, i) = Laurent(-1, 2 * e);
    for (int j : g.neighbours(i)) m.at(i, j) = Laurent(-1, e);
    return m;
}

LaurentMatrix burau_of_word(const CoxeterGraph& g, const BraidWord& w) {
    check_word(g, w);
    int off = g.min_vertex();
    LaurentMatrix m = LaurentMatrix::identity(g.rank() + 1 - off, off);
    for (int x : w) m = m * burau_generator(g, x);
    return m;
}

LaurentMatrix burau_pairing(const CoxeterGraph& g) {
    int off = g.min_vertex();
    LaurentMatrix m(g.rank() + 1 - off, off);
    for (int i : g.vertices()) {
        m.at(i, i) = Laurent(1) + Laurent::q(2);
        for (int j : g.neighbours(i)) m.at(i, j) = Laurent(-1, 1);
    }
    return m;
}

DecatReport decat_check_against(const AlgebraPtr& alg, const BraidWord& w, const LaurentMatrix& m) {
    for (int v : alg->graph().generator_vertices()) {
        auto img = apply_word(w, ProjComplex::projective(alg, v));
        auto lhs = euler_class(img);
        auto rhs = m.column(v);
        if (!(lhs == rhs)) return {false, v, rhs.str(), lhs.str()};
    }
    return {};
}

DecatReport decat_consistency(const AlgebraPtr& alg, const BraidWord& w) {
    return decat_check_against(alg, w, burau_of_word(alg->graph(), w));
}

std::optional<CancellationWitness> cancellation_witness(const ProjComplex& c) {
    std::map<std::pair<int, int>, std::pair<int, int>> tally;
    for (const auto& g : c.gens()) {
        auto& t = tally[{g.v, g.l}];
        t.first += 1;
        t.second += g.k % 2 == 0 ? 1 : -1;
    }
    for (const auto& [key, t] : tally)
        if (t.first != std::abs(t.second)) return CancellationWitness{key.first, key.second, t.first, t.second};
    return std::nullopt;
}

}  // namespace zzc
