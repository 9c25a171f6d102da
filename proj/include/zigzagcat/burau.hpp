#pragma once

#include <optional>
#include <string>

#include "zigzagcat/complex.hpp"
#include "zigzagcat/coxeter.hpp"
#include "zigzagcat/laurent.hpp"

namespace zzc {

LaurentMatrix burau_generator(const CoxeterGraph& g, int letter);
/// Product of generator matrices; the rightmost letter acts first.
LaurentMatrix burau_of_word(const CoxeterGraph& g, const BraidWord& w);
/// Gram matrix of the pairing: 1+q^2 on the diagonal, -q on edges.
LaurentMatrix burau_pairing(const CoxeterGraph& g);

struct DecatReport {
    bool ok = true;
    int column = 0;  // first mismatching vertex when !ok
    std::string expected;
    std::string actual;
};

/// Compares the Euler class of each reduced w.P_i against column i of `m`.
DecatReport decat_check_against(const AlgebraPtr& alg, const BraidWord& w, const LaurentMatrix& m);
DecatReport decat_consistency(const AlgebraPtr& alg, const BraidWord& w);

struct CancellationWitness {
    int vertex;
    int qdeg;
    int count;       // generators of that vertex and path shift
    int signed_sum;  // their Euler contribution
};

std::optional<CancellationWitness> cancellation_witness(const ProjComplex& c);

}  // namespace zzc
