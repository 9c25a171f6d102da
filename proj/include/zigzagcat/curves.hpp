#pragma once

#include <string>
#include <vector>

#include "zigzagcat/complex.hpp"

namespace zzc {

// Punctures sit on the real line at 1..n+1 (0..n+1 when based); gap g joins punctures g and g+1
// and carries the vertex g of the type-A graph.
struct CurveToken {
    enum Kind { Start, PassOver, PassUnder, WrapRight, WrapLeft, End };
    Kind kind;
    int p;
};

struct CombCurve {
    int n = 0;  // rank of the ambient A_n
    bool based = false;
    std::vector<CurveToken> tokens;

    int min_puncture() const { return based ? 0 : 1; }
    int max_puncture() const { return n + 1; }
    int traversals() const { return static_cast<int>(tokens.size()) - 1; }
    /// Gap crossed between tokens r and r+1.
    int gap(int r) const;
    std::string str() const;
};

/// Parses e.g. "2 O3 O4 W+5 W+4 W-5 O4 U3 U2 E1"; "B" denotes the based puncture 0.
CombCurve parse_curve(const std::string& text, int n, bool based = false);
/// Throws DomainError describing the first defect.
void check_curve(const CombCurve& c);

ProjComplex curve_to_complex(const CombCurve& c, const AlgebraPtr& alg);

struct CrossingCount {
    int transverse = 0;
    int endpoints = 0;
};

/// Intersections with the straight arc joining punctures i and i+1.
CrossingCount crossings_with_standard_arc(const CombCurve& c, int i);

}  // namespace zzc
