#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "zigzagcat/laurent.hpp"
#include "zigzagcat/zigzag.hpp"

namespace zzc {

/// P_v placed in homological degree k, with path shift <l> and orientation shift {m}.
struct GenLabel {
    int v = 1;
    int k = 0;
    int l = 0;
    int m = 0;

    std::string str() const;
    bool operator==(const GenLabel&) const = default;
    /// Canonical order: (k, v, l, m).
    bool operator<(const GenLabel& o) const {
        return std::tie(k, v, l, m) < std::tie(o.k, o.v, o.l, o.m);
    }
};

/// Bounded complex of shifted indecomposable projectives.
/// Entry (a,b) is the map from generator b to generator a.
class ProjComplex {
public:
    using Key = std::pair<int, int>;  // (target, source)

    ProjComplex() = default;
    explicit ProjComplex(AlgebraPtr alg) : alg_(std::move(alg)) {}
    static ProjComplex projective(AlgebraPtr alg, int v, int k = 0, int l = 0, int m = 0);

    const AlgebraPtr& algebra() const { return alg_; }
    const ZigzagAlgebra& alg() const { return *alg_; }
    int size() const { return static_cast<int>(gens_.size()); }
    bool empty() const { return gens_.empty(); }
    const std::vector<GenLabel>& gens() const { return gens_; }
    const GenLabel& gen(int i) const { return gens_.at(i); }
    const std::map<Key, AlgebraElement>& entries() const { return d_; }

    int add_generator(const GenLabel& g);
    void set_entry(int target, int source, AlgebraElement e);
    void add_to_entry(int target, int source, const AlgebraElement& e);
    AlgebraElement entry(int target, int source) const;

    ProjComplex shifted(int dk, int dl, int dm) const;
    /// Same complex with differential scaled by -1.
    ProjComplex negated() const;
    /// Generators reordered canonically (stable for equal labels).
    ProjComplex sorted() const;
    std::vector<GenLabel> sorted_labels() const;

    /// e.g. "P1 -> P2<-1>" for strings, otherwise a generator list plus arrows.
    std::string str() const;

private:
    AlgebraPtr alg_;
    std::vector<GenLabel> gens_;
    std::map<Key, AlgebraElement> d_;
};

ProjComplex direct_sum(const ProjComplex& a, const ProjComplex& b);

struct ValidationReport {
    bool ok = true;
    std::string message;
};

ValidationReport validate(const ProjComplex& c);

/// Minimal homotopy-equivalent complex; pivots taken in generator order, output sorted.
ProjComplex gaussian_reduce(const ProjComplex& c);

/// (homological degree, path degree, orientation degree) of a graded map.
struct HomDeg {
    int h = 0;
    int dl = 0;
    int dm = 0;
    auto operator<=>(const HomDeg&) const = default;
};

struct HomDims {
    std::map<HomDeg, int> graded;
    int total() const;
    std::map<int, int> by_homdeg() const;
};

/// Homology of the Hom complex Hom(from, to).
HomDims hom_dims(const ProjComplex& from, const ProjComplex& to);

/// A chain map representing a homology class: entries keyed by (target gen in `to`, source gen in `from`).
struct HomClass {
    HomDeg deg;
    std::map<std::pair<int, int>, AlgebraElement> entries;
};

std::vector<HomClass> hom_basis_reps(const ProjComplex& from, const ProjComplex& to);

/// For the functional f -> coefficient of p in the component of f from generator a (of `from`)
/// to generator b (of `to`): true iff it vanishes on boundaries and not on cycles, i.e. it
/// detects a nonzero homology class.
bool component_detects_class(const ProjComplex& from, const ProjComplex& to, int a, int b, const Path& p);

bool is_isomorphic(const ProjComplex& a, const ProjComplex& b);

LaurentVector euler_class(const ProjComplex& c);

}  // namespace zzc
