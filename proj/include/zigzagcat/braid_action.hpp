#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "zigzagcat/complex.hpp"
#include "zigzagcat/coxeter.hpp"

namespace zzc {

/// One letter of the action, before reduction.
ProjComplex apply_generator(int letter, const ProjComplex& c);

/// Letters are applied right to left, reducing after each one when `reduce` is set.
ProjComplex apply_word(const BraidWord& w, const ProjComplex& c, bool reduce = true);

std::uint64_t label_digest(const ProjComplex& c);

/// The reduced images of every P_i; a complete invariant of the braid in the covered types.
struct CanonicalTuple {
    std::vector<ProjComplex> comps;
    std::uint64_t digest = 0;

    bool equals(const CanonicalTuple& o) const;
};

CanonicalTuple canonical_tuple(const AlgebraPtr& alg, const BraidWord& w);
CanonicalTuple tuple_of(std::vector<ProjComplex> comps);
CanonicalTuple left_multiply(const CanonicalTuple& t, const BraidWord& w);

/// Deduplicating store of group elements keyed by canonical tuples.
class ElementStore {
public:
    /// Index of an equal stored element, or -1.
    int find(const CanonicalTuple& t) const;
    /// Returns (index, inserted).
    std::pair<int, bool> insert(CanonicalTuple t);
    const CanonicalTuple& at(int i) const { return items_.at(i); }
    int size() const { return static_cast<int>(items_.size()); }

private:
    std::vector<CanonicalTuple> items_;
    std::unordered_map<std::uint64_t, std::vector<int>> buckets_;
};

/// END total dimension 2, with the identity class in degree (0,0,0).
bool is_spherical(const ProjComplex& c);

/// sign +1: cone of Hom(C,X) (x) C -> X. sign -1: the inverse twist. Result is reduced.
ProjComplex spherical_twist(const ProjComplex& cobj, const ProjComplex& x, int sign);

enum class DehornoySign { Negative = -1, Zero = 0, Positive = 1 };
std::string to_string(DehornoySign s);

/// The test object P_0 -> P_1<-1> -> ... -> P_j<-j> over the based algebra.
ProjComplex based_test_object(const AlgebraPtr& based, int j);

DehornoySign dehornoy_sign(const CoxeterGraph& g, const BraidWord& w);

}  // namespace zzc
