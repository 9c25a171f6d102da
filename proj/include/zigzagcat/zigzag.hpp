#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>
#include <vector>

#include "zigzagcat/coxeter.hpp"

namespace zzc {

/// A basis path of the zigzag algebra: e_s, the arrow (s|t), or the loop x_s.
struct Path {
    enum Kind : int { Idem = 0, Arrow = 1, Loop = 2 };
    Kind kind = Idem;
    int s = 0;
    int t = 0;

    static Path e(int i) { return {Idem, i, i}; }
    static Path arrow(int i, int j) { return {Arrow, i, j}; }
    static Path x(int i) { return {Loop, i, i}; }

    int pathdeg() const { return kind == Idem ? 0 : kind == Arrow ? 1 : 2; }
    std::string name() const;
    static Path parse(const std::string& s);

    auto operator<=>(const Path&) const = default;
};

struct Term {
    Path path;
    mpq_class coef;
};

/// Finite rational combination of basis paths, kept sorted with no zero terms.
class AlgebraElement {
public:
    AlgebraElement() = default;
    AlgebraElement(const Path& p, mpq_class c = 1);

    bool zero() const { return terms_.empty(); }
    const std::vector<Term>& terms() const { return terms_; }
    mpq_class coef(const Path& p) const;
    /// Coefficient of the idempotent term, whichever vertex it sits at.
    mpq_class idem_coef() const;

    void add(const Path& p, const mpq_class& c);
    AlgebraElement& operator+=(const AlgebraElement& o);
    AlgebraElement& operator-=(const AlgebraElement& o);
    AlgebraElement operator+(const AlgebraElement& o) const { AlgebraElement r = *this; r += o; return r; }
    AlgebraElement operator-(const AlgebraElement& o) const { AlgebraElement r = *this; r -= o; return r; }
    AlgebraElement operator-() const;
    AlgebraElement scaled(const mpq_class& c) const;

    bool operator==(const AlgebraElement& o) const;
    std::string str() const;

private:
    std::vector<Term> terms_;
};

struct HomBasisEntry {
    Path path;
    int pathdeg;
    int odeg;
};

/// The zigzag algebra of an oriented Coxeter graph (optionally based: x_0 = 0).
class ZigzagAlgebra {
public:
    explicit ZigzagAlgebra(CoxeterGraph g);

    const CoxeterGraph& graph() const { return g_; }

    bool valid_path(const Path& p) const;
    int odeg(const Path& p) const;
    AlgebraElement multiply_paths(const Path& a, const Path& b) const;
    AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) const;

    /// Basis of e_i A e_j, i.e. of maps P_i -> P_j given by right multiplication.
    const std::vector<HomBasisEntry>& hom_basis(int i, int j) const;
    /// The element of hom_basis(j,i) paired with b under the Frobenius trace.
    Path dual(const Path& b) const;

    std::vector<Path> basis() const;

private:
    CoxeterGraph g_;
    int off_ = 0;
    std::vector<std::vector<std::vector<HomBasisEntry>>> hom_;
};

using AlgebraPtr = std::shared_ptr<const ZigzagAlgebra>;

AlgebraPtr make_algebra(const CoxeterGraph& g);

}  // namespace zzc
