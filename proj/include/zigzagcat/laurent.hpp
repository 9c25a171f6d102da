#pragma once

#include <map>
#include <string>
#include <vector>

namespace zzc {

/// Integer Laurent polynomial in q. Arithmetic throws std::overflow_error on 64-bit overflow.
class Laurent {
public:
    Laurent() = default;
    Laurent(long long c, int e = 0);
    static Laurent q(int e = 1) { return Laurent(1, e); }

    bool zero() const { return c_.empty(); }
    long long coef(int e) const;
    const std::map<int, long long>& coefs() const { return c_; }

    Laurent& operator+=(const Laurent& o);
    Laurent& operator-=(const Laurent& o);
    Laurent operator+(const Laurent& o) const { Laurent r = *this; r += o; return r; }
    Laurent operator-(const Laurent& o) const { Laurent r = *this; r -= o; return r; }
    Laurent operator-() const;
    Laurent operator*(const Laurent& o) const;
    /// q -> q^{-1}
    Laurent bar() const;

    bool operator==(const Laurent& o) const { return c_ == o.c_; }
    bool operator!=(const Laurent& o) const { return c_ != o.c_; }

    /// Highest power first, e.g. "-q^2+1", "q^-1", "0".
    std::string str() const;
    static Laurent parse(const std::string& s);

private:
    void add_term(int e, long long c);
    std::map<int, long long> c_;
};

/// Element of V_q in the basis alpha_i, indexed by vertex offset.
struct LaurentVector {
    int offset = 1;
    std::vector<Laurent> v;

    Laurent& at(int vertex) { return v.at(vertex - offset); }
    const Laurent& at(int vertex) const { return v.at(vertex - offset); }
    bool operator==(const LaurentVector& o) const { return offset == o.offset && v == o.v; }
    std::string str() const;
};

/// Square matrix; columns are images of basis vectors.
class LaurentMatrix {
public:
    LaurentMatrix() = default;
    LaurentMatrix(int n, int offset = 1);
    static LaurentMatrix identity(int n, int offset = 1);

    int size() const { return n_; }
    int offset() const { return off_; }
    Laurent& at(int row, int col) { return a_.at((row - off_) * n_ + (col - off_)); }
    const Laurent& at(int row, int col) const { return a_.at((row - off_) * n_ + (col - off_)); }
    LaurentVector column(int col) const;

    LaurentMatrix operator*(const LaurentMatrix& o) const;
    LaurentMatrix transpose() const;
    LaurentMatrix bar() const;
    Laurent det() const;
    bool operator==(const LaurentMatrix& o) const { return n_ == o.n_ && off_ == o.off_ && a_ == o.a_; }
    bool operator!=(const LaurentMatrix& o) const { return !(*this == o); }

private:
    int n_ = 0;
    int off_ = 1;
    std::vector<Laurent> a_;
};

}  // namespace zzc
