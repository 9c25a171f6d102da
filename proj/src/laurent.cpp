#include "zigzagcat/laurent.hpp"

#include <cctype>
#include <stdexcept>

namespace zzc {

namespace {

long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("Laurent coefficient overflow");
    return r;
}

long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("Laurent coefficient overflow");
    return r;
}

}  // namespace

Laurent::Laurent(long long c, int e) {
    if (c != 0) c_[e] = c;
}

long long Laurent::coef(int e) const {
    auto it = c_.find(e);
    return it == c_.end() ? 0 : it->second;
}

void Laurent::add_term(int e, long long c) {
    if (c == 0) return;
    auto [it, fresh] = c_.try_emplace(e, c);
    if (!fresh) {
        it->second = checked_add(it->second, c);
        if (it->second == 0) c_.erase(it);
    }
}

Laurent& Laurent::operator+=(const Laurent& o) {
    for (auto [e, c] : o.c_) add_term(e, c);
    return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
    for (auto [e, c] : o.c_) add_term(e, checked_mul(c, -1));
    return *this;
}

Laurent Laurent::operator-() const {
    Laurent r;
    for (auto [e, c] : c_) r.c_[e] = checked_mul(c, -1);
    return r;
}

Laurent Laurent::operator*(const Laurent& o) const {
    Laurent r;
    for (auto [e1, c1] : c_)
        for (auto [e2, c2] : o.c_) r.add_term(e1 + e2, checked_mul(c1, c2));
    return r;
}

Laurent Laurent::bar() const {
    Laurent r;
    for (auto [e, c] : c_) r.c_[-e] = c;
    return r;
}

std::string Laurent::str() const {
    if (c_.empty()) return "0";
    std::string s;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        auto [e, c] = *it;
        long long a = c < 0 ? -c : c;
        if (c < 0)
            s += "-";
        else if (!s.empty())
            s += "+";
        if (e == 0) {
            s += std::to_string(a);
            continue;
        }
        if (a != 1) s += std::to_string(a) + "*";
        s += "q";
        if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
}

Laurent Laurent::parse(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw std::invalid_argument("empty Laurent polynomial");
    Laurent r;
    size_t i = 0;
    auto read_int = [&](long long& out) {
        size_t st = i;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (st == i || (i == st + 1 && !std::isdigit(static_cast<unsigned char>(s[st]))))
            throw std::invalid_argument("malformed Laurent polynomial '" + text + "'");
        out = std::stoll(s.substr(st, i - st));
    };
    while (i < s.size()) {
        long long sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (i != 0) {
            throw std::invalid_argument("malformed Laurent polynomial '" + text + "'");
        }
        long long coef = 1;
        bool have_coef = false;
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            read_int(coef);
            have_coef = true;
        }
        int e = 0;
        if (i < s.size() && s[i] == '*') {
            if (!have_coef) throw std::invalid_argument("malformed Laurent polynomial '" + text + "'");
            ++i;
        }
        if (i < s.size() && s[i] == 'q') {
            ++i;
            e = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                long long ee;
                read_int(ee);
                e = static_cast<int>(ee);
            }
        } else if (!have_coef) {
            throw std::invalid_argument("malformed Laurent polynomial '" + text + "'");
        }
        r.add_term(e, sign * coef);
    }
    return r;
}

std::string LaurentVector::str() const {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i].zero()) continue;
        if (!s.empty()) s += " + ";
        s += "(" + v[i].str() + ")a" + std::to_string(i + offset);
    }
    return s.empty() ? "0" : s;
}

LaurentMatrix::LaurentMatrix(int n, int offset) : n_(n), off_(offset), a_(static_cast<size_t>(n) * n) {}

LaurentMatrix LaurentMatrix::identity(int n, int offset) {
    LaurentMatrix m(n, offset);
    for (int i = 0; i < n; ++i) m.a_[i * n + i] = Laurent(1);
    return m;
}

LaurentVector LaurentMatrix::column(int col) const {
    LaurentVector v{off_, {}};
    for (int r = 0; r < n_; ++r) v.v.push_back(a_[r * n_ + (col - off_)]);
    return v;
}

LaurentMatrix LaurentMatrix::operator*(const LaurentMatrix& o) const {
    if (n_ != o.n_ || off_ != o.off_) throw std::invalid_argument("matrix size mismatch");
    LaurentMatrix r(n_, off_);
    for (int i = 0; i < n_; ++i)
        for (int k = 0; k < n_; ++k) {
            const Laurent& x = a_[i * n_ + k];
            if (x.zero()) continue;
            for (int j = 0; j < n_; ++j)
                if (!o.a_[k * n_ + j].zero()) r.a_[i * n_ + j] += x * o.a_[k * n_ + j];
        }
    return r;
}

LaurentMatrix LaurentMatrix::transpose() const {
    LaurentMatrix r(n_, off_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) r.a_[j * n_ + i] = a_[i * n_ + j];
    return r;
}

LaurentMatrix LaurentMatrix::bar() const {
    LaurentMatrix r(n_, off_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i].bar();
    return r;
}

Laurent LaurentMatrix::det() const {
    // Laplace expansion along the first row; sizes here are tiny.
    if (n_ == 0) return Laurent(1);
    if (n_ == 1) return a_[0];
    Laurent d;
    for (int c = 0; c < n_; ++c) {
        if (a_[c].zero()) continue;
        LaurentMatrix minor(n_ - 1, off_);
        for (int i = 1; i < n_; ++i)
            for (int j = 0, jj = 0; j < n_; ++j) {
                if (j == c) continue;
                minor.a_[(i - 1) * (n_ - 1) + jj++] = a_[i * n_ + j];
            }
        Laurent t = a_[c] * minor.det();
        if (c % 2) d -= t; else d += t;
    }
    return d;
}

}  // namespace zzc
