#include "zigzagcat/zigzag.hpp"

#include <algorithm>
#include <cctype>

namespace zzc {

std::string Path::name() const {
    switch (kind) {
        case Idem: return "e" + std::to_string(s);
        case Loop: return "x" + std::to_string(s);
        default: return "a" + std::to_string(s) + "_" + std::to_string(t);
    }
}

Path Path::parse(const std::string& s) {
    auto num = [&](const std::string& t) {
        if (t.empty() || !std::all_of(t.begin(), t.end(), [](unsigned char c) { return std::isdigit(c); }))
            throw std::invalid_argument("malformed path '" + s + "'");
        return std::stoi(t);
    };
    if (s.size() < 2) throw std::invalid_argument("malformed path '" + s + "'");
    if (s[0] == 'e') return e(num(s.substr(1)));
    if (s[0] == 'x') return x(num(s.substr(1)));
    if (s[0] == 'a') {
        auto us = s.find('_');
        if (us == std::string::npos) throw std::invalid_argument("malformed path '" + s + "'");
        return arrow(num(s.substr(1, us - 1)), num(s.substr(us + 1)));
    }
    throw std::invalid_argument("malformed path '" + s + "'");
}

AlgebraElement::AlgebraElement(const Path& p, mpq_class c) {
    if (c != 0) terms_.push_back({p, std::move(c)});
}

mpq_class AlgebraElement::coef(const Path& p) const {
    for (const auto& t : terms_)
        if (t.path == p) return t.coef;
    return 0;
}

mpq_class AlgebraElement::idem_coef() const {
    for (const auto& t : terms_)
        if (t.path.kind == Path::Idem) return t.coef;
    return 0;
}

void AlgebraElement::add(const Path& p, const mpq_class& c) {
    if (c == 0) return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), p,
                               [](const Term& t, const Path& q) { return t.path < q; });
    if (it != terms_.end() && it->path == p) {
        it->coef += c;
        if (it->coef == 0) terms_.erase(it);
    } else {
        terms_.insert(it, Term{p, c});
    }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
    for (const auto& t : o.terms_) add(t.path, t.coef);
    return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
    for (const auto& t : o.terms_) add(t.path, -t.coef);
    return *this;
}

AlgebraElement AlgebraElement::operator-() const { return scaled(-1); }

AlgebraElement AlgebraElement::scaled(const mpq_class& c) const {
    AlgebraElement r;
    if (c == 0) return r;
    r.terms_ = terms_;
    for (auto& t : r.terms_) t.coef *= c;
    return r;
}

bool AlgebraElement::operator==(const AlgebraElement& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (!(terms_[i].path == o.terms_[i].path) || terms_[i].coef != o.terms_[i].coef) return false;
    return true;
}

std::string AlgebraElement::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (size_t i = 0; i < terms_.size(); ++i) {
        const auto& t = terms_[i];
        std::string c = t.coef.get_str();
        if (i) {
            if (c[0] == '-') {
                s += " - ";
                c = c.substr(1);
            } else {
                s += " + ";
            }
        } else if (c[0] == '-') {
            s += "-";
            c = c.substr(1);
        }
        if (c != "1") s += c + "*";
        s += t.path.name();
    }
    return s;
}

ZigzagAlgebra::ZigzagAlgebra(CoxeterGraph g) : g_(std::move(g)), off_(g_.min_vertex()) {
    int sz = g_.rank() + 1 - off_;
    hom_.assign(sz, std::vector<std::vector<HomBasisEntry>>(sz));
    for (int i : g_.vertices()) {
        for (int j : g_.vertices()) {
            auto& hb = hom_[i - off_][j - off_];
            if (i == j) {
                hb.push_back({Path::e(i), 0, 0});
                if (!(g_.based() && i == 0)) hb.push_back({Path::x(i), 2, 1});
            } else if (g_.adjacent(i, j)) {
                hb.push_back({Path::arrow(i, j), 1, g_.oriented(i, j) ? 0 : 1});
            }
        }
    }
}

bool ZigzagAlgebra::valid_path(const Path& p) const {
    if (!g_.has_vertex(p.s) || !g_.has_vertex(p.t)) return false;
    switch (p.kind) {
        case Path::Idem: return p.s == p.t;
        case Path::Loop: return p.s == p.t && !(g_.based() && p.s == 0);
        default: return g_.adjacent(p.s, p.t);
    }
}

int ZigzagAlgebra::odeg(const Path& p) const {
    switch (p.kind) {
        case Path::Idem: return 0;
        case Path::Loop: return 1;
        default: return g_.oriented(p.s, p.t) ? 0 : 1;
    }
}

AlgebraElement ZigzagAlgebra::multiply_paths(const Path& a, const Path& b) const {
    if (a.t != b.s) return {};
    if (a.kind == Path::Idem) return AlgebraElement(b);
    if (b.kind == Path::Idem) return AlgebraElement(a);
    if (a.kind == Path::Arrow && b.kind == Path::Arrow && a.s == b.t) {
        if (g_.based() && a.s == 0) return {};
        return AlgebraElement(Path::x(a.s));
    }
    return {};
}

AlgebraElement ZigzagAlgebra::multiply(const AlgebraElement& a, const AlgebraElement& b) const {
    AlgebraElement r;
    for (const auto& ta : a.terms())
        for (const auto& tb : b.terms()) {
            auto p = multiply_paths(ta.path, tb.path);
            for (const auto& tp : p.terms()) r.add(tp.path, tp.coef * ta.coef * tb.coef);
        }
    return r;
}

const std::vector<HomBasisEntry>& ZigzagAlgebra::hom_basis(int i, int j) const {
    static const std::vector<HomBasisEntry> empty;
    if (!g_.has_vertex(i) || !g_.has_vertex(j)) return empty;
    return hom_[i - off_][j - off_];
}

Path ZigzagAlgebra::dual(const Path& b) const {
    switch (b.kind) {
        case Path::Idem: return Path::x(b.s);
        case Path::Loop: return Path::e(b.s);
        default: return Path::arrow(b.t, b.s);
    }
}

std::vector<Path> ZigzagAlgebra::basis() const {
    std::vector<Path> out;
    for (int i : g_.vertices())
        for (int j : g_.vertices())
            for (const auto& h : hom_basis(i, j)) out.push_back(h.path);
    return out;
}

AlgebraPtr make_algebra(const CoxeterGraph& g) { return std::make_shared<const ZigzagAlgebra>(g); }

}  // namespace zzc
