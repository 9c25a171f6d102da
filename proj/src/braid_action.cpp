#include "zigzagcat/braid_action.hpp"

#include <algorithm>

#include "zigzagcat/linalg.hpp"

namespace zzc {

ProjComplex apply_generator(int letter, const ProjComplex& c) {
    const auto& A = c.alg();
    int i = std::abs(letter);
    if (letter == 0 || i > A.graph().rank()) throw DomainError("generator " + std::to_string(letter) + " is not a vertex");
    bool inv = letter < 0;
    ProjComplex r(c.algebra());
    struct Copy {
        Path b;
        int idx;
    };
    std::vector<int> part(c.size());
    std::vector<std::vector<Copy>> copies(c.size());
    for (int g = 0; g < c.size(); ++g) {
        const auto& lab = c.gen(g);
        part[g] = r.add_generator(lab);
        for (const auto& hb : A.hom_basis(i, lab.v)) {
            if (!inv) {
                int idx = r.add_generator({i, lab.k - 1, lab.l + hb.pathdeg, lab.m + hb.odeg});
                r.set_entry(part[g], idx, AlgebraElement(hb.path));
                copies[g].push_back({hb.path, idx});
            } else {
                Path bs = A.dual(hb.path);
                int pd = bs.pathdeg(), od = A.odeg(bs);
                int idx = r.add_generator({i, lab.k + 1, lab.l - pd, lab.m - od});
                r.set_entry(idx, part[g], AlgebraElement(bs));
                copies[g].push_back({hb.path, idx});
            }
        }
    }
    for (const auto& [key, a] : c.entries()) {
        int tgt = key.first, src = key.second;
        r.set_entry(part[tgt], part[src], a);
        for (const auto& cb : copies[src]) {
            AlgebraElement ba = A.multiply(AlgebraElement(cb.b), a);
            if (ba.zero()) continue;
            for (const auto& cb2 : copies[tgt]) {
                mpq_class k = ba.coef(cb2.b);
                if (k != 0) r.set_entry(cb2.idx, cb.idx, AlgebraElement(Path::e(i), -k));
            }
        }
    }
    return r;
}

ProjComplex apply_word(const BraidWord& w, const ProjComplex& c, bool reduce) {
    ProjComplex cur = c;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        cur = apply_generator(*it, cur);
        if (reduce) cur = gaussian_reduce(cur);
    }
    return cur;
}

std::uint64_t label_digest(const ProjComplex& c) {
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&](std::int64_t x) {
        for (int b = 0; b < 8; ++b) {
            h ^= static_cast<std::uint64_t>(x >> (8 * b)) & 0xff;
            h *= 1099511628211ULL;
        }
    };
    for (const auto& g : c.sorted_labels()) {
        mix(g.v);
        mix(g.k);
        mix(g.l);
        mix(g.m);
    }
    mix(c.size());
    return h;
}

bool CanonicalTuple::equals(const CanonicalTuple& o) const {
    if (digest != o.digest || comps.size() != o.comps.size()) return false;
    for (size_t i = 0; i < comps.size(); ++i)
        if (!is_isomorphic(comps[i], o.comps[i])) return false;
    return true;
}

CanonicalTuple tuple_of(std::vector<ProjComplex> comps) {
    CanonicalTuple t;
    t.digest = 0x9e3779b97f4a7c15ULL;
    for (const auto& c : comps) t.digest = (t.digest ^ label_digest(c)) * 0x100000001b3ULL + 0x632be59bd9b4e019ULL;
    t.comps = std::move(comps);
    return t;
}

CanonicalTuple canonical_tuple(const AlgebraPtr& alg, const BraidWord& w) {
    check_word(alg->graph(), w);
    std::vector<ProjComplex> comps;
    for (int v : alg->graph().generator_vertices())
        comps.push_back(apply_word(w, ProjComplex::projective(alg, v)));
    return tuple_of(std::move(comps));
}

CanonicalTuple left_multiply(const CanonicalTuple& t, const BraidWord& w) {
    std::vector<ProjComplex> comps;
    for (const auto& c : t.comps) comps.push_back(apply_word(w, c));
    return tuple_of(std::move(comps));
}

int ElementStore::find(const CanonicalTuple& t) const {
    auto it = buckets_.find(t.digest);
    if (it == buckets_.end()) return -1;
    for (int i : it->second)
        if (items_[i].equals(t)) return i;
    return -1;
}

std::pair<int, bool> ElementStore::insert(CanonicalTuple t) {
    int f = find(t);
    if (f >= 0) return {f, false};
    int idx = static_cast<int>(items_.size());
    buckets_[t.digest].push_back(idx);
    items_.push_back(std::move(t));
    return {idx, true};
}

bool is_spherical(const ProjComplex& c) {
    if (c.empty()) return false;
    auto d = hom_dims(c, c);
    auto it = d.graded.find(HomDeg{0, 0, 0});
    return d.total() == 2 && it != d.graded.end() && it->second == 1;
}

ProjComplex spherical_twist(const ProjComplex& cobj, const ProjComplex& x, int sign) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("twist sign must be +1 or -1");
    if (!is_spherical(cobj)) throw DomainError("twist object is not spherical");
    ProjComplex r = x;
    if (sign == 1) {
        for (const auto& rep : hom_basis_reps(cobj, x)) {
            const auto& d = rep.deg;
            int off = r.size();
            mpq_class s = (d.h % 2 == 0) ? -1 : 1;
            for (const auto& g : cobj.gens()) r.add_generator({g.v, g.k + d.h - 1, g.l + d.dl, g.m + d.dm});
            for (const auto& [key, e] : cobj.entries()) r.set_entry(key.first + off, key.second + off, e.scaled(s));
            for (const auto& [key, e] : rep.entries) r.add_to_entry(key.first, key.second + off, e);
        }
    } else {
        for (const auto& rep : hom_basis_reps(x, cobj)) {
            const auto& d = rep.deg;
            int off = r.size();
            mpq_class s = (d.h % 2 == 0) ? -1 : 1;
            for (const auto& g : cobj.gens()) r.add_generator({g.v, g.k - d.h + 1, g.l - d.dl, g.m - d.dm});
            for (const auto& [key, e] : cobj.entries()) r.set_entry(key.first + off, key.second + off, e.scaled(s));
            for (const auto& [key, e] : rep.entries) r.add_to_entry(key.first + off, key.second, e);
        }
    }
    return gaussian_reduce(r);
}

std::string to_string(DehornoySign s) {
    switch (s) {
        case DehornoySign::Positive: return "positive";
        case DehornoySign::Negative: return "negative";
        default: return "zero";
    }
}

ProjComplex based_test_object(const AlgebraPtr& based, int j) {
    ProjComplex c(based);
    for (int v = 0; v <= j; ++v) {
        c.add_generator({v, v, -v, 0});
        if (v) c.set_entry(v, v - 1, AlgebraElement(Path::arrow(v - 1, v)));
    }
    return c;
}

namespace {

bool fixed_up_to_shift(const ProjComplex& t, const ProjComplex& b) {
    if (t.size() != b.size()) return false;
    auto lt = t.sorted_labels(), lb = b.sorted_labels();
    int dk = lb[0].k - lt[0].k, dl = lb[0].l - lt[0].l, dm = lb[0].m - lt[0].m;
    return is_isomorphic(t.shifted(dk, dl, dm), b);
}

int find_vertex(const ProjComplex& c, int v) {
    for (int i = 0; i < c.size(); ++i)
        if (c.gen(i).v == v) return i;
    return -1;
}

bool identity_class_survives(const ProjComplex& from, const ProjComplex& to) {
    int a = find_vertex(from, 0), b = find_vertex(to, 0);
    if (a < 0 || b < 0) return false;
    return component_detects_class(from, to, a, b, Path::e(0));
}

}  // namespace

DehornoySign dehornoy_sign(const CoxeterGraph& g, const BraidWord& w) {
    check_word(g, w);
    auto based = make_algebra(based_extension(g));
    for (int j = 0; j <= g.rank(); ++j) {
        ProjComplex t = based_test_object(based, j);
        ProjComplex b = apply_word(w, t);
        if (fixed_up_to_shift(t, b)) continue;
        bool fwd = identity_class_survives(t, b);
        bool bwd = identity_class_survives(b, t);
        if (fwd && !bwd) return DehornoySign::Positive;
        if (bwd && !fwd) return DehornoySign::Negative;
        throw DomainError("identity-induced maps do not single out a sign");
    }
    return DehornoySign::Zero;
}

}  // namespace zzc
