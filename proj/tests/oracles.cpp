#include "oracles.hpp"

#include <algorithm>
#include <set>

#include "zigzagcat/burau.hpp"

namespace oracle {

using namespace zzc;

int dense_rank(std::vector<Row> m) {
    int r = 0;
    if (m.empty()) return 0;
    size_t cols = m[0].size();
    for (size_t c = 0; c < cols && r < static_cast<int>(m.size()); ++c) {
        int p = -1;
        for (size_t i = r; i < m.size(); ++i)
            if (m[i][c] != 0) {
                p = static_cast<int>(i);
                break;
            }
        if (p < 0) continue;
        std::swap(m[r], m[p]);
        for (size_t i = 0; i < m.size(); ++i) {
            if (static_cast<int>(i) == r || m[i][c] == 0) continue;
            mpq_class f = m[i][c] / m[r][c];
            for (size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
        }
        ++r;
    }
    return r;
}

PathQuotient::PathQuotient(const CoxeterGraph& g) : g_(g) {
    for (int i : g.vertices()) {
        auto nb = g.neighbours(i);
        for (int j : nb)
            for (int k : g.neighbours(j))
                if (k != i) relations_.push_back({{{i, j, k}, 1}});
        for (size_t a = 1; a < nb.size(); ++a) relations_.push_back({{{i, nb[0], i}, 1}, {{i, nb[a], i}, -1}});
    }
    if (g.based()) relations_.push_back({{{0, 1, 0}, 1}});
}

std::vector<PathQuotient::Seq> PathQuotient::paths(int i, int j, int len) const {
    std::vector<Seq> out;
    if (len == 0 && i == j) out.push_back({i});
    if (len == 1 && g_.adjacent(i, j)) out.push_back({i, j});
    if (len == 2)
        for (int k : g_.neighbours(i))
            if (g_.adjacent(k, j)) out.push_back({i, k, j});
    return out;
}

namespace {

std::vector<Row> block_rows(const std::vector<PathQuotient::Combo>& rels, const std::vector<PathQuotient::Seq>& basis) {
    std::vector<Row> rows;
    for (const auto& r : rels) {
        if (std::find(basis.begin(), basis.end(), r.begin()->first) == basis.end()) continue;
        Row row(basis.size());
        for (const auto& [s, c] : r) row[std::find(basis.begin(), basis.end(), s) - basis.begin()] = c;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace

int PathQuotient::dim(int i, int j, int len) const {
    auto basis = paths(i, j, len);
    return static_cast<int>(basis.size()) - dense_rank(block_rows(relations_, basis));
}

bool PathQuotient::vanishes(const Combo& c) const {
    if (c.empty()) return true;
    const Seq& s = c.begin()->first;
    if (s.size() > 3) return true;
    auto basis = paths(s.front(), s.back(), static_cast<int>(s.size()) - 1);
    auto rows = block_rows(relations_, basis);
    int before = dense_rank(rows);
    Row v(basis.size());
    for (const auto& [t, x] : c) v[std::find(basis.begin(), basis.end(), t) - basis.begin()] += x;
    rows.push_back(v);
    return dense_rank(rows) == before;
}

PathQuotient::Seq as_seq(const CoxeterGraph& g, const Path& p) {
    switch (p.kind) {
        case Path::Idem: return {p.s};
        case Path::Arrow: return {p.s, p.t};
        default: return {p.s, g.neighbours(p.s).back(), p.s};
    }
}

std::map<int, int> hom_by_degree(const ProjComplex& from, const ProjComplex& to) {
    const auto& alg = from.alg();
    struct Basis {
        int a, b;
        Path p;
    };
    auto maps_of = [&](int h) {
        std::vector<Basis> out;
        for (int a = 0; a < from.size(); ++a)
            for (int b = 0; b < to.size(); ++b)
                if (to.gen(b).k == from.gen(a).k + h)
                    for (const auto& e : alg.hom_basis(from.gen(a).v, to.gen(b).v)) out.push_back({a, b, e.path});
        return out;
    };
    // Matrix of D : Hom^h -> Hom^{h+1}, columns indexed by basis maps of degree h.
    auto rank_of_d = [&](int h) {
        auto src = maps_of(h), dst = maps_of(h + 1);
        if (src.empty() || dst.empty()) return 0;
        std::vector<Row> cols;
        int sign = h % 2 == 0 ? 1 : -1;
        for (const auto& f : src) {
            Row col(dst.size());
            auto put = [&](int a, int b, const AlgebraElement& e, int s) {
                for (const auto& t : e.terms())
                    for (size_t i = 0; i < dst.size(); ++i)
                        if (dst[i].a == a && dst[i].b == b && dst[i].p == t.path) col[i] += t.coef * s;
            };
            AlgebraElement fe(f.p);
            for (const auto& [key, d] : to.entries())
                if (key.second == f.b) put(f.a, key.first, alg.multiply(fe, d), 1);
            for (const auto& [key, d] : from.entries())
                if (key.first == f.a) put(key.second, f.b, alg.multiply(d, fe), -sign);
            cols.push_back(col);
        }
        return dense_rank(cols);
    };
    std::set<int> degs;
    for (const auto& x : from.gens())
        for (const auto& y : to.gens()) degs.insert(y.k - x.k);
    std::map<int, int> out;
    for (int h : degs) {
        int n = static_cast<int>(maps_of(h).size());
        int dim = n - rank_of_d(h) - rank_of_d(h - 1);
        if (dim) out[h] = dim;
    }
    return out;
}

namespace {

int gen_of(int x) { return x < 0 ? -x : x; }
int sgn(int x) { return x < 0 ? -1 : 1; }

}  // namespace

int handle_sign(BraidWord w) {
    for (;;) {
        int best_end = -1, best_start = -1;
        for (int k = 0; k < static_cast<int>(w.size()) && best_end < 0; ++k) {
            int i = gen_of(w[k]);
            for (int s = k - 1; s >= 0; --s) {
                if (gen_of(w[s]) < i) break;
                if (gen_of(w[s]) == i) {
                    if (sgn(w[s]) != sgn(w[k])) {
                        best_start = s;
                        best_end = k;
                    }
                    break;
                }
            }
        }
        if (best_end < 0) break;
        int i = gen_of(w[best_start]), e = sgn(w[best_start]);
        BraidWord mid;
        for (int k = best_start + 1; k < best_end; ++k) {
            if (gen_of(w[k]) == i + 1) {
                mid.push_back(-e * (i + 1));
                mid.push_back(sgn(w[k]) * i);
                mid.push_back(e * (i + 1));
            } else {
                mid.push_back(w[k]);
            }
        }
        BraidWord next(w.begin(), w.begin() + best_start);
        next.insert(next.end(), mid.begin(), mid.end());
        next.insert(next.end(), w.begin() + best_end + 1, w.end());
        w = next;
    }
    if (w.empty()) return 0;
    int lo = gen_of(*std::min_element(w.begin(), w.end(), [](int a, int b) { return gen_of(a) < gen_of(b); }));
    for (int x : w)
        if (gen_of(x) == lo) return sgn(x);
    return 0;
}

std::vector<int> burau_sphere_sizes(int radius) {
    auto g = CoxeterGraph::type_a(2);
    auto key = [](const LaurentMatrix& m) {
        std::string s;
        for (int r = 1; r <= 2; ++r)
            for (int c = 1; c <= 2; ++c) s += m.at(r, c).str() + ";";
        return s;
    };
    std::vector<LaurentMatrix> gens;
    for (int x : {1, -1, 2, -2}) gens.push_back(burau_generator(g, x));
    std::set<std::string> seen{key(LaurentMatrix::identity(2))};
    std::vector<LaurentMatrix> frontier{LaurentMatrix::identity(2)};
    std::vector<int> sizes{1};
    for (int r = 1; r <= radius; ++r) {
        std::vector<LaurentMatrix> next;
        for (const auto& m : frontier)
            for (const auto& s : gens) {
                auto p = m * s;
                if (seen.insert(key(p)).second) next.push_back(p);
            }
        sizes.push_back(static_cast<int>(next.size()));
        frontier = std::move(next);
    }
    return sizes;
}

BraidWord random_word(std::mt19937& rng, int rank, int max_len, int min_len) {
    std::uniform_int_distribution<int> len(min_len, max_len), gen(1, rank), sign(0, 1);
    BraidWord w(len(rng));
    for (auto& x : w) x = gen(rng) * (sign(rng) ? 1 : -1);
    return w;
}

}  // namespace oracle
