#include "zigzagcat/complex.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "zigzagcat/linalg.hpp"

namespace zzc {

std::string GenLabel::str() const {
    std::string s = "P" + std::to_string(v);
    if (l) s += "<" + std::to_string(l) + ">";
    if (m) s += "{" + std::to_string(m) + "}";
    if (k) s += "[" + std::to_string(k) + "]";
    return s;
}

ProjComplex ProjComplex::projective(AlgebraPtr alg, int v, int k, int l, int m) {
    if (!alg->graph().has_vertex(v)) throw DomainError("P" + std::to_string(v) + " is not a vertex");
    ProjComplex c(std::move(alg));
    c.add_generator({v, k, l, m});
    return c;
}

int ProjComplex::add_generator(const GenLabel& g) {
    gens_.push_back(g);
    return size() - 1;
}

void ProjComplex::set_entry(int target, int source, AlgebraElement e) {
    if (e.zero())
        d_.erase({target, source});
    else
        d_[{target, source}] = std::move(e);
}

void ProjComplex::add_to_entry(int target, int source, const AlgebraElement& e) {
    if (e.zero()) return;
    auto& slot = d_[{target, source}];
    slot += e;
    if (slot.zero()) d_.erase({target, source});
}

AlgebraElement ProjComplex::entry(int target, int source) const {
    auto it = d_.find({target, source});
    return it == d_.end() ? AlgebraElement{} : it->second;
}

ProjComplex ProjComplex::shifted(int dk, int dl, int dm) const {
    ProjComplex c = *this;
    for (auto& g : c.gens_) {
        g.k += dk;
        g.l += dl;
        g.m += dm;
    }
    return c;
}

ProjComplex ProjComplex::negated() const {
    ProjComplex c = *this;
    for (auto& [key, e] : c.d_) e = -e;
    return c;
}

ProjComplex ProjComplex::sorted() const {
    std::vector<int> perm(gens_.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) { return gens_[a] < gens_[b]; });
    std::vector<int> where(gens_.size());
    ProjComplex c(alg_);
    for (size_t i = 0; i < perm.size(); ++i) {
        where[perm[i]] = static_cast<int>(i);
        c.gens_.push_back(gens_[perm[i]]);
    }
    for (const auto& [key, e] : d_) c.d_[{where[key.first], where[key.second]}] = e;
    return c;
}

std::vector<GenLabel> ProjComplex::sorted_labels() const {
    auto v = gens_;
    std::sort(v.begin(), v.end());
    return v;
}

std::string ProjComplex::str() const {
    if (gens_.empty()) return "0";
    auto labels = sorted_labels();
    std::string s;
    for (size_t i = 0; i < labels.size(); ++i) {
        if (i) {
            int gap = labels[i].k - labels[i - 1].k;
            s += gap == 0 ? " + " : gap == 1 ? " -> " : " ... ";
        }
        s += labels[i].str();
    }
    return s;
}

ProjComplex direct_sum(const ProjComplex& a, const ProjComplex& b) {
    ProjComplex c = a;
    int off = a.size();
    for (const auto& g : b.gens()) c.add_generator(g);
    for (const auto& [key, e] : b.entries()) c.set_entry(key.first + off, key.second + off, e);
    return c;
}

ValidationReport validate(const ProjComplex& c) {
    const auto& A = c.alg();
    for (const auto& g : c.gens())
        if (!A.graph().has_vertex(g.v)) return {false, "generator " + g.str() + " has an invalid vertex"};
    for (const auto& [key, e] : c.entries()) {
        const auto& tgt = c.gen(key.first);
        const auto& src = c.gen(key.second);
        std::string where = "entry " + src.str() + " -> " + tgt.str();
        if (tgt.k != src.k + 1) return {false, where + ": homological degree must rise by one"};
        for (const auto& t : e.terms()) {
            if (!A.valid_path(t.path) || t.path.s != src.v || t.path.t != tgt.v)
                return {false, where + ": path " + t.path.name() + " is not a map between these projectives"};
            if (t.path.pathdeg() != src.l - tgt.l)
                return {false, where + ": path degree " + std::to_string(t.path.pathdeg()) +
                                   " does not match shift difference " + std::to_string(src.l - tgt.l)};
            if (A.odeg(t.path) != src.m - tgt.m)
                return {false, where + ": orientation degree " + std::to_string(A.odeg(t.path)) +
                                   " does not match shift difference " + std::to_string(src.m - tgt.m)};
        }
    }
    // (d^2)_{a,c} = sum_b d_{b,c} * d_{a,b}
    std::map<int, std::vector<std::pair<int, const AlgebraElement*>>> out;
    for (const auto& [key, e] : c.entries()) out[key.second].push_back({key.first, &e});
    for (const auto& [src, firsts] : out) {
        std::map<int, AlgebraElement> acc;
        for (const auto& [mid, e1] : firsts) {
            auto it = out.find(mid);
            if (it == out.end()) continue;
            for (const auto& [tgt, e2] : it->second) acc[tgt] += A.multiply(*e1, *e2);
        }
        for (const auto& [tgt, v] : acc)
            if (!v.zero())
                return {false, "d^2 != 0 from " + c.gen(src).str() + " to " + c.gen(tgt).str() + ": " + v.str()};
    }
    return {true, "ok"};
}

namespace {

bool pivot_entry(const ProjComplex& c, int tgt, int src, const AlgebraElement& e) {
    const auto& a = c.gen(tgt);
    const auto& b = c.gen(src);
    return a.v == b.v && a.l == b.l && a.m == b.m && e.idem_coef() != 0;
}

AlgebraElement unit_inverse(const AlgebraElement& u) {
    mpq_class c = u.idem_coef();
    AlgebraElement r;
    int v = -1;
    for (const auto& t : u.terms())
        if (t.path.kind == Path::Idem) v = t.path.s;
    r.add(Path::e(v), 1 / c);
    mpq_class nx = u.coef(Path::x(v));
    if (nx != 0) r.add(Path::x(v), -nx / (c * c));
    return r;
}

}  // namespace

ProjComplex gaussian_reduce(const ProjComplex& c) {
    const auto& A = c.alg();
    int n = c.size();
    std::vector<std::map<int, AlgebraElement>> out(n), in(n);
    for (const auto& [key, e] : c.entries()) {
        out[key.second][key.first] = e;
        in[key.first][key.second] = e;
    }
    std::vector<bool> alive(n, true);
    auto set = [&](int tgt, int src, AlgebraElement e) {
        if (e.zero()) {
            out[src].erase(tgt);
            in[tgt].erase(src);
        } else {
            out[src][tgt] = e;
            in[tgt][src] = std::move(e);
        }
    };
    while (true) {
        int pb = -1, pa = -1;
        for (int b = 0; b < n && pb < 0; ++b) {
            if (!alive[b]) continue;
            for (const auto& [a, e] : out[b])
                if (pivot_entry(c, a, b, e)) {
                    pb = b;
                    pa = a;
                    break;
                }
        }
        if (pb < 0) break;
        AlgebraElement inv = unit_inverse(out[pb][pa]);
        std::vector<std::pair<int, AlgebraElement>> us, vs;
        for (const auto& [u, e] : in[pa])
            if (u != pb) us.push_back({u, A.multiply(e, inv)});
        for (const auto& [v, e] : out[pb])
            if (v != pa) vs.push_back({v, e});
        for (const auto& [u, ua] : us)
            for (const auto& [v, bv] : vs) {
                AlgebraElement upd = A.multiply(ua, bv);
                if (upd.zero()) continue;
                AlgebraElement cur;
                auto it = out[u].find(v);
                if (it != out[u].end()) cur = it->second;
                cur -= upd;
                set(v, u, std::move(cur));
            }
        for (int x : {pa, pb}) {
            for (const auto& [t, e] : out[x]) in[t].erase(x);
            for (const auto& [s, e] : in[x]) out[s].erase(x);
            out[x].clear();
            in[x].clear();
            alive[x] = false;
        }
    }
    std::vector<int> where(n, -1);
    ProjComplex r(c.algebra());
    for (int i = 0; i < n; ++i)
        if (alive[i]) where[i] = r.add_generator(c.gen(i));
    for (int s = 0; s < n; ++s)
        for (const auto& [t, e] : out[s]) r.set_entry(where[t], where[s], e);
    return r.sorted();
}

int HomDims::total() const {
    int t = 0;
    for (const auto& [d, n] : graded) t += n;
    return t;
}

std::map<int, int> HomDims::by_homdeg() const {
    std::map<int, int> r;
    for (const auto& [d, n] : graded)
        if (n) r[d.h] += n;
    return r;
}

namespace {

struct BasisMap {
    int a;  // generator of the source complex
    int b;  // generator of the target complex
    Path p;
};

class HomComplex {
public:
    HomComplex(const ProjComplex& from, const ProjComplex& to) : C_(from), D_(to), A_(from.alg()) {
        if (from.algebra() && to.algebra() && !(from.alg().graph() == to.alg().graph()))
            throw DomainError("complexes live over different graphs");
        for (int a = 0; a < C_.size(); ++a)
            for (int b = 0; b < D_.size(); ++b) {
                const auto& ga = C_.gen(a);
                const auto& gb = D_.gen(b);
                for (const auto& hb : A_.hom_basis(ga.v, gb.v)) {
                    HomDeg d{gb.k - ga.k, hb.pathdeg - (ga.l - gb.l), hb.odeg - (ga.m - gb.m)};
                    auto& blk = blocks_[d];
                    index_[key(a, b, hb.path)] = {d, static_cast<int>(blk.size())};
                    blk.push_back({a, b, hb.path});
                }
            }
        for (const auto& [key, e] : C_.entries()) inC_[key.first].push_back({key.second, &e});
        for (const auto& [key, e] : D_.entries()) outD_[key.second].push_back({key.first, &e});
    }

    const std::map<HomDeg, std::vector<BasisMap>>& blocks() const { return blocks_; }

    const std::vector<BasisMap>& block(const HomDeg& d) const {
        static const std::vector<BasisMap> none;
        auto it = blocks_.find(d);
        return it == blocks_.end() ? none : it->second;
    }

    /// D(f) = d_D o f - (-1)^h f o d_C, in coordinates of the block (h+1, dl, dm).
    SparseVec apply(const BasisMap& f, int h) const {
        SparseVec r;
        auto put = [&](int a, int b, const AlgebraElement& e, int sign) {
            for (const auto& t : e.terms()) {
                auto it = index_.find(key(a, b, t.path));
                if (it == index_.end()) continue;  // cannot happen for homogeneous data
                mpq_class v = t.coef * sign;
                auto& slot = r[it->second.second];
                slot += v;
                if (slot == 0) r.erase(it->second.second);
            }
        };
        AlgebraElement fp(f.p);
        if (auto it = outD_.find(f.b); it != outD_.end())
            for (const auto& [b2, e] : it->second) put(f.a, b2, A_.multiply(fp, *e), 1);
        int sign = (h % 2 == 0) ? -1 : 1;
        if (auto it = inC_.find(f.a); it != inC_.end())
            for (const auto& [a2, e] : it->second) put(a2, f.b, A_.multiply(*e, fp), sign);
        return r;
    }

    std::vector<SparseVec> columns(const HomDeg& d) const {
        std::vector<SparseVec> cols;
        for (const auto& f : block(d)) cols.push_back(apply(f, d.h));
        return cols;
    }

    /// Kernel of D on block d, as coordinate vectors in that block.
    std::vector<SparseVec> cycles(const HomDeg& d) const {
        auto cols = columns(d);
        std::map<int, SparseVec> rows;
        for (int j = 0; j < static_cast<int>(cols.size()); ++j)
            for (const auto& [t, v] : cols[j]) rows[t][j] = v;
        std::vector<SparseVec> rv;
        for (auto& [t, row] : rows) rv.push_back(std::move(row));
        return nullspace(rv, static_cast<int>(cols.size()));
    }

    std::map<std::pair<int, int>, AlgebraElement> to_map(const HomDeg& d, const SparseVec& x) const {
        std::map<std::pair<int, int>, AlgebraElement> m;
        const auto& blk = block(d);
        for (const auto& [j, v] : x) m[{blk[j].b, blk[j].a}].add(blk[j].p, v);
        return m;
    }

private:
    static std::tuple<int, int, int, int, int> key(int a, int b, const Path& p) {
        return {a, b, static_cast<int>(p.kind), p.s, p.t};
    }

    const ProjComplex& C_;
    const ProjComplex& D_;
    const ZigzagAlgebra& A_;
    std::map<HomDeg, std::vector<BasisMap>> blocks_;
    std::map<std::tuple<int, int, int, int, int>, std::pair<HomDeg, int>> index_;
    std::map<int, std::vector<std::pair<int, const AlgebraElement*>>> inC_, outD_;
};

}  // namespace

HomDims hom_dims(const ProjComplex& from, const ProjComplex& to) {
    HomDims out;
    if (from.empty() || to.empty()) return out;
    HomComplex H(from, to);
    std::map<HomDeg, int> ranks;
    for (const auto& [d, blk] : H.blocks()) ranks[d] = rank(H.columns(d));
    for (const auto& [d, blk] : H.blocks()) {
        int n = static_cast<int>(blk.size()) - ranks[d];
        auto prev = ranks.find(HomDeg{d.h - 1, d.dl, d.dm});
        if (prev != ranks.end()) n -= prev->second;
        if (n) out.graded[d] = n;
    }
    return out;
}

std::vector<HomClass> hom_basis_reps(const ProjComplex& from, const ProjComplex& to) {
    std::vector<HomClass> reps;
    if (from.empty() || to.empty()) return reps;
    HomComplex H(from, to);
    for (const auto& [d, blk] : H.blocks()) {
        Echelon e;
        for (auto& v : H.columns(HomDeg{d.h - 1, d.dl, d.dm})) e.add(std::move(v));
        for (auto& z : H.cycles(d)) {
            if (e.add(z)) reps.push_back({d, H.to_map(d, z)});
        }
    }
    return reps;
}

bool component_detects_class(const ProjComplex& from, const ProjComplex& to, int a, int b, const Path& p) {
    const auto& A = from.alg();
    const auto& ga = from.gen(a);
    const auto& gb = to.gen(b);
    int od = A.odeg(p);
    HomDeg d{gb.k - ga.k, p.pathdeg() - (ga.l - gb.l), od - (ga.m - gb.m)};
    HomComplex H(from, to);
    const auto& blk = H.block(d);
    int col = -1;
    for (int j = 0; j < static_cast<int>(blk.size()); ++j)
        if (blk[j].a == a && blk[j].b == b && blk[j].p == p) col = j;
    if (col < 0) return false;
    for (const auto& bd : H.columns(HomDeg{d.h - 1, d.dl, d.dm}))
        if (bd.count(col)) return false;
    for (const auto& z : H.cycles(d))
        if (z.count(col)) return true;
    return false;
}

bool is_isomorphic(const ProjComplex& a, const ProjComplex& b) {
    if (a.sorted_labels() != b.sorted_labels()) return false;
    if (a.empty()) return true;
    HomComplex H(a, b);
    HomDeg zero{0, 0, 0};
    auto Z = H.cycles(zero);
    const auto& blk = H.block(zero);
    std::map<GenLabel, std::vector<int>> ca, cb;
    for (int i = 0; i < a.size(); ++i) ca[a.gen(i)].push_back(i);
    for (int i = 0; i < b.size(); ++i) cb[b.gen(i)].push_back(i);
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> coin(1, 1000);
    for (int attempt = 0; attempt < 3; ++attempt) {
        SparseVec f;
        for (const auto& z : Z) axpy(f, coin(rng), z);
        bool ok = true;
        for (const auto& [label, ia] : ca) {
            const auto& ib = cb[label];
            std::map<std::pair<int, int>, int> pos;
            for (size_t r = 0; r < ib.size(); ++r)
                for (size_t c = 0; c < ia.size(); ++c) pos[{ib[r], ia[c]}] = static_cast<int>(c);
            std::map<int, SparseVec> rows;
            for (const auto& [j, v] : f) {
                const auto& bm = blk[j];
                if (bm.p.kind != Path::Idem) continue;
                auto it = pos.find({bm.b, bm.a});
                if (it != pos.end()) rows[bm.b][it->second] = v;
            }
            std::vector<SparseVec> rv;
            for (auto& [r, row] : rows) rv.push_back(row);
            if (rank(rv) != static_cast<int>(ia.size())) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

LaurentVector euler_class(const ProjComplex& c) {
    const auto& g = c.alg().graph();
    LaurentVector v{g.min_vertex(), std::vector<Laurent>(g.rank() + 1 - g.min_vertex())};
    for (const auto& x : c.gens()) v.at(x.v) += Laurent(x.k % 2 == 0 ? 1 : -1, x.l);
    return v;
}

}  // namespace zzc
