#include "zigzagcat/metrics.hpp"

#include <algorithm>
#include <numeric>

#include "zigzagcat/curves.hpp"
#include "zigzagcat/parallel.hpp"

namespace zzc {

Grading parse_grading(const std::string& s) {
    if (s == "dual") return Grading::Dual;
    if (s == "classical") return Grading::Classical;
    throw std::invalid_argument("grading must be 'classical' or 'dual'");
}

std::string to_string(Grading g) { return g == Grading::Dual ? "dual" : "classical"; }

int layer_of(const GenLabel& g, Grading gr) { return gr == Grading::Dual ? g.m : g.l + g.k; }

LayerProfile layer_profile(const ProjComplex& c, Grading gr) {
    LayerProfile p;
    p.grading = gr;
    for (const auto& g : c.sorted_labels()) p.layers[layer_of(g, gr)].push_back(g);
    return p;
}

std::pair<int, int> layer_range(const ProjComplex& c, Grading gr) {
    if (c.empty()) throw DomainError("layer range of the zero complex");
    int lo = layer_of(c.gen(0), gr), hi = lo;
    for (const auto& g : c.gens()) {
        lo = std::min(lo, layer_of(g, gr));
        hi = std::max(hi, layer_of(g, gr));
    }
    return {lo, hi};
}

std::vector<ProjComplex> linear_generators(const AlgebraPtr& alg, Grading gr) {
    const auto& g = alg->graph();
    if (!g.is_linear_a()) throw DomainError("linear generators need a linearly oriented type-A graph");
    int n = g.rank();
    std::vector<ProjComplex> out;
    if (gr == Grading::Dual) {
        for (int i = 1; i <= n; ++i)
            for (int k = 0; i + k <= n; ++k) {
                ProjComplex c(alg);
                for (int j = 0; j <= k; ++j) {
                    c.add_generator({i + j, j, -j, 0});
                    if (j) c.set_entry(j, j - 1, AlgebraElement(Path::arrow(i + j - 1, i + j)));
                }
                out.push_back(std::move(c));
            }
        return out;
    }
    for (int a = 1; a <= n + 1; ++a)
        for (int b = a + 1; b <= n + 1; ++b) {
            int mid = b - a - 1;
            for (int mask = 0; mask < (1 << mid); ++mask) {
                CombCurve cv;
                cv.n = n;
                cv.tokens.push_back({CurveToken::Start, a});
                for (int t = 0; t < mid; ++t)
                    cv.tokens.push_back({(mask >> t) & 1 ? CurveToken::PassUnder : CurveToken::PassOver, a + 1 + t});
                cv.tokens.push_back({CurveToken::End, b});
                out.push_back(curve_to_complex(cv, alg));
            }
        }
    return out;
}

int spread_of_images(const std::vector<ProjComplex>& images, Grading gr) {
    int lo = 0, hi = 0;
    for (const auto& c : images) {
        if (c.empty()) continue;
        auto [a, b] = layer_range(c, gr);
        lo = std::min(lo, a);
        hi = std::max(hi, b);
    }
    return hi - lo;
}

int spread(const AlgebraPtr& alg, const BraidWord& w, Grading gr) {
    check_word(alg->graph(), w);
    auto gens = linear_generators(alg, gr);
    std::vector<ProjComplex> imgs(gens.size());
    parallel_for(gens.size(), [&](std::size_t i) { imgs[i] = apply_word(w, gens[i]); });
    return spread_of_images(imgs, gr);
}

namespace {

using Perm = std::vector<int>;

Perm perm_of_word(int n, const BraidWord& w) {
    Perm p(n + 1);
    std::iota(p.begin(), p.end(), 0);
    for (int x : w) {
        int i = std::abs(x);
        Perm q = p;
        // p o s_i
        std::swap(q[i - 1], q[i]);
        p = q;
    }
    return p;
}

Perm compose(const Perm& a, const Perm& b) {
    Perm r(a.size());
    for (size_t x = 0; x < a.size(); ++x) r[x] = a[b[x]];
    return r;
}

Perm invert(const Perm& a) {
    Perm r(a.size());
    for (size_t x = 0; x < a.size(); ++x) r[a[x]] = static_cast<int>(x);
    return r;
}

int reflection_length(const Perm& p) {
    std::vector<bool> seen(p.size(), false);
    int cycles = 0;
    for (size_t x = 0; x < p.size(); ++x) {
        if (seen[x]) continue;
        ++cycles;
        for (size_t y = x; !seen[y]; y = p[y]) seen[y] = true;
    }
    return static_cast<int>(p.size()) - cycles;
}

BraidWord positive_lift(Perm p) {
    BraidWord w;
    bool again = true;
    while (again) {
        again = false;
        for (size_t i = 1; i < p.size(); ++i)
            if (p[i - 1] > p[i]) {
                std::swap(p[i - 1], p[i]);
                w.insert(w.begin(), static_cast<int>(i));
                again = true;
                break;
            }
    }
    return w;
}

void require_small_a(const CoxeterGraph& g) {
    if (!g.is_linear_a()) throw DomainError("intervals need a linearly oriented type-A graph");
    if (g.rank() > 3) throw DomainError("exhaustive interval enumeration is limited to rank 3");
}

}  // namespace

std::vector<BraidWord> garside_generators(const CoxeterGraph& g, Grading gr) {
    if (gr == Grading::Dual) {
        auto simples = enumerate_interval(g, Grading::Dual);
        simples.erase(simples.begin());
        return simples;
    }
    if (!g.is_linear_a()) throw DomainError("classical generators need a linearly oriented type-A graph");
    int n = g.rank();
    Perm p(n + 1);
    std::iota(p.begin(), p.end(), 0);
    std::vector<BraidWord> out;
    do {
        auto w = positive_lift(p);
        if (!w.empty()) out.push_back(w);
    } while (std::next_permutation(p.begin(), p.end()));
    std::sort(out.begin(), out.end(), [](const BraidWord& a, const BraidWord& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
}

std::vector<BallElement> bfs_ball(const AlgebraPtr& alg, const std::vector<BraidWord>& gens, int radius) {
    std::vector<BraidWord> letters;
    for (const auto& g : gens) {
        letters.push_back(g);
        letters.push_back(inverse(g));
    }
    ElementStore store;
    std::vector<BallElement> out;
    store.insert(canonical_tuple(alg, {}));
    out.push_back({{}, 0});
    std::vector<int> frontier{0};
    for (int d = 1; d <= radius && !frontier.empty(); ++d) {
        std::size_t m = frontier.size() * letters.size();
        std::vector<CanonicalTuple> kids(m);
        parallel_for(m, [&](std::size_t t) {
            kids[t] = left_multiply(store.at(frontier[t / letters.size()]), letters[t % letters.size()]);
        });
        std::vector<int> next;
        for (std::size_t t = 0; t < m; ++t) {
            auto [idx, fresh] = store.insert(std::move(kids[t]));
            if (!fresh) continue;
            const auto& parent = out[frontier[t / letters.size()]];
            out.push_back({concat(letters[t % letters.size()], parent.word), d});
            next.push_back(idx);
        }
        frontier = std::move(next);
    }
    return out;
}

std::optional<int> word_length_bfs(const AlgebraPtr& alg, const BraidWord& w, const std::vector<BraidWord>& gens,
                                   int bound) {
    auto target = canonical_tuple(alg, w);
    std::vector<BraidWord> letters;
    for (const auto& g : gens) {
        letters.push_back(g);
        letters.push_back(inverse(g));
    }
    ElementStore store;
    store.insert(canonical_tuple(alg, {}));
    if (store.find(target) == 0) return 0;
    std::vector<int> frontier{0};
    for (int d = 1; d <= bound && !frontier.empty(); ++d) {
        std::size_t m = frontier.size() * letters.size();
        std::vector<CanonicalTuple> kids(m);
        parallel_for(m, [&](std::size_t t) {
            kids[t] = left_multiply(store.at(frontier[t / letters.size()]), letters[t % letters.size()]);
        });
        std::vector<int> next;
        for (std::size_t t = 0; t < m; ++t) {
            if (kids[t].equals(target)) return d;
            auto [idx, fresh] = store.insert(std::move(kids[t]));
            if (fresh) next.push_back(idx);
        }
        frontier = std::move(next);
    }
    return std::nullopt;
}

std::vector<BraidWord> enumerate_interval(const CoxeterGraph& g, Grading kind) {
    require_small_a(g);
    int n = g.rank();
    if (kind == Grading::Classical) {
        auto gens = garside_generators(g, Grading::Classical);
        gens.insert(gens.begin(), BraidWord{});
        return gens;
    }
    BraidWord gw;
    for (int i = 1; i <= n; ++i) gw.push_back(i);
    Perm c = perm_of_word(n, gw);
    std::vector<std::pair<Perm, BraidWord>> found{{perm_of_word(n, {}), {}}};
    std::vector<std::pair<int, int>> roots;
    for (int i = 1; i <= n; ++i)
        for (int k = 0; i + k <= n; ++k) roots.push_back({i, k});
    for (size_t at = 0; at < found.size(); ++at) {
        auto [p, w] = found[at];
        for (auto [i, k] : roots) {
            BraidWord t = dual_generator(g, i, k);
            Perm q = compose(p, perm_of_word(n, t));
            if (reflection_length(q) != reflection_length(p) + 1) continue;
            if (reflection_length(q) + reflection_length(compose(invert(q), c)) != n) continue;
            bool seen = std::any_of(found.begin(), found.end(), [&](const auto& f) { return f.first == q; });
            if (!seen) found.push_back({q, concat(w, t)});
        }
    }
    std::vector<BraidWord> out;
    for (auto& f : found) out.push_back(f.second);
    return out;
}

std::vector<DigneGobetEntry> digne_gobet_check(const CoxeterGraph& g) {
    require_small_a(g);
    auto alg = make_algebra(g);
    auto classical = enumerate_interval(g, Grading::Classical);
    ElementStore store;
    for (const auto& a : classical) store.insert(canonical_tuple(alg, a));
    auto duals = enumerate_interval(g, Grading::Dual);
    std::vector<DigneGobetEntry> out(duals.size());
    parallel_for(duals.size(), [&](std::size_t d) {
        out[d].u = duals[d];
        for (const auto& b : classical) {
            int hit = store.find(canonical_tuple(alg, concat(duals[d], b)));
            if (hit >= 0) {
                out[d] = {duals[d], true, classical[hit], b};
                return;
            }
        }
    });
    return out;
}

}  // namespace zzc
