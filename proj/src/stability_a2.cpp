#include "zigzagcat/stability_a2.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "zigzagcat/linalg.hpp"
#include "zigzagcat/metrics.hpp"
#include "zigzagcat/parallel.hpp"

namespace zzc::a2 {

std::string support_str(Support s) {
    static const char* names[] = {"P2", "X", "P1"};
    std::string out = "{";
    bool first = true;
    for (int i : {SP1, SX, SP2})
        if (s & (1u << i)) {
            if (!first) out += ",";
            out += names[i];
            first = false;
        }
    return out + "}";
}

Support parse_support(const std::string& text) {
    Support s = 0;
    std::string tok;
    for (char ch : text + ",") {
        if (ch == '{' || ch == '}' || ch == ' ') continue;
        if (ch != ',') {
            tok += ch;
            continue;
        }
        if (tok == "P1") s |= bit(SP1);
        else if (tok == "P2") s |= bit(SP2);
        else if (tok == "X") s |= bit(SX);
        else if (!tok.empty()) throw std::invalid_argument("unknown stable '" + tok + "'");
        tok.clear();
    }
    return s;
}

const StabilityData& base_stability() {
    static const StabilityData d;
    return d;
}

AlgebraPtr algebra() {
    static const AlgebraPtr a = make_algebra(CoxeterGraph::type_a(2));
    return a;
}

ProjComplex stable_object(Stable s) {
    if (s == SP1) return ProjComplex::projective(algebra(), 1);
    if (s == SP2) return ProjComplex::projective(algebra(), 2);
    ProjComplex c(algebra());
    c.add_generator({1, 0, 0, 0});
    c.add_generator({2, 1, -1, 0});
    c.set_entry(1, 0, AlgebraElement(Path::arrow(1, 2)));
    return c;
}

std::vector<ProjComplex> base_triple() { return {stable_object(SP1), stable_object(SP2), stable_object(SX)}; }

double shifted_phase(Stable s, int k, int l) { return base_stability().phase[s] - k - l; }

Support hn_support(const ProjComplex& input, bool check_spherical) {
    if (!(input.alg().graph() == algebra()->graph())) throw DomainError("HN supports are computed in A2 only");
    ProjComplex c = gaussian_reduce(input);
    if (check_spherical && !is_spherical(c)) throw DomainError("HN support needs a spherical object");
    std::map<int, std::vector<int>> layers;
    for (int i = 0; i < c.size(); ++i) layers[c.gen(i).m].push_back(i);
    Support s = 0;
    for (const auto& [m, idx] : layers) {
        std::vector<int> p1, p2;
        for (int i : idx) (c.gen(i).v == 1 ? p1 : p2).push_back(i);
        std::vector<SparseVec> rows;
        for (int b : p2) {
            SparseVec row;
            for (size_t j = 0; j < p1.size(); ++j) {
                mpq_class v = c.entry(b, p1[j]).coef(Path::arrow(1, 2));
                if (v != 0) row[static_cast<int>(j)] = v;
            }
            rows.push_back(std::move(row));
        }
        int r = rank(rows);
        if (r > 0) s |= bit(SX);
        if (static_cast<int>(p1.size()) > r) s |= bit(SP1);
        if (static_cast<int>(p2.size()) > r) s |= bit(SP2);
    }
    return s;
}

Support support_union(const std::vector<ProjComplex>& objs) {
    Support s = 0;
    for (const auto& o : objs) s |= hn_support(o, false);
    return s;
}

std::string letter_name(int letter) {
    std::string base;
    switch (std::abs(letter)) {
        case 1: base = "1"; break;
        case 2: base = "2"; break;
        case kSX: base = "X"; break;
        case kGamma: base = "g"; break;
        default: throw std::invalid_argument("unknown letter");
    }
    return letter < 0 ? "-" + base : base;
}

Letters parse_letters(const std::string& text) {
    std::istringstream in(text);
    std::string tok;
    Letters w;
    while (in >> tok) {
        int sign = 1;
        std::string b = tok;
        if (!b.empty() && b[0] == '-') {
            sign = -1;
            b = b.substr(1);
        }
        int l;
        if (b == "1") l = 1;
        else if (b == "2") l = 2;
        else if (b == "X" || b == "x") l = kSX;
        else if (b == "g" || b == "G") l = kGamma;
        else throw std::invalid_argument("malformed letter '" + tok + "' (use 1, 2, X, g with optional '-')");
        w.push_back(sign * l);
    }
    return w;
}

std::string format_letters(const Letters& w) {
    std::string s;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) s += ' ';
        s += letter_name(w[i]);
    }
    return s;
}

BraidWord expand(const Letters& w) {
    BraidWord out;
    for (int l : w) {
        BraidWord piece;
        switch (std::abs(l)) {
            case 1: piece = {1}; break;
            case 2: piece = {2}; break;
            case kSX: piece = {1, 2, -1}; break;
            case kGamma: piece = {1, 2}; break;
            default: throw std::invalid_argument("unknown letter");
        }
        if (l < 0) piece = inverse(piece);
        out.insert(out.end(), piece.begin(), piece.end());
    }
    return out;
}

int Automaton::state(const std::string& name) const {
    for (size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return static_cast<int>(i);
    throw std::invalid_argument("unknown state '" + name + "'");
}

int Automaton::step(int s, int letter) const {
    auto it = delta.find({s, letter});
    return it == delta.end() ? -1 : it->second;
}

const Automaton& basic_automaton() {
    static const Automaton a = [] {
        Automaton a;
        a.variant = "basic";
        a.names = {"A", "B", "C"};
        a.labels = {bit(SP1) | bit(SP2), bit(SX) | bit(SP2), bit(SP1) | bit(SX)};
        a.alphabet = {1, 2, kSX, kGamma, -kGamma};
        const int A = 0, B = 1, C = 2;
        a.delta = {{{A, 2}, A},       {{A, kSX}, B},    {{A, kGamma}, B}, {{A, -kGamma}, C},
                   {{B, kSX}, B},     {{B, 1}, C},      {{B, kGamma}, C}, {{B, -kGamma}, A},
                   {{C, 1}, C},       {{C, 2}, A},      {{C, kGamma}, A}, {{C, -kGamma}, B}};
        return a;
    }();
    return a;
}

const Automaton& extended_automaton() {
    static const Automaton a = [] {
        Automaton a;
        a.variant = "extended";
        a.names = {"A", "B", "C", "M"};
        a.labels = {bit(SP1) | bit(SP2), bit(SX) | bit(SP2), bit(SP1) | bit(SX), kAll};
        a.alphabet = {1, 2, kSX, kGamma, -1, -2, -kSX, -kGamma};
        const int A = 0, B = 1, C = 2, M = 3;
        a.delta = {{{A, 2}, A},        {{A, -1}, A},        {{A, kSX}, B},     {{A, -kSX}, C},
                   {{A, kGamma}, B},   {{A, -kGamma}, C},   {{B, kSX}, B},     {{B, -2}, B},
                   {{B, 1}, C},        {{B, -1}, A},        {{B, kGamma}, C},  {{B, -kGamma}, A},
                   {{C, 1}, C},        {{C, -kSX}, C},      {{C, 2}, A},       {{C, -2}, B},
                   {{C, kGamma}, A},   {{C, -kGamma}, B},   {{M, 2}, A},       {{M, -1}, A},
                   {{M, kSX}, B},      {{M, -2}, B},        {{M, 1}, C},       {{M, -kSX}, C},
                   {{M, kGamma}, M},   {{M, -kGamma}, M}};
        return a;
    }();
    return a;
}

Recognition recognize(const Automaton& a, const Letters& w, int start) {
    int s = start;
    for (int i = static_cast<int>(w.size()) - 1; i >= 0; --i) {
        int t = a.step(s, w[i]);
        if (t < 0) return {false, -1, i + 1};
        s = t;
    }
    return {true, s, 0};
}

bool recognized(const Automaton& a, const Letters& w) {
    for (int s = 0; s < static_cast<int>(a.names.size()); ++s)
        if (recognize(a, w, s).accepted) return true;
    return false;
}

namespace {

int succ(int a) { return a == 1 ? 2 : a == 2 ? kSX : 1; }
int pred(int a) { return a == 1 ? kSX : a == 2 ? 1 : 2; }

}  // namespace

BraidWord NormalForm::word() const {
    Letters w;
    for (int i = 0; i < std::abs(n); ++i) w.push_back(n > 0 ? kGamma : -kGamma);
    for (auto [l, m] : runs)
        for (int i = 0; i < m; ++i) w.push_back(l);
    return expand(w);
}

std::string NormalForm::str() const {
    std::string s = "g^" + std::to_string(n);
    for (auto [l, m] : runs) s += " " + letter_name(l) + "^" + std::to_string(m);
    return s;
}

NormalForm normal_form(const BraidWord& w, int max_steps) {
    Letters toks;
    for (int x : w) {
        if (x == 1 || x == 2) toks.push_back(x);
        else if (x == -1) toks.insert(toks.end(), {-kGamma, kSX});
        else if (x == -2) toks.insert(toks.end(), {-kGamma, 1});
        else throw DomainError("normal forms are computed for words in sigma_1, sigma_2");
    }
    int n = 0;
    Letters pos;
    int steps = 0;
    auto slide = [&](int e) {
        // pos * gamma^e = gamma^e * pos'
        for (int& b : pos) b = e > 0 ? pred(b) : succ(b);
        n += e;
    };
    for (int t : toks) {
        if (++steps > max_steps) throw DomainError("normal form rewriting did not terminate");
        if (t == kGamma || t == -kGamma) {
            slide(t > 0 ? 1 : -1);
            continue;
        }
        if (!pos.empty() && pos.back() == pred(t)) {
            pos.pop_back();
            slide(1);
        } else {
            pos.push_back(t);
        }
    }
    NormalForm nf;
    nf.n = n;
    for (int b : pos) {
        if (!nf.runs.empty() && nf.runs.back().first == b)
            ++nf.runs.back().second;
        else
            nf.runs.push_back({b, 1});
    }
    return nf;
}

namespace {

// Tuple up to a uniform shift, so that elements differing by a central element agree.
CanonicalTuple shift_normalized(const CanonicalTuple& t) {
    GenLabel g = t.comps.at(0).sorted_labels().at(0);
    std::vector<ProjComplex> comps;
    for (const auto& c : t.comps) comps.push_back(c.shifted(-g.k, -g.l, -g.m));
    return tuple_of(std::move(comps));
}

}  // namespace

int count_separating_walls(const BraidWord& x, const BraidWord& y, int radius) {
    auto alg = algebra();
    check_word(alg->graph(), x);
    check_word(alg->graph(), y);
    struct State {
        CanonicalTuple t;
        std::vector<ProjComplex> xs, ys;
    };
    auto D = base_triple();
    auto image = [](const BraidWord& w, const std::vector<ProjComplex>& objs) {
        std::vector<ProjComplex> out;
        for (const auto& o : objs) out.push_back(apply_word(w, o));
        return out;
    };
    std::vector<BraidWord> letters;
    for (const BraidWord& g : std::vector<BraidWord>{{1}, {2}, {1, 2, -1}}) {
        letters.push_back(g);
        letters.push_back(inverse(g));
    }
    ElementStore store;
    std::vector<State> states;
    store.insert(canonical_tuple(alg, {}));
    states.push_back({store.at(0), image(x, D), image(y, D)});
    std::vector<int> frontier{0};
    for (int d = 1; d <= radius && !frontier.empty(); ++d) {
        std::size_t m = frontier.size() * letters.size();
        std::vector<State> kids(m);
        parallel_for(m, [&](std::size_t k) {
            const auto& par = states[frontier[k / letters.size()]];
            const auto& l = letters[k % letters.size()];
            kids[k] = {left_multiply(par.t, l), image(l, par.xs), image(l, par.ys)};
        });
        std::vector<int> next;
        for (auto& k : kids) {
            auto [idx, fresh] = store.insert(k.t);
            if (!fresh) continue;
            states.push_back(std::move(k));
            next.push_back(idx);
        }
        frontier = std::move(next);
    }
    // gamma permutes D up to shift, so mu and gamma*mu cut out the same walls.
    const BraidWord gamma = expand({kGamma});
    std::vector<std::array<CanonicalTuple, 3>> orbit(states.size());
    parallel_for(states.size(), [&](std::size_t i) {
        CanonicalTuple t = states[i].t;
        for (int j = 0; j < 3; ++j) {
            orbit[i][j] = shift_normalized(t);
            if (j < 2) t = left_multiply(t, gamma);
        }
    });
    ElementStore cosets;
    std::vector<std::size_t> reps;
    for (std::size_t i = 0; i < states.size(); ++i) {
        bool seen = false;
        for (const auto& t : orbit[i]) seen = seen || cosets.find(t) >= 0;
        if (seen) continue;
        cosets.insert(orbit[i][0]);
        reps.push_back(i);
    }
    std::vector<int> per(reps.size());
    parallel_for(reps.size(), [&](std::size_t r) {
        const auto& st = states[reps[r]];
        per[r] = __builtin_popcount(support_union(st.xs) ^ support_union(st.ys));
    });
    int total = 0;
    for (int p : per) total += p;
    return total;
}

}  // namespace zzc::a2
