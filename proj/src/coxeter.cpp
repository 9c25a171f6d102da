#include "zigzagcat/coxeter.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace zzc {

CoxeterGraph::CoxeterGraph(int n, const std::vector<std::pair<int, int>>& oriented_edges,
                           std::string type, bool based)
    : n_(n), based_(based), type_(std::move(type)) {
    if (n < 1) throw DomainError("graph needs at least one vertex");
    orient_.assign(n + 1, std::vector<int>(n + 1, 0));
    std::set<std::pair<int, int>> seen;
    for (auto [s, t] : oriented_edges) {
        if (!has_vertex(s) || !has_vertex(t)) throw DomainError("edge endpoint out of range");
        if (s == t) throw DomainError("self-loop in Coxeter graph");
        auto key = std::minmax(s, t);
        if (!seen.insert(key).second) throw DomainError("duplicate edge in Coxeter graph");
        orient_[s][t] = 1;
        orient_[t][s] = -1;
        edges_.emplace_back(s, t);
    }
    std::sort(edges_.begin(), edges_.end());
    if (based_ && !(adjacent(0, 1) && oriented(0, 1) && neighbours(0).size() == 1))
        throw DomainError("based vertex must be joined to vertex 1 only, oriented 0->1");
}

CoxeterGraph CoxeterGraph::type_a(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
    return CoxeterGraph(n, e, "A");
}

CoxeterGraph CoxeterGraph::type_d(int n) {
    if (n < 4) throw DomainError("type D needs n >= 4");
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i < n - 1; ++i) e.emplace_back(i, i + 1);
    e.emplace_back(n - 2, n);
    return CoxeterGraph(n, e, "D");
}

CoxeterGraph CoxeterGraph::type_e(int n) {
    if (n < 6 || n > 8) throw DomainError("type E needs 6 <= n <= 8");
    // Bourbaki labels: 1-3-4-5-...-n with 2 attached to 4.
    std::vector<std::pair<int, int>> e{{1, 3}, {2, 4}, {3, 4}};
    for (int i = 4; i < n; ++i) e.emplace_back(i, i + 1);
    return CoxeterGraph(n, e, "E");
}

CoxeterGraph CoxeterGraph::from_name(const std::string& name) {
    if (name.size() < 2) throw DomainError("unknown graph '" + name + "'");
    char t = static_cast<char>(std::tolower(static_cast<unsigned char>(name[0])));
    int n = 0;
    try {
        size_t pos = 0;
        n = std::stoi(name.substr(1), &pos);
        if (pos != name.size() - 1) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
        throw DomainError("unknown graph '" + name + "'");
    }
    if (t == 'a' && n >= 1 && n <= 9) return type_a(n);
    if (t == 'd' && n >= 4 && n <= 6) return type_d(n);
    if (t == 'e' && n >= 6 && n <= 8) return type_e(n);
    throw DomainError("unknown graph '" + name + "'");
}

std::vector<int> CoxeterGraph::vertices() const {
    std::vector<int> v;
    for (int i = min_vertex(); i <= n_; ++i) v.push_back(i);
    return v;
}

std::vector<int> CoxeterGraph::generator_vertices() const {
    std::vector<int> v;
    for (int i = 1; i <= n_; ++i) v.push_back(i);
    return v;
}

bool CoxeterGraph::adjacent(int i, int j) const {
    if (!has_vertex(i) || !has_vertex(j)) return false;
    return orient_[i][j] != 0;
}

bool CoxeterGraph::oriented(int i, int j) const {
    if (!has_vertex(i) || !has_vertex(j)) return false;
    return orient_[i][j] == 1;
}

std::vector<int> CoxeterGraph::neighbours(int v) const {
    std::vector<int> out;
    for (int u = min_vertex(); u <= n_; ++u)
        if (orient_[v][u] != 0) out.push_back(u);
    return out;
}

bool CoxeterGraph::is_linear_a() const {
    if (based_) return false;
    if (static_cast<int>(edges_.size()) != n_ - 1) return false;
    for (int i = 1; i < n_; ++i)
        if (!oriented(i, i + 1)) return false;
    return true;
}

BraidWord free_reduce(const BraidWord& w) {
    BraidWord out;
    for (int x : w) {
        if (!out.empty() && out.back() == -x)
            out.pop_back();
        else
            out.push_back(x);
    }
    return out;
}

BraidWord inverse(const BraidWord& w) {
    BraidWord out(w.rbegin(), w.rend());
    for (int& x : out) x = -x;
    return out;
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
    BraidWord out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

BraidWord power(const BraidWord& w, int e) {
    BraidWord base = e < 0 ? inverse(w) : w;
    BraidWord out;
    for (int i = 0; i < std::abs(e); ++i) out.insert(out.end(), base.begin(), base.end());
    return out;
}

void check_word(const CoxeterGraph& g, const BraidWord& w) {
    for (int x : w)
        if (x == 0 || std::abs(x) > g.rank())
            throw DomainError("generator index " + std::to_string(x) + " is not a vertex");
}

BraidWord special_word(const CoxeterGraph& g, SpecialKind kind) {
    if (kind == SpecialKind::CoxeterElement) {
        // A product of all generators ordered so that each source precedes its targets.
        int n = g.rank();
        std::vector<int> indeg(n + 1, 0);
        for (auto [s, t] : g.edges())
            if (s >= 1) ++indeg[t];
        BraidWord out;
        std::vector<bool> used(n + 1, false);
        for (int step = 0; step < n; ++step) {
            int pick = -1;
            for (int v = 1; v <= n; ++v)
                if (!used[v] && indeg[v] == 0) { pick = v; break; }
            if (pick < 0) throw DomainError("orientation has a cycle");
            used[pick] = true;
            out.push_back(pick);
            for (int u : g.neighbours(pick))
                if (u >= 1 && g.oriented(pick, u)) --indeg[u];
        }
        return out;
    }
    if (!g.is_linear_a()) throw DomainError("half twist is only provided in type A");
    BraidWord out;
    for (int top = 1; top <= g.rank(); ++top)
        for (int i = top; i >= 1; --i) out.push_back(i);
    return out;
}

BraidWord dual_generator(const CoxeterGraph& g, int i, int k) {
    if (!g.is_linear_a()) throw DomainError("dual generators need linear type A");
    if (i < 1 || k < 0 || i + k > g.rank()) throw DomainError("root out of range");
    BraidWord out;
    for (int j = i; j < i + k; ++j) out.push_back(j);
    out.push_back(i + k);
    for (int j = i + k - 1; j >= i; --j) out.push_back(-j);
    return out;
}

std::vector<BraidWord> dual_generators(const CoxeterGraph& g) {
    std::vector<BraidWord> out;
    for (int i = 1; i <= g.rank(); ++i)
        for (int k = 0; i + k <= g.rank(); ++k) out.push_back(dual_generator(g, i, k));
    return out;
}

BraidWord parse_word(const std::string& text) {
    std::istringstream in(text);
    BraidWord w;
    std::string tok;
    while (in >> tok) {
        size_t pos = 0;
        int x = 0;
        try {
            x = std::stoi(tok, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed braid letter '" + tok + "'");
        }
        if (pos != tok.size() || x == 0) throw std::invalid_argument("malformed braid letter '" + tok + "'");
        w.push_back(x);
    }
    return w;
}

std::string format_word(const BraidWord& w) {
    std::string s;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(w[i]);
    }
    return s;
}

CoxeterGraph based_extension(const CoxeterGraph& g) {
    if (!g.is_linear_a()) throw DomainError("based extension needs linear type A");
    std::vector<std::pair<int, int>> e{{0, 1}};
    for (auto ed : g.edges()) e.push_back(ed);
    return CoxeterGraph(g.rank(), e, "A", true);
}

}  // namespace zzc
