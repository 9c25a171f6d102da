#include "zigzagcat/curves.hpp"

#include <cstdlib>
#include <sstream>

namespace zzc {

namespace {

bool is_pass(CurveToken::Kind k) { return k == CurveToken::PassOver || k == CurveToken::PassUnder; }
bool is_wrap(CurveToken::Kind k) { return k == CurveToken::WrapRight || k == CurveToken::WrapLeft; }

int parse_puncture(const std::string& s, const std::string& tok) {
    if (s == "B") return 0;
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("malformed curve token '" + tok + "'");
    return std::stoi(s);
}

// +1 above the real line, -1 below.
struct Sides {
    int arrive;
    int leave;
};

Sides token_sides(const CurveToken& t, int dir_in) {
    switch (t.kind) {
        case CurveToken::PassOver: return {1, 1};
        case CurveToken::PassUnder: return {-1, -1};
        case CurveToken::WrapRight: return dir_in > 0 ? Sides{1, -1} : Sides{-1, 1};
        case CurveToken::WrapLeft: return dir_in > 0 ? Sides{-1, 1} : Sides{1, -1};
        default: return {0, 0};
    }
}

// Whether the puncture lies on the right of the direction of travel.
bool puncture_on_right(const CurveToken& t, int dir_in) {
    switch (t.kind) {
        case CurveToken::PassOver: return dir_in > 0;
        case CurveToken::PassUnder: return dir_in < 0;
        case CurveToken::WrapRight: return true;
        default: return false;
    }
}

}  // namespace

int CombCurve::gap(int r) const { return std::min(tokens.at(r).p, tokens.at(r + 1).p); }

std::string CombCurve::str() const {
    std::string s;
    for (size_t r = 0; r < tokens.size(); ++r) {
        const auto& t = tokens[r];
        if (r) s += ' ';
        std::string p = (based && t.p == 0) ? "B" : std::to_string(t.p);
        switch (t.kind) {
            case CurveToken::Start: s += p; break;
            case CurveToken::PassOver: s += "O" + p; break;
            case CurveToken::PassUnder: s += "U" + p; break;
            case CurveToken::WrapRight: s += "W+" + p; break;
            case CurveToken::WrapLeft: s += "W-" + p; break;
            case CurveToken::End: s += "E" + p; break;
        }
    }
    return s;
}

CombCurve parse_curve(const std::string& text, int n, bool based) {
    CombCurve c;
    c.n = n;
    c.based = based;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        CurveToken t{};
        if (c.tokens.empty()) {
            t = {CurveToken::Start, parse_puncture(tok, tok)};
        } else if (tok.rfind("W+", 0) == 0) {
            t = {CurveToken::WrapRight, parse_puncture(tok.substr(2), tok)};
        } else if (tok.rfind("W-", 0) == 0) {
            t = {CurveToken::WrapLeft, parse_puncture(tok.substr(2), tok)};
        } else if (tok[0] == 'O') {
            t = {CurveToken::PassOver, parse_puncture(tok.substr(1), tok)};
        } else if (tok[0] == 'U') {
            t = {CurveToken::PassUnder, parse_puncture(tok.substr(1), tok)};
        } else if (tok[0] == 'E') {
            t = {CurveToken::End, parse_puncture(tok.substr(1), tok)};
        } else {
            throw std::invalid_argument("malformed curve token '" + tok + "'");
        }
        c.tokens.push_back(t);
    }
    check_curve(c);
    return c;
}

void check_curve(const CombCurve& c) {
    const auto& t = c.tokens;
    if (t.size() < 2) throw DomainError("a curve needs a start and an end");
    if (t.front().kind != CurveToken::Start || t.back().kind != CurveToken::End)
        throw DomainError("a curve must begin with its start puncture and finish with E<p>");
    for (size_t r = 0; r < t.size(); ++r) {
        if (t[r].p < c.min_puncture() || t[r].p > c.max_puncture())
            throw DomainError("puncture " + std::to_string(t[r].p) + " is outside the disk");
        if (r > 0 && r + 1 < t.size() && !is_pass(t[r].kind) && !is_wrap(t[r].kind))
            throw DomainError("start/end tokens may only appear at the ends");
        if (r > 0 && std::abs(t[r].p - t[r - 1].p) != 1)
            throw DomainError("consecutive punctures " + std::to_string(t[r - 1].p) + " and " +
                              std::to_string(t[r].p) + " are not adjacent");
    }
    for (size_t r = 1; r + 1 < t.size(); ++r) {
        int din = t[r].p - t[r - 1].p, dout = t[r + 1].p - t[r].p;
        if (is_pass(t[r].kind) && din != dout)
            throw DomainError("a pass at puncture " + std::to_string(t[r].p) + " must keep the direction");
        if (is_wrap(t[r].kind) && din != -dout)
            throw DomainError("a wrap at puncture " + std::to_string(t[r].p) + " must reverse the direction");
    }
    if (t.front().p == t.back().p) throw DomainError("the endpoints of an arc must differ");
}

ProjComplex curve_to_complex(const CombCurve& c, const AlgebraPtr& alg) {
    check_curve(c);
    const auto& g = alg->graph();
    if (g.rank() != c.n || g.based() != c.based) throw DomainError("curve and graph disagree");
    if (g.based() ? !(g.edges().size() == static_cast<size_t>(c.n) && g.oriented(0, 1))
                  : !g.is_linear_a())
        throw DomainError("curves need a linearly oriented type-A graph");
    ProjComplex out(alg);
    GenLabel cur{c.gap(0), 0, 0, 0};
    out.add_generator(cur);
    for (int r = 1; r < c.traversals(); ++r) {
        const auto& tok = c.tokens[r];
        int din = tok.p - c.tokens[r - 1].p;
        int gnext = c.gap(r);
        bool right = puncture_on_right(tok, din);
        AlgebraElement e;
        int delta;
        if (is_wrap(tok.kind)) {
            e = AlgebraElement(Path::x(gnext));
            delta = 2;
        } else {
            e = right ? AlgebraElement(Path::arrow(cur.v, gnext)) : AlgebraElement(Path::arrow(gnext, cur.v));
            delta = 1;
        }
        int od = alg->odeg(e.terms().front().path);
        GenLabel next{gnext, 0, 0, 0};
        if (right) {
            next.k = cur.k + 1;
            next.l = cur.l - delta;
            next.m = cur.m - od;
        } else {
            next.k = cur.k - 1;
            next.l = cur.l + delta;
            next.m = cur.m + od;
        }
        int idx = out.add_generator(next);
        if (right)
            out.set_entry(idx, idx - 1, e);
        else
            out.set_entry(idx - 1, idx, e);
        cur = next;
    }
    return out;
}

CrossingCount crossings_with_standard_arc(const CombCurve& c, int i) {
    check_curve(c);
    CrossingCount cc;
    const auto& t = c.tokens;
    int min_gap = c.min_puncture(), max_gap = c.max_puncture() - 1;
    std::vector<Sides> sides(t.size(), Sides{0, 0});
    for (size_t r = 1; r + 1 < t.size(); ++r) sides[r] = token_sides(t[r], t[r].p - t[r - 1].p);
    for (int r = 0; r < c.traversals(); ++r) {
        if (c.gap(r) != i) continue;
        int leave = sides[r].leave, arrive = sides[r + 1].arrive;
        if (leave != 0 && arrive != 0 && leave != arrive) ++cc.transverse;
    }
    for (size_t r = 1; r + 1 < t.size(); ++r) {
        if (!is_wrap(t[r].kind)) continue;
        int din = t[r].p - t[r - 1].p;
        int strip = din > 0 ? t[r].p : t[r].p - 1;
        if (strip >= min_gap && strip <= max_gap && strip == i) ++cc.transverse;
    }
    for (int p : {t.front().p, t.back().p})
        if (p == i || p == i + 1) ++cc.endpoints;
    return cc;
}

}  // namespace zzc
