#include "zigzagcat/json_io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>

namespace zzc {

json to_json(const CoxeterGraph& g) {
    json edges = json::array(), orient = json::array();
    for (auto [s, t] : g.edges()) {
        edges.push_back({std::min(s, t), std::max(s, t)});
        orient.push_back({s, t});
    }
    return {{"type", g.type()}, {"n", g.rank()}, {"based", g.based()}, {"edges", edges}, {"orientation", orient}};
}

CoxeterGraph graph_from_json(const json& j) {
    try {
        int n = j.at("n").get<int>();
        std::string type = j.value("type", std::string("custom"));
        bool based = j.value("based", false);
        auto edges = j.at("edges").get<std::vector<std::pair<int, int>>>();
        if (!j.contains("orientation")) return CoxeterGraph(n, edges, type, based);
        auto orient = j.at("orientation").get<std::vector<std::pair<int, int>>>();
        auto key = [](std::pair<int, int> e) { return std::pair<int, int>(std::minmax(e.first, e.second)); };
        std::vector<std::pair<int, int>> a, b;
        for (auto e : edges) a.push_back(key(e));
        for (auto e : orient) b.push_back(key(e));
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) throw DomainError("orientation must orient exactly the listed edges");
        return CoxeterGraph(n, orient, type, based);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed graph JSON: ") + e.what());
    }
}

CoxeterGraph load_graph(const std::string& spec) {
    std::ifstream in(spec);
    if (!in) return CoxeterGraph::from_name(spec);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw std::invalid_argument("unreadable graph file '" + spec + "': " + e.what());
    }
    return graph_from_json(j);
}

json to_json(const AlgebraElement& e) {
    json out = json::array();
    for (const auto& t : e.terms()) out.push_back({{"path", t.path.name()}, {"coef", t.coef.get_str()}});
    return out;
}

AlgebraElement element_from_json(const json& j) {
    AlgebraElement e;
    try {
        for (const auto& t : j) {
            mpq_class c;
            if (t.at("coef").is_number_integer())
                c = t.at("coef").get<long>();
            else if (c.set_str(t.at("coef").get<std::string>(), 10) != 0)
                throw std::invalid_argument("malformed coefficient");
            c.canonicalize();
            e.add(Path::parse(t.at("path").get<std::string>()), c);
        }
    } catch (const json::exception& ex) {
        throw std::invalid_argument(std::string("malformed algebra element: ") + ex.what());
    }
    return e;
}

json to_json(const ProjComplex& c) {
    json gens = json::array(), diff = json::array();
    for (const auto& g : c.gens()) gens.push_back({{"v", g.v}, {"h", g.k}, {"l", g.l}, {"m", g.m}});
    for (const auto& [key, e] : c.entries())
        if (!e.zero()) diff.push_back({{"row", key.first}, {"col", key.second}, {"elt", to_json(e)}});
    return {{"generators", gens}, {"diff", diff}, {"text", c.str()}};
}

ProjComplex complex_from_json(const AlgebraPtr& alg, const json& j) {
    ProjComplex c(alg);
    try {
        for (const auto& g : j.at("generators")) {
            GenLabel lab{g.at("v").get<int>(), g.value("h", 0), g.value("l", 0), g.value("m", 0)};
            if (!alg->graph().has_vertex(lab.v)) throw DomainError("generator vertex out of range");
            c.add_generator(lab);
        }
        if (j.contains("diff"))
            for (const auto& d : j.at("diff")) {
                int r = d.at("row").get<int>(), s = d.at("col").get<int>();
                if (r < 0 || s < 0 || r >= c.size() || s >= c.size()) throw DomainError("differential index out of range");
                c.set_entry(r, s, element_from_json(d.at("elt")));
            }
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed complex JSON: ") + e.what());
    }
    auto rep = validate(c);
    if (!rep.ok) throw DomainError("invalid complex: " + rep.message);
    return c;
}

json to_json(const LaurentMatrix& m) {
    json rows = json::array();
    for (int r = m.offset(); r < m.offset() + m.size(); ++r) {
        json row = json::array();
        for (int c = m.offset(); c < m.offset() + m.size(); ++c) row.push_back(m.at(r, c).str());
        rows.push_back(row);
    }
    return rows;
}

json to_json(const LaurentVector& v) {
    json out = json::object();
    for (size_t i = 0; i < v.v.size(); ++i) out["alpha" + std::to_string(v.offset + static_cast<int>(i))] = v.v[i].str();
    return out;
}

json to_json(const HomDims& d) {
    json graded = json::array();
    for (const auto& [deg, n] : d.graded) graded.push_back({{"h", deg.h}, {"l", deg.dl}, {"m", deg.dm}, {"dim", n}});
    json by_h = json::object();
    for (auto [h, n] : d.by_homdeg()) by_h[std::to_string(h)] = n;
    return {{"total", d.total()}, {"by_homdeg", by_h}, {"graded", graded}};
}

json to_json(const a2::Automaton& a) {
    json states = json::array(), edges = json::array();
    for (size_t i = 0; i < a.names.size(); ++i)
        states.push_back({{"name", a.names[i]}, {"label", a2::support_str(a.labels[i])}});
    for (const auto& [k, t] : a.delta)
        edges.push_back({{"from", a.names[k.first]}, {"letter", a2::letter_name(k.second)}, {"to", a.names[t]}});
    return {{"variant", a.variant}, {"states", states}, {"edges", edges}};
}

std::uint64_t complex_digest(const ProjComplex& c) {
    std::string s = to_json(c.sorted()).dump();
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string hex_digest(std::uint64_t h) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace zzc
