#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "zigzagcat/acceptance.hpp"
#include "zigzagcat/curves.hpp"
#include "zigzagcat/json_io.hpp"
#include "zigzagcat/metrics.hpp"

using namespace zzc;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

CoxeterGraph resolve_graph(const std::string& spec) {
    try {
        return load_graph(spec);
    } catch (const DomainError& e) {
        throw UsageError(std::string("invalid --graph: ") + e.what());
    }
}

json read_json_arg(const std::string& arg) {
    try {
        if (!arg.empty() && arg[0] == '{') return json::parse(arg);
        std::ifstream in(arg);
        if (!in) throw UsageError("cannot open '" + arg + "'");
        return json::parse(in);
    } catch (const json::exception& e) {
        throw UsageError("malformed JSON in '" + arg + "': " + e.what());
    }
}

// "P3", "X" (A2 only), a JSON file or inline JSON.
ProjComplex load_object(const AlgebraPtr& alg, const std::string& arg) {
    if (arg.size() >= 2 && (arg[0] == 'P' || arg[0] == 'p') && std::isdigit(static_cast<unsigned char>(arg[1]))) {
        int v = std::stoi(arg.substr(1));
        if (!alg->graph().has_vertex(v)) throw DomainError("no vertex " + std::to_string(v) + " in this graph");
        return ProjComplex::projective(alg, v);
    }
    if (arg == "X") {
        if (!(alg->graph() == a2::algebra()->graph())) throw DomainError("X is the A2 object P1 -> P2<-1>");
        return a2::stable_object(a2::SX);
    }
    return complex_from_json(alg, read_json_arg(arg));
}

BraidWord word_arg(const CoxeterGraph& g, const std::string& text) {
    BraidWord w = parse_word(text);
    for (int x : w)
        if (std::abs(x) > g.rank()) throw UsageError("letter " + std::to_string(x) + " is out of range for this graph");
    return w;
}

struct Output {
    std::string format = "json";
    void emit(const json& j, const std::string& text) const {
        if (format == "text")
            std::cout << text << "\n";
        else
            std::cout << j.dump(2) << "\n";
    }
};

std::string hom_text(const HomDims& d) {
    std::ostringstream os;
    os << "total " << d.total();
    for (const auto& [deg, n] : d.graded) os << "\n  [" << deg.h << "]<" << deg.dl << ">{" << deg.dm << "}: " << n;
    return os.str();
}

std::string matrix_text(const LaurentMatrix& m) {
    std::ostringstream os;
    for (int r = m.offset(); r < m.offset() + m.size(); ++r) {
        for (int c = m.offset(); c < m.offset() + m.size(); ++c) os << (c == m.offset() ? "" : "\t") << m.at(r, c).str();
        if (r + 1 < m.offset() + m.size()) os << "\n";
    }
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact braid group actions on complexes over zigzag algebras"};
    app.require_subcommand(1);
    app.fallthrough();
    Output out;
    std::string graph_spec = "a2";
    app.add_option("--format", out.format, "json or text")->check(CLI::IsMember({"json", "text"}));

    auto graph_opt = [&](CLI::App* sub) { sub->add_option("--graph,-g", graph_spec, "a2..a9, d4..d6, e6..e8 or a graph JSON file"); };

    std::string word, object = "P1", from = "P1", to = "P1", cx, grading = "dual", curve_text, action = "to-complex";
    std::string kind = "dual", variant = "basic", start = "A", xw, yw;
    bool no_reduce = false, check_dg = false, based = false, export_automaton = false, timing = false;
    int bound = 6, rank = 3, curve_n = 0, radius = 2;
    std::vector<int> only;

    auto* act = app.add_subcommand("act", "apply a braid word to an object");
    graph_opt(act);
    act->add_option("--word,-w", word, "signed generators, e.g. \"1 -2\"")->required();
    act->add_option("--object,-o", object, "P<i>, X, or complex JSON");
    act->add_flag("--no-reduce", no_reduce, "skip Gaussian elimination");

    auto* canon = app.add_subcommand("canon", "canonical tuple of a braid");
    graph_opt(canon);
    canon->add_option("--word,-w", word)->required();

    auto* reduce = app.add_subcommand("reduce", "minimal model of a complex");
    graph_opt(reduce);
    reduce->add_option("--complex,-c", cx, "complex JSON file or inline JSON")->required();

    auto* hom = app.add_subcommand("hom", "graded dimensions of Hom in the homotopy category");
    graph_opt(hom);
    hom->add_option("--from", from);
    hom->add_option("--to", to);

    auto* euler = app.add_subcommand("euler", "Grothendieck class of an object");
    graph_opt(euler);
    euler->add_option("--object,-o", object);
    euler->add_option("--word,-w", word, "applied to the object first");

    auto* burau = app.add_subcommand("burau", "Burau matrix of a braid");
    graph_opt(burau);
    burau->add_option("--word,-w", word)->required();

    auto* decat = app.add_subcommand("decat-check", "compare Euler classes of w.P_i with the Burau matrix");
    graph_opt(decat);
    decat->add_option("--word,-w", word)->required();

    auto* curve = app.add_subcommand("curve", "curves in the punctured disk");
    curve->add_option("action", action, "to-complex or crossings")->check(CLI::IsMember({"to-complex", "crossings"}));
    curve->add_option("--text,-t", curve_text, "e.g. \"1 O2 W+3 E2\"")->required();
    curve->add_option("--n", curve_n, "rank of the ambient A_n (default: fits the curve)");
    curve->add_flag("--based", based, "allow the based puncture B");

    auto* spread_cmd = app.add_subcommand("spread", "classical or dual spread");
    graph_opt(spread_cmd);
    spread_cmd->add_option("--word,-w", word)->required();
    spread_cmd->add_option("--grading", grading)->check(CLI::IsMember({"dual", "classical"}));

    auto* wordlen = app.add_subcommand("wordlen", "word length in Garside simples by breadth-first search");
    graph_opt(wordlen);
    wordlen->add_option("--word,-w", word)->required();
    wordlen->add_option("--grading", grading)->check(CLI::IsMember({"dual", "classical"}));
    wordlen->add_option("--bound", bound);

    auto* interval = app.add_subcommand("interval", "classical or dual Garside interval in A_n");
    interval->add_option("--kind", kind)->check(CLI::IsMember({"dual", "classical"}));
    interval->add_option("--n", rank);
    interval->add_flag("--check-digne-gobet", check_dg);

    auto* support = app.add_subcommand("support", "HN support in A2 of w.object");
    support->add_option("--word,-w", word);
    support->add_option("--object,-o", object, "P1, P2, X, a complex, or 'triple' for {P1,P2,X}");

    auto* recognize_cmd = app.add_subcommand("recognize", "run an A2 automaton (letters read right to left)");
    recognize_cmd->add_option("--variant", variant)->check(CLI::IsMember({"basic", "extended"}));
    recognize_cmd->add_option("--start", start);
    recognize_cmd->add_option("--word,-w", word, "letters 1 2 X g, '-' for inverses");
    recognize_cmd->add_flag("--export", export_automaton, "print the automaton instead");

    auto* nf_cmd = app.add_subcommand("normalform", "A2 normal form gamma^n and runs");
    nf_cmd->add_option("--word,-w", word)->required();

    auto* walls = app.add_subcommand("walls", "count walls separating x.D and y.D in A2");
    walls->add_option("--x", xw);
    walls->add_option("--y", yw);
    walls->add_option("--radius,-r", radius);

    auto* selftest = app.add_subcommand("selftest", "run the acceptance criteria");
    selftest->add_option("--only", only, "criterion numbers");
    selftest->add_flag("--timing", timing, "append run times");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*act) {
            auto g = resolve_graph(graph_spec);
            auto alg = make_algebra(g);
            auto w = word_arg(g, word);
            auto c = apply_word(w, load_object(alg, object), !no_reduce);
            out.emit({{"word", format_word(w)}, {"reduced", !no_reduce}, {"complex", to_json(c)}}, c.str());
        } else if (*canon) {
            auto g = resolve_graph(graph_spec);
            auto alg = make_algebra(g);
            auto w = word_arg(g, word);
            auto t = canonical_tuple(alg, w);
            json comps = json::array();
            std::uint64_t h = 1469598103934665603ULL;
            std::string text;
            auto gv = g.generator_vertices();
            for (size_t i = 0; i < t.comps.size(); ++i) {
                auto d = complex_digest(t.comps[i]);
                h = (h ^ d) * 1099511628211ULL;
                comps.push_back({{"vertex", gv[i]}, {"digest", hex_digest(d)}, {"complex", to_json(t.comps[i].sorted())}});
                text += "P" + std::to_string(gv[i]) + " -> " + t.comps[i].sorted().str() + "\n";
            }
            out.emit({{"word", format_word(w)}, {"digest", hex_digest(h)}, {"components", comps}}, text + "digest " + hex_digest(h));
        } else if (*reduce) {
            auto alg = make_algebra(resolve_graph(graph_spec));
            auto c = gaussian_reduce(complex_from_json(alg, read_json_arg(cx)));
            out.emit(to_json(c), c.str());
        } else if (*hom) {
            auto alg = make_algebra(resolve_graph(graph_spec));
            auto d = hom_dims(load_object(alg, from), load_object(alg, to));
            out.emit(to_json(d), hom_text(d));
        } else if (*euler) {
            auto g = resolve_graph(graph_spec);
            auto alg = make_algebra(g);
            auto c = apply_word(word_arg(g, word), load_object(alg, object));
            auto v = euler_class(c);
            out.emit(to_json(v), v.str());
        } else if (*burau) {
            auto g = resolve_graph(graph_spec);
            auto m = burau_of_word(g, word_arg(g, word));
            out.emit({{"word", format_word(parse_word(word))}, {"matrix", to_json(m)}}, matrix_text(m));
        } else if (*decat) {
            auto g = resolve_graph(graph_spec);
            auto r = decat_consistency(make_algebra(g), word_arg(g, word));
            json j = {{"ok", r.ok}};
            if (!r.ok) j.update({{"column", r.column}, {"expected", r.expected}, {"actual", r.actual}});
            out.emit(j, r.ok ? "ok" : "mismatch in column " + std::to_string(r.column) + ": expected " + r.expected +
                                          ", got " + r.actual);
        } else if (*curve) {
            int n = curve_n;
            if (n <= 0) {
                auto probe = parse_curve(curve_text, 64, based);
                for (const auto& t : probe.tokens) n = std::max(n, t.p - 1);
                n = std::max(n, 1);
            }
            auto cv = parse_curve(curve_text, n, based);
            auto g = based ? based_extension(CoxeterGraph::type_a(n)) : CoxeterGraph::type_a(n);
            auto alg = make_algebra(g);
            auto c = curve_to_complex(cv, alg);
            if (action == "to-complex") {
                out.emit({{"curve", cv.str()}, {"n", n}, {"complex", to_json(c)}}, c.str());
            } else {
                json arcs = json::array();
                std::string text;
                for (int i = 1; i <= n; ++i) {
                    auto cc = crossings_with_standard_arc(cv, i);
                    int h = hom_dims(ProjComplex::projective(alg, i), c).total();
                    arcs.push_back({{"arc", i}, {"transverse", cc.transverse}, {"endpoints", cc.endpoints}, {"hom_total", h}});
                    text += "arc " + std::to_string(i) + ": 2*" + std::to_string(cc.transverse) + "+" +
                            std::to_string(cc.endpoints) + " vs Hom " + std::to_string(h) + "\n";
                }
                out.emit({{"curve", cv.str()}, {"n", n}, {"arcs", arcs}}, text.substr(0, text.size() - 1));
            }
        } else if (*spread_cmd) {
            auto g = resolve_graph(graph_spec);
            auto gr = parse_grading(grading);
            int s = spread(make_algebra(g), word_arg(g, word), gr);
            out.emit({{"grading", to_string(gr)}, {"spread", s}}, std::to_string(s));
        } else if (*wordlen) {
            auto g = resolve_graph(graph_spec);
            auto gr = parse_grading(grading);
            auto len = word_length_bfs(make_algebra(g), word_arg(g, word), garside_generators(g, gr), bound);
            json j = {{"grading", to_string(gr)}, {"bound", bound}};
            j["length"] = len ? json(*len) : json(nullptr);
            out.emit(j, len ? std::to_string(*len) : "> " + std::to_string(bound));
        } else if (*interval) {
            auto g = CoxeterGraph::type_a(rank);
            auto items = enumerate_interval(g, parse_grading(kind));
            json els = json::array();
            std::string text;
            for (const auto& w : items) {
                els.push_back(format_word(w));
                text += "[" + format_word(w) + "]\n";
            }
            json j = {{"kind", kind}, {"n", rank}, {"size", items.size()}, {"elements", els}};
            if (check_dg) {
                json cert = json::array();
                for (const auto& e : digne_gobet_check(g)) {
                    cert.push_back({{"u", format_word(e.u)}, {"certified", e.certified}, {"a", format_word(e.a)}, {"b", format_word(e.b)}});
                    text += "[" + format_word(e.u) + "] = [" + format_word(e.a) + "] [" + format_word(e.b) + "]^-1" +
                            (e.certified ? "" : " (not certified)") + "\n";
                }
                j["digne_gobet"] = cert;
            }
            out.emit(j, text.substr(0, text.empty() ? 0 : text.size() - 1));
        } else if (*support) {
            auto alg = a2::algebra();
            auto w = word_arg(alg->graph(), word);
            a2::Support s;
            if (object == "triple") {
                std::vector<ProjComplex> objs;
                for (const auto& d : a2::base_triple()) objs.push_back(apply_word(w, d));
                s = a2::support_union(objs);
            } else {
                s = a2::hn_support(apply_word(w, load_object(alg, object)));
            }
            out.emit({{"support", a2::support_str(s)}}, a2::support_str(s));
        } else if (*recognize_cmd) {
            const auto& a = variant == "basic" ? a2::basic_automaton() : a2::extended_automaton();
            if (export_automaton) {
                out.emit(to_json(a), to_json(a).dump());
            } else {
                auto letters = a2::parse_letters(word);
                for (int l : letters)
                    if (std::find(a.alphabet.begin(), a.alphabet.end(), l) == a.alphabet.end())
                        throw UsageError("letter " + a2::letter_name(l) + " is not in the " + variant + " alphabet");
                int s0;
                try {
                    s0 = a.state(start);
                } catch (const std::invalid_argument& e) {
                    throw UsageError(e.what());
                }
                auto r = a2::recognize(a, letters, s0);
                json j = {{"variant", variant}, {"start", start}, {"accepted", r.accepted}};
                if (r.accepted)
                    j["state"] = a.names[r.state];
                else
                    j["position"] = r.position;
                out.emit(j, r.accepted ? "accepted(" + a.names[r.state] + ")" : "rejected(" + std::to_string(r.position) + ")");
            }
        } else if (*nf_cmd) {
            auto alg = a2::algebra();
            auto w = word_arg(alg->graph(), word);
            auto nf = a2::normal_form(w);
            bool certified = canonical_tuple(alg, nf.word()).equals(canonical_tuple(alg, w));
            json runs = json::array();
            for (auto [l, m] : nf.runs) runs.push_back({a2::letter_name(l), m});
            out.emit({{"n", nf.n}, {"runs", runs}, {"text", nf.str()}, {"certified", certified}}, nf.str());
        } else if (*walls) {
            auto g = a2::algebra()->graph();
            int c = a2::count_separating_walls(word_arg(g, xw), word_arg(g, yw), radius);
            out.emit({{"radius", radius}, {"walls", c}}, std::to_string(c));
        } else if (*selftest) {
            auto results = run_acceptance(only, out.format == "text" ? &std::cout : nullptr, timing);
            bool all = true;
            json arr = json::array();
            for (const auto& r : results) {
                all = all && r.pass;
                json e = {{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"detail", r.detail}};
                if (timing) e["seconds"] = r.seconds;
                arr.push_back(e);
            }
            if (out.format != "text") std::cout << json({{"all_pass", all}, {"criteria", arr}}).dump(2) << "\n";
            return all ? 0 : 1;
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
