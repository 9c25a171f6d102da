#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace zzc {

/// Thrown for inputs that are well-formed but mathematically unsupported.
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Signed generator indices: +i is sigma_i, -i its inverse.
using BraidWord = std::vector<int>;

/**
 * Simply-laced Coxeter graph with an orientation on every edge.
 *
 * Vertices are 1..n. A based graph additionally carries vertex 0, joined to
 * vertex 1 and oriented 0->1; its loop x_0 vanishes in the zigzag algebra.
 */
class CoxeterGraph {
public:
    CoxeterGraph() = default;
    CoxeterGraph(int n, const std::vector<std::pair<int, int>>& oriented_edges,
                 std::string type = "custom", bool based = false);

    static CoxeterGraph type_a(int n);
    static CoxeterGraph type_d(int n);
    static CoxeterGraph type_e(int n);
    /// Accepts a2..a9, d4..d6, e6..e8 (case-insensitive).
    static CoxeterGraph from_name(const std::string& name);

    int rank() const { return n_; }
    bool based() const { return based_; }
    const std::string& type() const { return type_; }
    int min_vertex() const { return based_ ? 0 : 1; }
    std::vector<int> vertices() const;
    /// Vertices that index braid generators (never the based vertex).
    std::vector<int> generator_vertices() const;
    bool has_vertex(int v) const { return v >= min_vertex() && v <= n_; }

    bool adjacent(int i, int j) const;
    /// True iff the edge {i,j} exists and is oriented i->j.
    bool oriented(int i, int j) const;
    std::vector<int> neighbours(int v) const;
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    /// Type A_n with the linear orientation 1->2->...->n (and no basing).
    bool is_linear_a() const;

    bool operator==(const CoxeterGraph& o) const {
        return n_ == o.n_ && based_ == o.based_ && edges_ == o.edges_;
    }

private:
    int n_ = 0;
    bool based_ = false;
    std::string type_ = "custom";
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> orient_;  // +1 for i->j, -1 for j->i
};

enum class SpecialKind { HalfTwist, CoxeterElement };

BraidWord free_reduce(const BraidWord& w);
BraidWord inverse(const BraidWord& w);
BraidWord concat(const BraidWord& a, const BraidWord& b);
BraidWord power(const BraidWord& w, int e);
void check_word(const CoxeterGraph& g, const BraidWord& w);

BraidWord special_word(const CoxeterGraph& g, SpecialKind kind);
/// T_alpha for alpha = alpha_i + ... + alpha_{i+k}.
BraidWord dual_generator(const CoxeterGraph& g, int i, int k);
/// All dual generators of a linear type-A graph, ordered by (i, k).
std::vector<BraidWord> dual_generators(const CoxeterGraph& g);

BraidWord parse_word(const std::string& text);
std::string format_word(const BraidWord& w);

/// Based extension of a linear type-A graph: vertex 0 prepended, 0->1.
CoxeterGraph based_extension(const CoxeterGraph& g);

}  // namespace zzc
