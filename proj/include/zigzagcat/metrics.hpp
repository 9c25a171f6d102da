#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zigzagcat/braid_action.hpp"

namespace zzc {

enum class Grading { Classical, Dual };
Grading parse_grading(const std::string& s);
std::string to_string(Grading g);

/// Classical layer of a generator is l+k, dual layer is m.
int layer_of(const GenLabel& g, Grading gr);

struct LayerProfile {
    Grading grading = Grading::Dual;
    std::map<int, std::vector<GenLabel>> layers;
};

LayerProfile layer_profile(const ProjComplex& c, Grading gr);
std::pair<int, int> layer_range(const ProjComplex& c, Grading gr);

/// Dual: one string P_i -> ... -> P_{i+k}<-k> per positive root. Classical: the monotone curves,
/// each intermediate puncture passed over or under. Both need a linearly oriented type-A graph.
std::vector<ProjComplex> linear_generators(const AlgebraPtr& alg, Grading gr);

/// r + s where [-r, s] is the smallest window (containing 0) holding every image layer.
int spread(const AlgebraPtr& alg, const BraidWord& w, Grading gr);
int spread_of_images(const std::vector<ProjComplex>& images, Grading gr);

/// Simple elements of the classical ([1,Delta]) or dual ([1,gamma]) Garside structure, minus the identity.
std::vector<BraidWord> garside_generators(const CoxeterGraph& g, Grading gr);

struct BallElement {
    BraidWord word;
    int dist = 0;
};

/// All elements within `radius` of the identity for the word metric of gens and their inverses.
std::vector<BallElement> bfs_ball(const AlgebraPtr& alg, const std::vector<BraidWord>& gens, int radius);

/// Word length of w in gens and their inverses, or nullopt if it exceeds `bound`.
std::optional<int> word_length_bfs(const AlgebraPtr& alg, const BraidWord& w, const std::vector<BraidWord>& gens,
                                   int bound);

/// Positive lifts of permutations (classical) or left divisors of gamma (dual), rank <= 3.
std::vector<BraidWord> enumerate_interval(const CoxeterGraph& g, Grading kind);

struct DigneGobetEntry {
    BraidWord u;
    bool certified = false;
    BraidWord a;
    BraidWord b;
};

/// For each u in [1,gamma], search a,b in [1,Delta] with u = a b^{-1}.
std::vector<DigneGobetEntry> digne_gobet_check(const CoxeterGraph& g);

}  // namespace zzc
