#pragma once

#include <array>
#include <complex>
#include <map>
#include <string>
#include <vector>

#include "zigzagcat/braid_action.hpp"

namespace zzc::a2 {

/// The three stables at the base point, in increasing phase: P2, X = (P1 -> P2<-1>), P1.
enum Stable : int { SP2 = 0, SX = 1, SP1 = 2 };
using Support = unsigned;  // bitmask over Stable
constexpr Support bit(Stable s) { return 1u << s; }
constexpr Support kAll = 7u;

std::string support_str(Support s);
Support parse_support(const std::string& s);

struct StabilityData {
    std::array<std::string, 3> names{"P2", "X", "P1"};
    std::array<double, 3> phase{0.0, 0.25, 0.5};
    std::array<std::complex<double>, 3> charge{std::complex<double>(1, 0), std::complex<double>(1, 1),
                                               std::complex<double>(0, 1)};
};

const StabilityData& base_stability();

AlgebraPtr algebra();
ProjComplex stable_object(Stable s);
/// The base triple {P1, P2, X}.
std::vector<ProjComplex> base_triple();

/// Phase of a stable whose generators carry homological degree k and path shift l (l+k constant).
double shifted_phase(Stable s, int k, int l);

/// Stables occurring in the HN filtration of a spherical object, via dual layers and ranks of (1|2).
Support hn_support(const ProjComplex& c, bool check_spherical = true);
Support support_union(const std::vector<ProjComplex>& objs);

// Alphabet: 1, 2, 3 (= sigma_X = s1 s2 s1^-1), 4 (= gamma = s1 s2); negatives are inverses.
constexpr int kSX = 3;
constexpr int kGamma = 4;
using Letters = std::vector<int>;

Letters parse_letters(const std::string& text);
std::string format_letters(const Letters& w);
std::string letter_name(int letter);
BraidWord expand(const Letters& w);

struct Automaton {
    std::string variant;
    std::vector<std::string> names;
    std::vector<Support> labels;
    std::vector<int> alphabet;
    std::map<std::pair<int, int>, int> delta;  // (state, letter) -> state

    int state(const std::string& name) const;
    int step(int s, int letter) const;  // -1 if no edge
};

const Automaton& basic_automaton();
const Automaton& extended_automaton();

struct Recognition {
    bool accepted = false;
    int state = -1;     // final state when accepted
    int position = 0;   // 1-based index (from the left) of the first unreadable letter
};

/// Letters are consumed right to left.
Recognition recognize(const Automaton& a, const Letters& w, int start);
/// Accepted from at least one state.
bool recognized(const Automaton& a, const Letters& w);

struct NormalForm {
    int n = 0;
    std::vector<std::pair<int, int>> runs;  // (letter in {1,2,3}, multiplicity)
    BraidWord word() const;
    std::string str() const;
};

/// gamma^n followed by runs of positive sigma_1, sigma_2, sigma_X with no gamma-forming pair.
NormalForm normal_form(const BraidWord& w, int max_steps = 1000000);

/// Walls (mu, S) with mu in the radius-R ball of {s1, s2, sX}^{+-}, taken up to left multiplication by
/// gamma and central shifts, and S a stable.
int count_separating_walls(const BraidWord& x, const BraidWord& y, int radius);

}  // namespace zzc::a2
