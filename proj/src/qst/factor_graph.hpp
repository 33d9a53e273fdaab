#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qst/census.hpp"

namespace qst {

enum class CaseLabel { PreK, Ia, Ib, Ic, II, III, NotApplicable };
std::string case_name(CaseLabel c);

// Graph on the radius-n ball classes; an edge means two classes are
// realized at adjacent centers in the cover.
struct FactorGraph {
    int n = 0;
    std::vector<int> verts;              // codes, canonical order
    std::map<int, std::set<int>> adj;    // includes self-loops (code -> code)

    bool has_edge(int a, int b) const;
    bool has_self_loop(int code) const { return has_edge(code, code); }
    int degree(int code) const;                 // self-loops excluded
    std::vector<int> neighbors(int code) const; // self excluded
};

FactorGraph build_factor_graph(const BallCensus& census, int n);

struct AdjacencyKind {
    bool weak = false;
    bool d_to_e = false;  // every witness of D has an E-neighbor
    bool e_to_d = false;
};
AdjacencyKind weak_strong_adjacency(const BallCensus& census, int n, int D, int E);

// S_n / A_n / B_n / C_n for every radius the window supports. The A/B side
// is pinned by the coincidence rule (S=C equal to one extension chain) when
// the window exhibits it, else by canonical order of the first extensions.
struct MarkerChains {
    int N0 = 0;
    int top = -1;               // S defined for N0..top, A/B for N0+1..top, C for N0..top-1
    std::vector<int> S, A, B, C;  // indexed by radius, -1 undefined
    std::optional<int> K;         // first n > N0 where A,S,C are not all equal
    bool seed_by_coincidence = false;
};
MarkerChains build_marker_chains(const BallCensus& census, int N0);

CaseLabel classify_case(const MarkerChains& chains, int n);

// Structural claims per label: case II puts the special ball at degree 3;
// cases I/III keep it at degree <= 2; classes witnessed outside G stay at
// degree <= 2 apart from the special one. Throws Inconsistency.
void assert_case_structure(const FactorGraph& fg, const MarkerChains& chains, int n,
                           const BallCensus& census, const std::vector<char>* in_G);

struct EvolutionTrace {
    int n_lo = 0, n_hi = 0;
    std::vector<CaseLabel> labels;  // labels[i] is the label at n_lo + i
    std::vector<int> m_of;          // component size through C for case-I radii, else -1
    std::vector<int> nk;            // block boundaries (pre-K and case-I radii)
    std::optional<int> K;
    bool seed_by_coincidence = false;
    std::vector<std::string> violations;

    CaseLabel at(int n) const { return labels[n - n_lo]; }
};

EvolutionTrace evolve(const BallCensus& census, const MarkerChains& chains, int n_lo, int n_hi,
                      const std::vector<char>* in_G);

enum class CyclicVerdict { Cyclic, AcyclicUpToWindow, NotApplicable };
struct CyclicReport {
    CyclicVerdict verdict = CyclicVerdict::NotApplicable;
    int first_cyclic_n = -1;
    std::vector<int> self_loop_at_S;  // radii where the special ball carries a self-loop
};
CyclicReport detect_cyclic(const BallCensus& census, int N0, int window);

// weak adjacency of a non-special class implies strong adjacency, and
// strong implies weak; verified exhaustively at radius n.
void check_adjacency_laws(const BallCensus& census, int n);

}  // namespace qst
