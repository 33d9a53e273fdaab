#pragma once

#include <string>
#include <vector>

#include "qst/spec.hpp"

namespace qst {

// Finite materialization of a QuotientSpec: the finite part plus tail
// occurrences 0..horizon per tail, with per-directed-edge indices.

struct ExVertex {
    std::string label;  // finite id, or "<template>@<pos>"
    int color = 0;      // alphabet index
    int loop = 0;       // loop index (0 = none)
    int tail = -1;      // -1 for finite vertices
    int pos = -1;       // tail position (occurrence)
    int tmpl = -1;      // template index within the tail
};

struct ExEdge {
    int u = -1, v = -1;
    int iu = 1;  // index i(u -> v)
    int iv = 1;  // index i(v -> u)
};

struct ExpandedGraph {
    int degree = 3;
    std::vector<std::string> alphabet;
    std::vector<ExVertex> verts;
    std::vector<ExEdge> edges;
    std::vector<std::vector<int>> incident;  // edge ids per vertex
    int horizon = 0;
    std::vector<int> tail_first;  // vertex id of occurrence 0, per tail
    std::vector<int> tail_last;   // vertex id of occurrence `horizon`, per tail

    int n_verts() const { return static_cast<int>(verts.size()); }
    int other(int eid, int v) const {
        const ExEdge& e = edges[eid];
        return e.u == v ? e.v : e.u;
    }
    int out_index(int eid, int v) const {
        const ExEdge& e = edges[eid];
        return e.u == v ? e.iu : e.iv;
    }
    int vertex_of(int tail, int pos) const;
    // BFS distances over undirected edges (loops do not shorten paths).
    std::vector<int> distances_from(int v) const;
    // Largest radius r such that the ball of radius r around (a lift of) v
    // is fully determined by this materialization.
    int max_ball_radius(int v) const;
};

ExpandedGraph expand_quotient(const QuotientSpec& spec, int horizon);

// ecc of the finite part as seen from a tail's attach vertex
int finite_eccentricity(const QuotientSpec& spec, const std::string& attach);

// Default horizon for analyses needing ball radii up to N.
int default_horizon(const QuotientSpec& spec, int N, int slack = 0);

// Extra horizon margin requested via the environment (QSTREE_HORIZON_SLACK).
int env_horizon_slack();

}  // namespace qst
