#include "qst/expand.hpp"

#include <algorithm>
#include <cstdlib>
#include <queue>

namespace qst {

namespace {
int color_index(const std::vector<std::string>& alphabet, const std::string& c) {
    for (size_t i = 0; i < alphabet.size(); ++i)
        if (alphabet[i] == c) return static_cast<int>(i);
    return -1;
}
}  // namespace

int ExpandedGraph::vertex_of(int tail, int pos) const {
    if (tail < 0 || tail >= static_cast<int>(tail_first.size()) || pos < 0 || pos > horizon)
        return -1;
    return tail_first[tail] + pos;
}

std::vector<int> ExpandedGraph::distances_from(int v) const {
    std::vector<int> dist(verts.size(), -1);
    std::queue<int> q;
    dist[v] = 0;
    q.push(v);
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        for (int eid : incident[x]) {
            int y = other(eid, x);
            if (y != x && dist[y] < 0) {
                dist[y] = dist[x] + 1;
                q.push(y);
            }
        }
    }
    return dist;
}

int ExpandedGraph::max_ball_radius(int v) const {
    if (tail_last.empty()) return 1 << 28;
    int r = 1 << 28;
    for (int last : tail_last) {
        auto dist = distances_from(last);
        if (dist[v] >= 0) r = std::min(r, dist[v]);
    }
    return r;
}

ExpandedGraph expand_quotient(const QuotientSpec& spec, int horizon) {
    ExpandedGraph g;
    g.degree = spec.degree;
    g.alphabet = spec.alphabet;
    g.horizon = horizon;

    for (const auto& v : spec.vertices) {
        ExVertex x;
        x.label = v.id;
        x.color = color_index(spec.alphabet, v.color);
        g.verts.push_back(std::move(x));
    }
    for (const auto& l : spec.loops) g.verts[spec.vertex_index(l.at)].loop = l.index;

    auto add_edge = [&](int u, int v, int iu, int iv) {
        g.edges.push_back({u, v, iu, iv});
    };
    for (const auto& e : spec.edges)
        add_edge(spec.vertex_index(e.a), spec.vertex_index(e.b), e.fwd, e.bwd);

    for (size_t ti = 0; ti < spec.tails.size(); ++ti) {
        const TailSpec& t = spec.tails[ti];
        std::vector<int> symbols;
        if (t.kind == TailKind::Periodic) {
            symbols.resize(horizon + 1);
            for (int j = 0; j <= horizon; ++j) symbols[j] = j % t.period();
        } else {
            symbols = substitution_symbols(t, horizon + 1);
        }
        int prev = spec.vertex_index(t.attach);
        int prev_fwd = t.attach_fwd;
        int prev_bwd = t.attach_bwd;
        g.tail_first.push_back(g.n_verts());
        for (int j = 0; j <= horizon; ++j) {
            const TailTemplate& tt = t.templates[symbols[j]];
            ExVertex x;
            x.label = tt.name + "@" + std::to_string(j);
            x.color = color_index(spec.alphabet, tt.color);
            x.loop = tt.loop;
            x.tail = static_cast<int>(ti);
            x.pos = j;
            x.tmpl = symbols[j];
            int id = g.n_verts();
            g.verts.push_back(std::move(x));
            add_edge(prev, id, prev_fwd, prev_bwd);
            prev = id;
            prev_fwd = tt.fwd;
            prev_bwd = tt.bwd;
        }
        g.tail_last.push_back(prev);
    }

    g.incident.assign(g.verts.size(), {});
    for (size_t eid = 0; eid < g.edges.size(); ++eid) {
        g.incident[g.edges[eid].u].push_back(static_cast<int>(eid));
        g.incident[g.edges[eid].v].push_back(static_cast<int>(eid));
    }
    return g;
}

int finite_eccentricity(const QuotientSpec& spec, const std::string& attach) {
    // BFS within the finite part only
    int n = static_cast<int>(spec.vertices.size());
    int s = spec.vertex_index(attach);
    std::vector<int> dist(n, -1);
    std::queue<int> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (const auto& e : spec.edges) {
            int a = spec.vertex_index(e.a), b = spec.vertex_index(e.b);
            int w = a == v ? b : (b == v ? a : -1);
            if (w >= 0 && dist[w] < 0) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
        }
    }
    int ecc = 0;
    for (int d : dist) ecc = std::max(ecc, d);
    return ecc;
}

int env_horizon_slack() {
    const char* s = std::getenv("QSTREE_HORIZON_SLACK");
    if (!s) return 0;
    int v = std::atoi(s);
    return v > 0 ? v : 0;
}

int default_horizon(const QuotientSpec& spec, int N, int slack) {
    int h = N + 1;
    for (const auto& t : spec.tails) {
        int ecc = finite_eccentricity(spec, t.attach);
        int p = t.period();
        // depth-n classes have witnesses from position n on; keep a full
        // period of extendable witnesses beyond them
        if (t.kind == TailKind::Periodic)
            h = std::max(h, ecc + 2 * N + 2 * p + 2);
        else
            h = std::max(h, ecc + 2 * N + 2 * std::max(p, 8) + 8);
    }
    return h + slack + env_horizon_slack();
}

}  // namespace qst
