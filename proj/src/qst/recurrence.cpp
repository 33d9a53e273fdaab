#include "qst/recurrence.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace qst {

std::vector<std::vector<int>> reach_layers(const ExpandedGraph& g, int start, int max_r) {
    // state: (vertex, arrival edge id) with -1 root, -2 loop arrival
    std::map<std::pair<int, int>, int> depth_of;
    std::vector<std::vector<int>> layers(max_r + 1);
    std::vector<char> seen_vertex(g.n_verts(), 0);
    std::queue<std::pair<std::pair<int, int>, int>> q;
    q.push({{start, -1}, 0});
    depth_of[{start, -1}] = 0;
    seen_vertex[start] = 1;
    layers[0].push_back(start);
    while (!q.empty()) {
        auto [state, d] = q.front();
        q.pop();
        if (d == max_r) continue;
        auto [v, in] = state;
        auto push = [&](int w, int via) {
            auto key = std::make_pair(w, via);
            if (depth_of.count(key)) return;
            depth_of[key] = d + 1;
            q.push({key, d + 1});
            if (!seen_vertex[w]) {
                seen_vertex[w] = 1;
                layers[d + 1].push_back(w);
            }
        };
        for (int eid : g.incident[v]) {
            int mult = g.out_index(eid, v) - (in == eid ? 1 : 0);
            if (mult >= 1) push(g.other(eid, v), eid);
        }
        int lmult = g.verts[v].loop - (in == -2 ? 1 : 0);
        if (lmult >= 1) push(v, -2);
    }
    return layers;
}

RecurrenceAnalyzer::RecurrenceAnalyzer(const QuotientSpec& spec, int max_n)
    : spec_(spec), max_n_(max_n) {
    auto census = BallCensus::build(spec, max_n);
    b_ = census->b;
    cap_max_ = max_n + b_[max_n] + 8;
    int H = default_horizon(spec, max_n) + 2 * cap_max_;
    g_ = expand_quotient(spec, H);
    coder_ = std::make_unique<BallCoder>(g_, canon_);
    cls_.assign(max_n + 1, std::vector<int>(g_.n_verts(), -1));
    for (int n = 0; n <= max_n; ++n)
        for (int v = 0; v < g_.n_verts(); ++v)
            if (coder_->max_radius(v) >= n) cls_[n][v] = coder_->code_at(v, n);
}

std::vector<int> RecurrenceAnalyzer::coverage_candidates(int cap) const {
    std::vector<int> out;
    for (int v = 0; v < g_.n_verts(); ++v) {
        if (g_.verts[v].tail < 0) {
            out.push_back(v);
            continue;
        }
        int p = spec_.tails[g_.verts[v].tail].period();
        if (g_.verts[v].pos <= cap + 2 * p + 2) out.push_back(v);
    }
    return out;
}

RppResult RecurrenceAnalyzer::rpp(int n, int cap) {
    RppResult res;
    res.n = n;
    res.cap = cap < 0 ? default_cap(n) : cap;
    std::set<int> all;
    for (int c : cls_[n])
        if (c >= 0) all.insert(c);

    auto candidates = coverage_candidates(res.cap);
    int max_r = res.cap - n;
    struct State {
        int center;
        std::vector<std::vector<int>> layers;
        std::set<int> covered;
    };
    std::vector<State> st;
    for (int v : candidates) st.push_back({v, reach_layers(g_, v, max_r), {}});

    for (int m = n; m <= res.cap; ++m) {
        int r = m - n;
        for (auto& s : st) {
            if (r < static_cast<int>(s.layers.size()))
                for (int w : s.layers[r]) {
                    if (cls_[n][w] < 0)
                        throw LimitError("recurrence search left the known-class zone");
                    s.covered.insert(cls_[n][w]);
                }
            res.best_coverage = std::max(res.best_coverage, static_cast<int>(s.covered.size()));
            if (s.covered.size() == all.size()) {
                res.value = m;
                res.center = s.center;
                return res;
            }
        }
    }
    res.capped = true;
    return res;
}

std::set<int> RecurrenceAnalyzer::far_classes(int n) const {
    std::set<int> out;
    for (size_t ti = 0; ti < spec_.tails.size(); ++ti) {
        if (spec_.tails[ti].kind != TailKind::Periodic) continue;
        int p = spec_.tails[ti].period();
        for (int j = n; j < n + p; ++j) {
            int v = g_.vertex_of(static_cast<int>(ti), j);
            if (v < 0 || cls_[n][v] < 0)
                throw LimitError("horizon too small for the far-zone class set");
            out.insert(cls_[n][v]);
        }
    }
    return out;
}

RResult RecurrenceAnalyzer::r(int n, int cap) {
    RResult res;
    res.n = n;
    res.cap = cap < 0 ? default_cap(n) : cap;
    std::set<int> all;
    for (int c : cls_[n])
        if (c >= 0) all.insert(c);

    bool periodic_tail = !spec_.tails.empty() &&
                         std::all_of(spec_.tails.begin(), spec_.tails.end(), [](const TailSpec& t) {
                             return t.kind == TailKind::Periodic;
                         });
    if (periodic_tail) {
        std::set<int> far = far_classes(n);
        for (int c : all) {
            if (far.count(c)) continue;
            res.status = RStatus::NotAttained;
            res.missing = canon_.str(c);
            res.explanation =
                "a radius-" + std::to_string(n) +
                " ball class occurs only near the finite part; balls centered far out on the "
                "tail miss it at every radius";
            return res;
        }
    }

    // every center must cover; centers beyond the candidate window repeat
    // the behavior of the deep phases (periodic tails)
    auto candidates = coverage_candidates(res.cap);
    int worst = -1;
    for (int v : candidates) {
        auto layers = reach_layers(g_, v, res.cap - n);
        std::set<int> covered;
        int got = -1;
        for (int m = n; m <= res.cap && got < 0; ++m) {
            int r = m - n;
            if (r < static_cast<int>(layers.size()))
                for (int w : layers[r]) {
                    if (cls_[n][w] < 0)
                        throw LimitError("recurrence search left the known-class zone");
                    covered.insert(cls_[n][w]);
                }
            if (covered.size() == all.size()) got = m;
        }
        if (got < 0) {
            res.status = RStatus::CapExceeded;
            return res;
        }
        worst = std::max(worst, got);
    }
    res.status = RStatus::Attained;
    res.value = worst;
    return res;
}

Prediction predict_rpp(const StructureBasics& basics, const ZGraph* z, const EvolutionTrace* trace,
                       const std::vector<int>& b, int n) {
    Prediction pr;
    pr.n = n;
    if (basics.degenerate) throw Inconsistency("prediction needs a quasi-Sturmian window");
    auto block_end = [&]() -> int {
        if (!trace) throw LimitError("prediction branch needs an evolution trace");
        for (int k : trace->nk)
            if (k >= n) return k;
        throw LimitError("no block boundary at or beyond n=" + std::to_string(n) +
                         " in the window");
    };
    if (basics.bounded == BoundedVerdict::Bounded) {
        if (!z) throw Inconsistency("prediction needs the tail-side quotient");
        if (z->topo == ZGraph::Topo::Cycle) {
            pr.branch = 'b';
            pr.value = n + (b[n] - static_cast<int>(basics.G.size()) + basics.r_xG + 1) / 2;
        } else {
            pr.branch = 'a';
            int nk = block_end();
            pr.nk = nk;
            if (nk >= static_cast<int>(b.size()))
                throw LimitError("complexity window does not reach the block boundary");
            pr.value = n + (b[nk] - static_cast<int>(basics.G.size()) + basics.r_xG + 1) / 2;
        }
    } else if (basics.bounded == BoundedVerdict::UnboundedHeuristic) {
        pr.branch = '1';
        int nk = block_end();
        pr.nk = nk;
        if (nk >= static_cast<int>(b.size()))
            throw LimitError("complexity window does not reach the block boundary");
        pr.value = n + b[nk] / 2;
    } else {
        throw Inconsistency("prediction branch undetermined (neither bounded nor unbounded)");
    }
    return pr;
}

bool uniform_recurrence_probe(RecurrenceAnalyzer& ra, int window) {
    for (int n = 0; n <= window; ++n) {
        RResult res = ra.r(n);
        if (res.status != RStatus::Attained) return false;
    }
    return true;
}

}  // namespace qst
