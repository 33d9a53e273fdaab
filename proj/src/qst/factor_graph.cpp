#include "qst/factor_graph.hpp"

#include <algorithm>
#include <queue>

namespace qst {

std::string case_name(CaseLabel c) {
    switch (c) {
        case CaseLabel::PreK: return "pre-K";
        case CaseLabel::Ia: return "I-a";
        case CaseLabel::Ib: return "I-b";
        case CaseLabel::Ic: return "I-c";
        case CaseLabel::II: return "II";
        case CaseLabel::III: return "III";
        default: return "n/a";
    }
}

bool FactorGraph::has_edge(int a, int b) const {
    auto it = adj.find(a);
    return it != adj.end() && it->second.count(b) > 0;
}

int FactorGraph::degree(int code) const {
    auto it = adj.find(code);
    if (it == adj.end()) return 0;
    int d = static_cast<int>(it->second.size());
    if (it->second.count(code)) --d;
    return d;
}

std::vector<int> FactorGraph::neighbors(int code) const {
    std::vector<int> out;
    auto it = adj.find(code);
    if (it == adj.end()) return out;
    for (int x : it->second)
        if (x != code) out.push_back(x);
    return out;
}

FactorGraph build_factor_graph(const BallCensus& census, int n) {
    FactorGraph fg;
    fg.n = n;
    for (const auto& rec : census.classes[n]) {
        fg.verts.push_back(rec.code);
        fg.adj[rec.code];
    }
    const auto& cls = census.class_of[n];
    for (const auto& e : census.g.edges) {
        if (cls[e.u] < 0 || cls[e.v] < 0) continue;
        fg.adj[cls[e.u]].insert(cls[e.v]);
        fg.adj[cls[e.v]].insert(cls[e.u]);
    }
    for (int v = 0; v < census.g.n_verts(); ++v)
        if (census.g.verts[v].loop > 0 && cls[v] >= 0) fg.adj[cls[v]].insert(cls[v]);
    return fg;
}

AdjacencyKind weak_strong_adjacency(const BallCensus& census, int n, int D, int E) {
    AdjacencyKind out;
    const auto& cls = census.class_of[n];
    auto strong = [&](int from, int to) {
        const ClassRecord* rec = census.find(n, from);
        if (!rec) throw Error("weak_strong_adjacency: unknown class");
        bool any_witness = false;
        for (int w : rec->witnesses) {
            bool known = true, hit = false;
            for (int eid : census.g.incident[w]) {
                int c = cls[census.g.other(eid, w)];
                if (c < 0) {
                    known = false;
                    break;
                }
                if (c == to) hit = true;
            }
            if (!known) continue;
            if (census.g.verts[w].loop > 0 && cls[w] == to) hit = true;
            any_witness = true;
            if (!hit) return false;
        }
        if (!any_witness)
            throw LimitError("no witness with fully known neighborhood for strong adjacency");
        return true;
    };
    FactorGraph fg = build_factor_graph(census, n);
    out.weak = fg.has_edge(D, E);
    if (out.weak) {
        out.d_to_e = strong(D, E);
        out.e_to_d = strong(E, D);
    }
    return out;
}

MarkerChains build_marker_chains(const BallCensus& census, int N0) {
    MarkerChains ch;
    ch.N0 = N0;
    ch.top = census.N - 1;
    int size = census.N + 1;
    ch.S.assign(size, -1);
    ch.A.assign(size, -1);
    ch.B.assign(size, -1);
    ch.C.assign(size, -1);
    if (ch.top < N0) throw Error("window too small for marker chains");

    for (int n = N0; n <= ch.top; ++n) ch.S[n] = census.unique_special(n);
    for (int n = N0; n <= ch.top - 1; ++n) {
        const ClassRecord* rec = census.find(n + 1, ch.S[n + 1]);
        ch.C[n] = rec->restriction;
    }

    // extension pair of S_n lives at radius n+1
    auto extensions = [&](int n) {
        const ClassRecord* rec = census.find(n, ch.S[n]);
        if (rec->extensions.size() != 2)
            throw Inconsistency("special ball at radius " + std::to_string(n) +
                                " does not have exactly two extensions");
        return std::make_pair(rec->extensions[0], rec->extensions[1]);
    };

    {
        auto [x, y] = extensions(N0);
        ch.A[N0 + 1] = x;  // canonical order; possibly swapped below
        ch.B[N0 + 1] = y;
    }
    for (int n = N0 + 1; n <= ch.top - 1; ++n) {
        auto [x, y] = extensions(n);
        int ix = census.containment_count(n + 1, x, ch.A[n]);
        int iy = census.containment_count(n + 1, y, ch.A[n]);
        if (ix == iy)
            throw Inconsistency("extension containment counts tie at radius " +
                                std::to_string(n + 1));
        ch.A[n + 1] = ix > iy ? x : y;
        ch.B[n + 1] = ix > iy ? y : x;
    }

    // pin the A side so the S = C coincidence lands on the A chain
    for (int n = N0 + 1; n <= ch.top - 1; ++n) {
        if (ch.S[n] == ch.C[n] && (ch.S[n] == ch.A[n] || ch.S[n] == ch.B[n])) {
            if (ch.S[n] == ch.B[n]) std::swap(ch.A, ch.B);
            ch.seed_by_coincidence = true;
            break;
        }
    }

    for (int n = N0 + 1; n <= ch.top - 1; ++n) {
        if (!(ch.A[n] == ch.S[n] && ch.S[n] == ch.C[n])) {
            ch.K = n;
            break;
        }
    }

    // marker coherence
    for (int n = N0 + 1; n <= ch.top; ++n) {
        for (int code : {ch.A[n], ch.B[n]}) {
            if (code < 0) continue;
            const ClassRecord* rec = census.find(n, code);
            if (!rec || rec->restriction != ch.S[n - 1])
                throw Inconsistency("extension chain does not restrict to the special ball at " +
                                    std::to_string(n - 1));
        }
    }
    return ch;
}

CaseLabel classify_case(const MarkerChains& ch, int n) {
    int a = ch.A[n], b = ch.B[n], s = ch.S[n], c = ch.C[n];
    if (a < 0 || b < 0 || s < 0 || c < 0) return CaseLabel::NotApplicable;
    if (a == s && s == c) return CaseLabel::PreK;
    if (s == c) {
        if (s == b || s == a)
            throw Inconsistency("marker coincidence on the wrong chain at radius " +
                                std::to_string(n));
        return CaseLabel::III;
    }
    bool s_is_ext = (s == a || s == b);
    bool c_is_ext = (c == a || c == b);
    if (!s_is_ext && !c_is_ext) return CaseLabel::II;
    if ((a == s && b == c) || (b == s && a == c)) return CaseLabel::Ic;
    if (c_is_ext && !s_is_ext) return CaseLabel::Ia;
    if (s_is_ext && !c_is_ext) return CaseLabel::Ib;
    throw Inconsistency("unclassifiable marker pattern at radius " + std::to_string(n));
}

void assert_case_structure(const FactorGraph& fg, const MarkerChains& ch, int n,
                           const BallCensus& census, const std::vector<char>* in_G) {
    CaseLabel label = classify_case(ch, n);
    if (label == CaseLabel::NotApplicable) return;
    int s = ch.S[n];
    int degS = fg.degree(s);
    if (label == CaseLabel::II) {
        if (degS != 3)
            throw Inconsistency("case II at radius " + std::to_string(n) +
                                " but the special ball has degree " + std::to_string(degS));
    } else {
        if (degS > 2)
            throw Inconsistency("case " + case_name(label) + " at radius " + std::to_string(n) +
                                " but the special ball has degree " + std::to_string(degS));
    }
    // classes realized outside G stay linear apart from the special ball
    for (const auto& rec : census.classes[n]) {
        if (rec.code == s) continue;
        bool outside = false;
        for (int w : rec.witnesses)
            if (!in_G || !(*in_G)[w]) {
                outside = true;
                break;
            }
        if (outside && fg.degree(rec.code) > 2)
            throw Inconsistency("class outside the finite part has degree " +
                                std::to_string(fg.degree(rec.code)) + " at radius " +
                                std::to_string(n));
    }
}

namespace {
int component_size_through(const FactorGraph& fg, int start, int removed) {
    std::set<int> seen{start};
    std::queue<int> q;
    q.push(start);
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        for (int y : fg.neighbors(x)) {
            if (y == removed || seen.count(y)) continue;
            seen.insert(y);
            q.push(y);
        }
    }
    return static_cast<int>(seen.size());
}
}  // namespace

EvolutionTrace evolve(const BallCensus& census, const MarkerChains& ch, int n_lo, int n_hi,
                      const std::vector<char>* in_G) {
    EvolutionTrace tr;
    tr.n_lo = n_lo;
    tr.n_hi = n_hi;
    tr.K = ch.K;
    tr.seed_by_coincidence = ch.seed_by_coincidence;
    auto note = [&](int n, const std::string& msg) {
        tr.violations.push_back("n=" + std::to_string(n) + ": " + msg);
    };

    std::vector<FactorGraph> graphs;
    for (int n = n_lo; n <= n_hi; ++n) {
        graphs.push_back(build_factor_graph(census, n));
        CaseLabel label = classify_case(ch, n);
        tr.labels.push_back(label);
        assert_case_structure(graphs.back(), ch, n, census, in_G);
        int m = -1;
        if (label == CaseLabel::Ia || label == CaseLabel::Ib || label == CaseLabel::Ic)
            m = component_size_through(graphs.back(), ch.C[n], ch.S[n]);
        tr.m_of.push_back(m);
        if (label == CaseLabel::PreK || label == CaseLabel::Ia || label == CaseLabel::Ib ||
            label == CaseLabel::Ic)
            tr.nk.push_back(n);
    }

    auto is_I = [](CaseLabel l) {
        return l == CaseLabel::Ia || l == CaseLabel::Ib || l == CaseLabel::Ic;
    };

    // pre-K labels form a prefix
    bool seen_other = false;
    for (int n = n_lo; n <= n_hi; ++n) {
        if (tr.at(n) == CaseLabel::PreK && seen_other) note(n, "pre-K label after the chain split");
        if (tr.at(n) != CaseLabel::PreK) seen_other = true;
        if (tr.at(n) == CaseLabel::Ic && (!ch.K || n != *ch.K))
            note(n, "case I-c away from the split radius");
    }

    // block discipline: I at n with m far vertices, then II up to n+m-1,
    // then I, or III at n+m followed by I
    for (int n = n_lo; n <= n_hi; ++n) {
        if (!is_I(tr.at(n))) continue;
        int m = tr.m_of[n - n_lo];
        if (m < 1) {
            note(n, "case I with empty far side");
            continue;
        }
        for (int i = n + 1; i <= std::min(n + m - 1, n_hi); ++i)
            if (tr.at(i) != CaseLabel::II)
                note(i, "expected case II inside the block starting at " + std::to_string(n));
        if (n + m <= n_hi) {
            CaseLabel end = tr.at(n + m);
            if (!is_I(end) && end != CaseLabel::III)
                note(n + m, "block starting at " + std::to_string(n) + " ends with " +
                                case_name(end));
            if (end == CaseLabel::III && n + m + 1 <= n_hi && !is_I(tr.at(n + m + 1)))
                note(n + m + 1, "case III not followed by case I");
        }
    }
    // a leading III (window starts mid-block) must still be followed by I
    for (int n = n_lo; n <= n_hi; ++n) {
        if (tr.at(n) == CaseLabel::III && n + 1 <= n_hi && !is_I(tr.at(n + 1)))
            note(n + 1, "case III not followed by case I");
        if (tr.at(n) == CaseLabel::III && n > n_lo && tr.at(n - 1) == CaseLabel::III)
            note(n, "two consecutive case III radii");
    }
    return tr;
}

CyclicReport detect_cyclic(const BallCensus& census, int N0, int window) {
    CyclicReport rep;
    bool any_special = false;
    for (int n = N0 + 1; n <= std::min(window, census.N - 1); ++n) {
        auto sp = census.special_balls(n);
        if (sp.size() != 1) continue;
        any_special = true;
        int s = sp[0].first;
        FactorGraph fg = build_factor_graph(census, n);
        if (fg.has_self_loop(s)) rep.self_loop_at_S.push_back(n);
        auto nb = fg.neighbors(s);
        bool on_cycle = false;
        for (size_t i = 0; i < nb.size() && !on_cycle; ++i)
            for (size_t j = i + 1; j < nb.size() && !on_cycle; ++j) {
                // connected in the graph without S?
                std::set<int> seen{nb[i]};
                std::queue<int> q;
                q.push(nb[i]);
                while (!q.empty() && !on_cycle) {
                    int x = q.front();
                    q.pop();
                    if (x == static_cast<int>(nb[j])) on_cycle = true;
                    for (int y : fg.neighbors(x)) {
                        if (y == s || seen.count(y)) continue;
                        seen.insert(y);
                        q.push(y);
                    }
                }
            }
        if (on_cycle) {
            rep.verdict = CyclicVerdict::Cyclic;
            rep.first_cyclic_n = n;
            return rep;
        }
    }
    rep.verdict = any_special ? CyclicVerdict::AcyclicUpToWindow : CyclicVerdict::NotApplicable;
    return rep;
}

void check_adjacency_laws(const BallCensus& census, int n) {
    FactorGraph fg = build_factor_graph(census, n);
    auto specials = census.special_balls(n);
    std::set<int> special_codes;
    for (auto& [c, k] : specials) special_codes.insert(c);
    for (int D : fg.verts)
        for (int E : fg.verts) {
            if (!fg.has_edge(D, E)) continue;
            AdjacencyKind k = weak_strong_adjacency(census, n, D, E);
            if (!k.weak) throw Inconsistency("edge without weak adjacency witness");
            if (!special_codes.count(D) && !k.d_to_e)
                throw Inconsistency("non-special class weakly but not strongly adjacent at " +
                                    std::to_string(n));
        }
}

}  // namespace qst
