#include "qst/report.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

namespace qst {

std::string complexity_csv(const BallCensus& census) {
    std::ostringstream os;
    os << "n,b,specials,increment\n";
    for (int n = 0; n <= census.N; ++n) {
        os << n << "," << census.b[n] << ",";
        if (n < census.N) {
            os << census.special_balls(n).size() << "," << census.b[n + 1] - census.b[n];
        } else {
            os << ",";
        }
        os << "\n";
    }
    return os.str();
}

std::string balls_text(const BallCensus& census, int n, bool with_codes) {
    std::ostringstream os;
    os << "radius " << n << ": " << census.b[n] << " classes\n";
    int i = 0;
    for (const auto& rec : census.classes[n]) {
        os << "c" << i++ << " witnesses=" << rec.witnesses.size()
           << " first=" << census.g.verts[rec.witnesses.front()].label;
        if (n < census.N) os << " extensions=" << rec.extensions.size();
        if (with_codes) os << " code=" << census.canon.str(rec.code);
        os << "\n";
    }
    return os.str();
}

std::string factor_graph_dot(const BallCensus& census, int n) {
    FactorGraph fg = build_factor_graph(census, n);
    std::map<int, std::string> short_id;
    int i = 0;
    for (int code : fg.verts) short_id[code] = "c" + std::to_string(i++);

    std::string marks_graph;
    std::map<int, std::string> marks;
    try {
        auto profile = complexity_profile(census);
        if (profile.N0 && n >= *profile.N0 + 1 && n <= census.N - 2) {
            MarkerChains ch = build_marker_chains(census, *profile.N0);
            auto add = [&](int code, const std::string& m) {
                if (code < 0) return;
                if (!marks[code].empty()) marks[code] += "/";
                marks[code] += m;
            };
            add(ch.S[n], "S");
            add(ch.A[n], "A");
            add(ch.B[n], "B");
            add(ch.C[n], "C");
            marks_graph = case_name(classify_case(ch, n));
        }
    } catch (const Error&) {
        // markers are an annotation; plain graph output stands on its own
    }

    std::ostringstream os;
    os << "graph factor_" << n << " {\n";
    os << "  label=\"radius " << n;
    if (!marks_graph.empty()) os << "; case " << marks_graph;
    os << "\";\n";
    for (int code : fg.verts) {
        os << "  " << short_id[code] << " [label=\"" << short_id[code];
        if (marks.count(code) && !marks[code].empty()) os << " [" << marks[code] << "]";
        os << "\"];\n";
    }
    for (int a : fg.verts)
        for (int b : fg.adj.at(a)) {
            if (census.canon.cmp(b, a) < 0) continue;  // emit each pair once
            os << "  " << short_id[a] << " -- " << short_id[b] << ";\n";
        }
    os << "}\n";
    return os.str();
}

std::string evolution_csv(const BallCensus& census, const EvolutionTrace& trace) {
    std::ostringstream os;
    os << "n,label,S_degree,m,block_boundary\n";
    auto profile = complexity_profile(census);
    MarkerChains ch = build_marker_chains(census, *profile.N0);
    for (int n = trace.n_lo; n <= trace.n_hi; ++n) {
        FactorGraph fg = build_factor_graph(census, n);
        os << n << "," << case_name(trace.at(n)) << "," << fg.degree(ch.S[n]) << ",";
        int m = trace.m_of[n - trace.n_lo];
        if (m >= 0) os << m;
        os << "," << (std::count(trace.nk.begin(), trace.nk.end(), n) ? 1 : 0) << "\n";
    }
    return os.str();
}

std::string structure_text(const QuotientSpec& spec, int max_n) {
    std::ostringstream os;
    auto census = BallCensus::build(spec, max_n + 2);
    StructureBasics sb = structure_basics(*census);
    auto profile = sb.profile;
    if (profile.N0)
        os << "N0=" << *profile.N0 << "\n" << "c=" << *profile.c << "\n";
    else
        os << "N0=none\n";
    os << "verdict="
       << (profile.verdict == Verdict::QuasiSturmianUpToN
               ? "quasi-sturmian-up-to-" + std::to_string(census->N)
               : profile.verdict == Verdict::PeriodicLike ? "periodic-like" : "other")
       << "\n";
    if (sb.degenerate) {
        os << "structure=degenerate\n";
        return os.str();
    }
    os << "N1=" << sb.N1 << "\n";
    os << "G={";
    for (size_t i = 0; i < sb.G.size(); ++i)
        os << (i ? "," : "") << census->g.verts[sb.G[i]].label;
    os << "}\n";
    os << "|G|=" << sb.G.size() << "\n";
    os << "x_N1=" << census->g.verts[sb.x_N1].label << "\n";
    os << "r_x_G=" << sb.r_xG << "\n";
    os << "shape=" << shape_name(sb.shape) << "\n";
    if (sb.bounded == BoundedVerdict::Undetermined) {
        RecurrenceAnalyzer ra(spec, std::min(max_n, 6));
        if (uniform_recurrence_probe(ra, std::min(max_n, 6)))
            sb.bounded = BoundedVerdict::UnboundedHeuristic;
    }
    os << "bounded=" << bounded_name(sb.bounded) << "\n";

    CyclicReport cyc = detect_cyclic(*census, *profile.N0, census->N - 1);
    os << "cyclic="
       << (cyc.verdict == CyclicVerdict::Cyclic
               ? "cyclic"
               : cyc.verdict == CyclicVerdict::AcyclicUpToWindow ? "acyclic-up-to-window"
                                                                 : "not-applicable")
       << "\n";
    if (!cyc.self_loop_at_S.empty()) {
        os << "self_loop_at_special=";
        for (size_t i = 0; i < cyc.self_loop_at_S.size(); ++i)
            os << (i ? "," : "") << cyc.self_loop_at_S[i];
        os << "\n";
    }

    if (sb.bounded == BoundedVerdict::Bounded && spec.tails.size() == 1) {
        ZGraph z = derive_Z(*census, sb);
        os << "Z=" << z.topo_string() << "\n";
        for (size_t i = 0; i < z.verts.size(); ++i) {
            os << "Z_vertex z" << i << " color=" << z.verts[i].color;
            if (z.verts[i].zloop) os << " loop=" << z.verts[i].zloop;
            os << "\n";
        }
        for (const auto& e : z.edges)
            os << "Z_edge z" << e[0] << " z" << e[1] << " " << e[2] << " " << e[3] << "\n";
    }
    return os.str();
}

std::string recurrence_csv(const QuotientSpec& spec, int max_n, bool with_predictions) {
    std::ostringstream os;
    os << "n,Rpp,Rpp_predicted,branch,R,status\n";
    RecurrenceAnalyzer ra(spec, max_n);

    std::unique_ptr<BallCensus> census;
    StructureBasics sb;
    std::optional<ZGraph> z;
    std::optional<EvolutionTrace> trace;
    std::vector<int> bwide;
    if (with_predictions) {
        census = BallCensus::build(spec, max_n + 8);
        sb = structure_basics(*census);
        bwide = census->b;
        if (!sb.degenerate && sb.bounded == BoundedVerdict::Bounded && spec.tails.size() == 1) {
            z = derive_Z(*census, sb);
            CyclicReport cyc = detect_cyclic(*census, *sb.profile.N0, census->N - 2);
            if (cyc.verdict == CyclicVerdict::AcyclicUpToWindow) {
                MarkerChains ch = build_marker_chains(*census, *sb.profile.N0);
                trace = evolve(*census, ch, *sb.profile.N0 + 1, census->N - 2, &sb.in_G);
            }
        }
    }

    for (int n = 0; n <= max_n; ++n) {
        RppResult rp = ra.rpp(n);
        os << n << ",";
        if (rp.capped)
            os << "cap-exceeded";
        else
            os << rp.value;
        os << ",";
        if (with_predictions && !sb.degenerate) {
            try {
                Prediction pr =
                    predict_rpp(sb, z ? &*z : nullptr, trace ? &*trace : nullptr, bwide, n);
                os << pr.value << "," << pr.branch;
            } catch (const Error&) {
                os << ",";
            }
        } else {
            os << ",";
        }
        os << ",";
        RResult rr = ra.r(n);
        if (rr.status == RStatus::Attained)
            os << rr.value << ",attained";
        else if (rr.status == RStatus::NotAttained)
            os << ",not-attained";
        else
            os << ",cap-exceeded";
        os << "\n";
    }
    return os.str();
}

std::string word_report(int k_max, int max_n) {
    WordFixture wf = WordFixture::build(k_max);
    std::ostringstream os;
    os << "word family up to k=" << k_max << "\n";
    for (int k = 1; k <= std::min(4, k_max); ++k) os << "X" << k << "=" << wf.x(k) << "\n";
    for (int k = 1; k <= k_max; ++k) {
        if (static_cast<long long>(wf.x(k).size()) != WordFixture::x_len(k))
            os << "length mismatch at k=" << k << "\n";
    }
    os << "lengths |X_k|=3*2^(k-1)+1 verified for k<=" << k_max << "\n";
    for (int k = 1; k <= k_max; ++k) {
        long long nk = WordFixture::n_k(k);
        if (2 * nk + 1 > static_cast<long long>(wf.text().size())) break;
        if (!wf.stable(static_cast<int>(2 * nk + 1))) break;
        int bb = wf.ball_count(static_cast<int>(nk));
        int pc = wf.p_count(static_cast<int>(2 * nk + 1));
        os << "k=" << k << " n_k=" << nk << " ball_classes=" << bb << " plain_factors=" << pc
           << " |X_k|=" << WordFixture::x_len(k)
           << (bb == WordFixture::x_len(k) ? " ball_match" : " BALL_MISMATCH")
           << (pc == WordFixture::x_len(k) ? " plain_match" : " plain_mismatch") << "\n";
    }
    os << "note: plain factor counts and reversal-class counts are both reported; at k=1 "
          "the plain count (5) differs from |X_1|=4 while the class count matches\n";
    os << "n,Rpp,Rpp_minus_n,block_k,floor_half_Xk,match\n";
    for (int n = 1; n <= max_n; ++n) {
        int k = 1;
        while (WordFixture::n_k(k) < n) ++k;
        int rpp;
        try {
            rpp = wf.rpp(n, n + static_cast<int>(WordFixture::x_len(k)) + 4);
        } catch (const LimitError&) {
            os << n << ",unsettled,,,,\n";
            continue;
        }
        long long half = WordFixture::x_len(k) / 2;
        os << n << "," << rpp << "," << rpp - n << "," << k << "," << half << ","
           << (rpp - n == half ? 1 : 0) << "\n";
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// invariant aggregator

namespace {

struct Checker {
    std::ostringstream out;
    int failures = 0;
    int limits = 0;

    void run(const std::string& name, const std::function<void()>& f) {
        try {
            f();
            out << "[ok]   " << name << "\n";
        } catch (const LimitError& e) {
            ++limits;
            out << "[LIMIT] " << name << ": " << e.what() << "\n";
        } catch (const Error& e) {
            ++failures;
            out << "[FAIL] " << name << ": " << e.what() << "\n";
        }
    }
    void info(const std::string& line) { out << "[info] " << line << "\n"; }
    void require(bool cond, const std::string& msg) {
        if (!cond) throw Inconsistency(msg);
    }
};

bool graphs_equal(const ExpandedGraph& a, const ExpandedGraph& b) {
    if (a.n_verts() != b.n_verts() || a.edges.size() != b.edges.size()) return false;
    for (int v = 0; v < a.n_verts(); ++v)
        if (a.verts[v].label != b.verts[v].label || a.verts[v].color != b.verts[v].color ||
            a.verts[v].loop != b.verts[v].loop)
            return false;
    for (size_t e = 0; e < a.edges.size(); ++e)
        if (a.edges[e].u != b.edges[e].u || a.edges[e].v != b.edges[e].v ||
            a.edges[e].iu != b.edges[e].iu || a.edges[e].iv != b.edges[e].iv)
            return false;
    return true;
}

}  // namespace

CheckOutcome run_check(const QuotientSpec& spec, int max_n) {
    Checker ck;
    const int N = std::max(max_n + 2, 4);

    ck.run("parse-serialize-round-trip", [&] {
        QuotientSpec again = parse_spec(serialize_spec(spec));
        for (int h : {0, 2, 5})
            ck.require(graphs_equal(expand_quotient(spec, h), expand_quotient(again, h)),
                       "round-tripped description expands differently");
    });

    ck.run("expansion-monotone", [&] {
        for (int h : {2, 5}) {
            ExpandedGraph small = expand_quotient(spec, h);
            ExpandedGraph big = expand_quotient(spec, h + 1);
            ck.require(small.n_verts() <= big.n_verts(), "expansion shrank");
            for (int v = 0; v < small.n_verts(); ++v)
                ck.require(small.verts[v].label == big.verts[v].label,
                           "expansion is not an extension of the smaller horizon");
        }
    });

    ck.run("degree-regularity", [&] {
        ExpandedGraph g = expand_quotient(spec, 6);
        for (int v = 0; v < g.n_verts(); ++v) {
            bool frontier = false;
            for (int last : g.tail_last) frontier |= v == last;
            if (frontier) continue;
            long long sum = g.verts[v].loop;
            for (int eid : g.incident[v]) sum += g.out_index(eid, v);
            ck.require(sum == g.degree, "directed index sum differs from the degree at " +
                                            g.verts[v].label);
        }
    });

    std::unique_ptr<BallCensus> census;
    ck.run("census-build", [&] { census = BallCensus::build(spec, N); });
    if (!census) {
        CheckOutcome oc;
        oc.report = ck.out.str();
        oc.failures = ck.failures;
        oc.limit_failures = ck.limits;
        return oc;
    }

    ck.run("horizon-doubling-stability", [&] {
        CensusOptions opt;
        opt.verify_stability = true;
        BallCensus::build(spec, std::min(N, 8), opt);
    });

    ck.run("canonical-permutation-invariance", [&] {
        std::mt19937 rng(12345);
        ExpandedGraph g = census->g;
        int n = std::min(4, N);
        for (int v = 0; v < std::min(4, g.n_verts()); ++v) {
            if (census->coder().max_radius(v) < n) continue;
            ColoredBall ball = unfold_ball(g, v, n);
            int base = canonical_code(ball, census->canon, g.alphabet);
            for (int trial = 0; trial < 100; ++trial) {
                for (auto& node : ball.nodes)
                    std::shuffle(node.kids.begin(), node.kids.end(), rng);
                ck.require(canonical_code(ball, census->canon, g.alphabet) == base,
                           "sibling order changed the canonical code");
            }
        }
    });

    ck.run("restrict-unfold-consistency", [&] {
        int n = std::min(5, N);
        for (int v = 0; v < std::min(6, census->g.n_verts()); ++v) {
            if (census->coder().max_radius(v) < n) continue;
            ColoredBall ball = unfold_ball(census->g, v, n);
            for (int m = 0; m <= n; ++m) {
                int a = canonical_code(restrict_ball(ball, m), census->canon, census->g.alphabet);
                ck.require(a == census->coder().code_at(v, m),
                           "restriction disagrees with direct extraction");
            }
        }
    });

    ck.run("restriction-chain", [&] {
        for (int n = 1; n <= N; ++n)
            for (const auto& rec : census->classes[n])
                ck.require(census->find(n - 1, rec.restriction) != nullptr,
                           "restriction missing from the census");
    });

    ck.run("increment-law", [&] {
        for (int n = 0; n < N; ++n) {
            int sum = 0;
            for (const auto& [code, k] : census->special_balls(n)) sum += k - 1;
            ck.require(sum == census->b[n + 1] - census->b[n],
                       "special extension counts do not add up at n=" + std::to_string(n));
        }
    });

    ck.run("restriction-surjectivity", [&] {
        for (int n = 0; n < N; ++n)
            for (const auto& rec : census->classes[n]) {
                bool hit = false;
                for (const auto& up : census->classes[n + 1]) hit |= up.restriction == rec.code;
                ck.require(hit, "a class is nobody's restriction at n=" + std::to_string(n));
            }
    });

    ck.run("witness-separation-finite-part", [&] {
        const int top = N - 1;
        for (int u = 0; u < census->g.n_verts(); ++u)
            for (int v = u + 1; v < census->g.n_verts(); ++v) {
                if (census->coder().max_radius(u) < top || census->coder().max_radius(v) < top)
                    continue;
                bool same = true;
                for (int n = 0; n <= top && same; ++n)
                    same = census->class_of[n][u] == census->class_of[n][v];
                if (same)
                    ck.require(census->g.verts[u].tail >= 0 && census->g.verts[v].tail >= 0,
                               "two non-tail vertices share every window class: " +
                                   census->g.verts[u].label + " vs " + census->g.verts[v].label);
            }
    });

    StructureBasics sb;
    bool have_basics = false;
    ck.run("structure-basics", [&] {
        sb = structure_basics(*census);
        have_basics = true;
    });

    ck.run("neighbor-maximal-type-laws", [&] {
        if (!have_basics || sb.degenerate) return;
        const int N0 = *sb.profile.N0;
        for (const auto& ts : sb.tsets) {
            if (ts.censored || ts.tau < N0) continue;
            std::vector<int> taus;
            bool complete = true;
            for (int eid : census->g.incident[ts.vertex]) {
                const TypeSet* nts = sb.type_set_of(census->g.other(eid, ts.vertex));
                if (!nts || nts->censored) {
                    complete = false;
                    break;
                }
                taus.push_back(nts->tau);
            }
            if (census->g.verts[ts.vertex].loop > 0) taus.push_back(ts.tau);
            if (!complete) continue;
            for (int t : taus)
                ck.require(std::abs(t - ts.tau) <= 1 || (t <= N0 - 1 && ts.tau <= N0 - 1),
                           "adjacent maximal types differ by more than one");
            ck.require(std::count(taus.begin(), taus.end(), ts.tau + 1) > 0,
                       "no neighbor of maximal type m+1 at " + census->g.verts[ts.vertex].label);
            int min_tau = sb.N1 >= 0 ? std::min(sb.N1, ts.tau) : ts.tau;
            for (const auto& other : sb.tsets) min_tau = std::min(min_tau, other.tau);
            if (ts.tau > min_tau && ts.tau - 1 >= N0)
                ck.require(std::count(taus.begin(), taus.end(), ts.tau - 1) > 0,
                           "no neighbor of maximal type m-1 at " +
                               census->g.verts[ts.vertex].label);
        }
    });

    ck.run("factor-graph-size-and-degrees", [&] {
        for (int n = 0; n <= std::min(N, max_n); ++n) {
            FactorGraph fg = build_factor_graph(*census, n);
            ck.require(static_cast<int>(fg.verts.size()) == census->b[n],
                       "factor graph misses classes");
            for (int code : fg.verts)
                ck.require(!fg.adj.at(code).empty(), "isolated class in the factor graph");
        }
    });

    ck.run("adjacency-laws", [&] {
        for (int n = 1; n <= std::min({N - 1, 6}); ++n) check_adjacency_laws(*census, n);
    });

    bool acyclic = false;
    CyclicReport cyc;
    ck.run("cyclic-detection", [&] {
        if (!have_basics || sb.degenerate) return;
        cyc = detect_cyclic(*census, *sb.profile.N0, N - 1);
        acyclic = cyc.verdict == CyclicVerdict::AcyclicUpToWindow;
        if (!cyc.self_loop_at_S.empty())
            ck.info("self-loop at the special ball at radii " +
                    std::to_string(cyc.self_loop_at_S.front()) + "..");
    });

    ck.run("bounded-type-when-branching", [&] {
        if (!have_basics || sb.degenerate) return;
        for (int n = *sb.profile.N0 + 1; n <= std::min(N - 1, max_n); ++n) {
            FactorGraph fg = build_factor_graph(*census, n);
            int big = 0;
            for (int code : fg.verts)
                if (fg.degree(code) >= 3) ++big;
            if (big >= 2)
                ck.require(sb.bounded == BoundedVerdict::Bounded,
                           "two branching classes but the coloring is not of bounded type");
        }
    });

    ck.run("unique-special-past-window-start", [&] {
        if (!have_basics || sb.degenerate) return;
        for (int n = *sb.profile.N0; n <= N - 1; ++n) {
            auto sp = census->special_balls(n);
            if (sp.size() != 1 || sp[0].second != 2)
                throw Inconsistency("special ball not unique with two extensions at n=" +
                                    std::to_string(n));
        }
    });

    ck.run("equal-maximal-type-equal-class", [&] {
        if (!have_basics || sb.degenerate) return;
        const int N0 = *sb.profile.N0;
        for (size_t i = 0; i < sb.tsets.size(); ++i)
            for (size_t j = i + 1; j < sb.tsets.size(); ++j) {
                const TypeSet& a = sb.tsets[i];
                const TypeSet& b = sb.tsets[j];
                if (a.censored || b.censored || a.tau != b.tau || a.tau < N0) continue;
                for (int n = 0; n <= census->N - 1; ++n)
                    if (census->class_of[n][a.vertex] != census->class_of[n][b.vertex])
                        throw Inconsistency("equal maximal types but distinct ball classes: " +
                                            census->g.verts[a.vertex].label + " vs " +
                                            census->g.verts[b.vertex].label);
            }
    });

    ck.run("outside-finite-part-degree-bound", [&] {
        if (!have_basics || sb.degenerate) return;
        for (int n = *sb.profile.N0 + 1; n <= std::min(N - 1, max_n); ++n) {
            FactorGraph fg = build_factor_graph(*census, n);
            int special = census->unique_special(n);
            for (const auto& rec : census->classes[n]) {
                if (rec.code == special) continue;
                bool outside = false;
                for (int w : rec.witnesses) outside |= !sb.in_G[w];
                if (outside && fg.degree(rec.code) > 2)
                    throw Inconsistency("tail-side class of degree " +
                                        std::to_string(fg.degree(rec.code)) + " at n=" +
                                        std::to_string(n));
            }
        }
    });

    ck.run("marker-chains-and-evolution", [&] {
        if (!have_basics || sb.degenerate || !acyclic) return;
        MarkerChains ch = build_marker_chains(*census, *sb.profile.N0);
        EvolutionTrace tr = evolve(*census, ch, *sb.profile.N0 + 1, N - 2, &sb.in_G);
        if (!tr.violations.empty()) throw Inconsistency(tr.violations.front());
    });

    std::optional<ZGraph> z;
    ck.run("tail-side-quotient", [&] {
        if (!have_basics || sb.degenerate || sb.bounded != BoundedVerdict::Bounded ||
            spec.tails.size() != 1)
            return;
        z = derive_Z(*census, sb);
        bool z_cyclic = z->topo == ZGraph::Topo::Cycle;
        if (cyc.verdict != CyclicVerdict::NotApplicable)
            ck.require(z_cyclic == (cyc.verdict == CyclicVerdict::Cyclic),
                       "factor-graph cyclicity and tail-side topology disagree");
    });

    ck.run("periodic-extension", [&] {
        if (!z) return;
        ExtensionCheck ec = build_periodic_extension(*census, sb, *z);
        ck.require(ec.bounded_ok, "extension complexity did not stabilize as a bounded constant");
        ck.require(ec.deep_agreement, "deep tail balls disagree with the extension");
        ck.require(ec.assignment_ok, "outward class assignment violated an index row");
    });

    ck.run("marked-recoloring-linear-growth", [&] {
        if (!z || !have_basics) return;
        BoundedRoundTrip rt = bounded_round_trip(*census, sb, *z, std::min(10, max_n + 2));
        ck.require(rt.marked_quasi_sturmian,
                   "marked recoloring is not quasi-Sturmian on the window");
        std::ostringstream line;
        line << "marked recoloring b: ";
        for (int x : rt.b_marked) line << x << " ";
        line << (rt.formula_match ? "(matches n+|alphabet|+|G|)"
                                  : "(differs from n+|alphabet|+|G|)");
        ck.info(line.str());
    });

    ck.run("recurrence-dichotomy-and-bounds", [&] {
        int rn = std::min(max_n, 6);
        RecurrenceAnalyzer ra(spec, rn);
        int prev = -1;
        for (int n = 0; n <= rn; ++n) {
            RppResult rp = ra.rpp(n);
            if (!rp.capped) {
                ck.require(rp.value >= n, "one-ball recurrence below n");
                ck.require(prev < 0 || rp.value >= prev, "one-ball recurrence not monotone");
                prev = rp.value;
                auto layers = reach_layers(ra.graph(), rp.center, rp.value - n);
                std::set<int> covered;
                for (const auto& layer : layers)
                    for (int w : layer) covered.insert(ra.classes()[n][w]);
                std::set<int> all;
                for (int c : ra.classes()[n])
                    if (c >= 0) all.insert(c);
                ck.require(covered == all, "coverage witness does not cover");
            }
        }
        if (have_basics && !sb.degenerate && sb.bounded == BoundedVerdict::Bounded &&
            sb.N1 + 1 <= rn) {
            RResult rr = ra.r(sb.N1 + 1);
            ck.require(rr.status == RStatus::NotAttained,
                       "periodic tail but the all-centers recurrence is attained at N1+1");
            ck.require(!rr.missing.empty(), "missing-class witness absent");
        }
        if (spec.tails.empty()) {
            for (int n = 0; n <= rn; ++n) {
                RResult rr = ra.r(n);
                ck.require(rr.status == RStatus::Attained, "finite quotient must attain R");
            }
        }
    });

    ck.run("recurrence-formula-agreement", [&] {
        if (!have_basics || sb.degenerate || sb.bounded != BoundedVerdict::Bounded ||
            !z)
            return;
        int top = std::min(max_n, 8);
        if (sb.N1 + 1 > top) return;
        RecurrenceAnalyzer ra(spec, top);
        std::optional<EvolutionTrace> trace;
        if (acyclic) {
            MarkerChains ch = build_marker_chains(*census, *sb.profile.N0);
            trace = evolve(*census, ch, *sb.profile.N0 + 1, N - 2, &sb.in_G);
        }
        for (int n = sb.N1 + 1; n <= top; ++n) {
            Prediction pr = predict_rpp(sb, &*z, trace ? &*trace : nullptr, census->b, n);
            RppResult rp = ra.rpp(n);
            if (rp.capped || rp.value != pr.value)
                throw Inconsistency("search and formula disagree at n=" + std::to_string(n));
        }
    });

    ck.run("uniform-recurrence-probe", [&] {
        if (!have_basics || sb.degenerate) return;
        if (sb.bounded != BoundedVerdict::Undetermined) return;
        RecurrenceAnalyzer ra(spec, std::min(max_n, 6));
        if (uniform_recurrence_probe(ra, std::min(max_n, 6))) {
            sb.bounded = BoundedVerdict::UnboundedHeuristic;
            ck.info("every sampled radius attains R: flagged unbounded-heuristic");
        }
    });

    ck.run("type-set-triples", [&] {
        if (!have_basics || sb.degenerate) return;
        if (sb.bounded == BoundedVerdict::UnboundedHeuristic)
            check_type_set_triples(*census, sb);
    });

    CheckOutcome oc;
    oc.report = ck.out.str();
    oc.failures = ck.failures;
    oc.limit_failures = ck.limits;
    return oc;
}

CheckOutcome run_word_check(int k_max) {
    Checker ck;
    WordFixture wf = WordFixture::build(std::max(k_max, 10));
    ck.run("word-members", [&] {
        ck.require(wf.x(1) == "aaba" && wf.x(2) == "baaabab", "wrong family start");
        for (int k = 1; k <= k_max; ++k)
            ck.require(static_cast<long long>(wf.x(k).size()) == WordFixture::x_len(k),
                       "member length formula failed at k=" + std::to_string(k));
        for (int k = 1; k < k_max; ++k)
            ck.require(wf.x(k + 1).find(wf.x(k)) != std::string::npos,
                       "member k not a factor of member k+1");
    });
    ck.run("word-class-counts", [&] {
        for (int k = 2; k <= std::min(4, k_max); ++k) {
            int n = static_cast<int>(WordFixture::n_k(k));
            ck.require(wf.stable(2 * n + 1), "factor sets not settled");
            ck.require(wf.ball_count(n) == WordFixture::x_len(k),
                       "ball class count differs from |X_k| at k=" + std::to_string(k));
        }
        ck.info("k=1: ball classes " + std::to_string(wf.ball_count(1)) + ", plain factors " +
                std::to_string(wf.p_count(3)) + ", |X_1|=" +
                std::to_string(WordFixture::x_len(1)));
    });
    ck.run("word-window-recurrence", [&] {
        ck.require(wf.rpp(1, 8) == 3, "window recurrence at n=1");
        for (int k = 2; k <= std::min(4, k_max); ++k) {
            for (long long n = WordFixture::n_k(k - 1) + 1; n <= WordFixture::n_k(k); ++n) {
                int rpp = wf.rpp(static_cast<int>(n),
                                 static_cast<int>(n + WordFixture::x_len(k) + 4));
                ck.require(rpp - n == WordFixture::x_len(k) / 2,
                           "window recurrence off the half-length at n=" + std::to_string(n));
            }
        }
    });
    CheckOutcome oc;
    oc.report = ck.out.str();
    oc.failures = ck.failures;
    oc.limit_failures = ck.limits;
    return oc;
}

}  // namespace qst
