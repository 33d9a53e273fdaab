// Acceptance suite: one pass/fail line per criterion, exact expectations.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "qst/fixtures.hpp"
#include "qst/recurrence.hpp"
#include "qst/report.hpp"
#include "qst/word.hpp"

using namespace qst;

namespace {

int g_failures = 0;

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

void criterion(const std::string& name, const std::function<void()>& f) {
    try {
        f();
        std::cout << "[PASS] " << name << "\n";
    } catch (const std::exception& e) {
        ++g_failures;
        std::cout << "[FAIL] " << name << ": " << e.what() << "\n";
    }
}

void require(bool cond, const std::string& msg) {
    if (!cond) throw Inconsistency(msg);
}

struct Fixture {
    const char* id;
    int N0;
    int N1;
    std::function<int(int)> b;  // expected complexity
};

const std::vector<Fixture>& fixtures() {
    static std::vector<Fixture> fs = {
        {"ex-basic(3)", 0, 0, [](int n) { return n + 3; }},
        {"ex-nonray", 0, 0, [](int n) { return n + 3; }},
        {"ex-n0eq1", 1, 1, [](int n) { return n == 0 ? 3 : n + 4; }},
        {"ex-loops-n0eq1", 1, 1, [](int n) { return n == 0 ? 3 : n + 5; }},
        {"ex-cycleG", 2, 2, [](int n) { return n == 0 ? 3 : n == 1 ? 5 : n + 5; }},
        {"ex-n0-ne-n1", 0, 1, [](int n) { return n + 3; }},
    };
    return fs;
}

}  // namespace

int main() {
    criterion("1 complexity tables (exact, <10s each)", [] {
        for (const Fixture& f : fixtures()) {
            Timer t;
            auto census = BallCensus::build(fixture_spec(f.id), 12);
            auto prof = complexity_profile(*census);
            for (int n = 0; n <= 12; ++n)
                require(census->b[n] == f.b(n), std::string(f.id) + ": b(" + std::to_string(n) +
                                                    ")=" + std::to_string(census->b[n]));
            require(prof.N0 && *prof.N0 == f.N0, std::string(f.id) + ": window start");
            StructureBasics sb = structure_basics(*BallCensus::build(fixture_spec(f.id), 12));
            require(sb.N1 == f.N1, std::string(f.id) + ": N1");
            require(t.seconds() < 10.0, std::string(f.id) + ": too slow");
        }
    });

    criterion("2 unique special ball and increment law", [] {
        for (const Fixture& f : fixtures()) {
            auto census = BallCensus::build(fixture_spec(f.id), 13);
            for (int n = f.N0; n <= 12; ++n) {
                auto sp = census->special_balls(n);
                require(sp.size() == 1, std::string(f.id) + ": specials at " + std::to_string(n));
                require(sp[0].second == 2,
                        std::string(f.id) + ": extension count at " + std::to_string(n));
            }
            for (int n = 0; n <= 12; ++n) {
                int sum = 0;
                for (const auto& [code, k] : census->special_balls(n)) sum += k - 1;
                require(sum == census->b[n + 1] - census->b[n],
                        std::string(f.id) + ": increment law at " + std::to_string(n));
            }
        }
    });

    criterion("3 tail-side quotients match the worked figures", [] {
        auto pairs = [](const ZGraph& z) {
            std::multiset<std::pair<int, int>> out;
            for (const auto& e : z.edges) out.insert(std::minmax(e[2], e[3]));
            return out;
        };
        {
            auto c = BallCensus::build(fixture_spec("ex-basic(3)"), 12);
            StructureBasics sb = structure_basics(*c);
            ZGraph z = derive_Z(*c, sb);
            require(z.topo == ZGraph::Topo::SingleVertex && z.verts.size() == 1 &&
                        z.verts[0].zloop == 3,
                    "single-vertex quotient with loop index 3");
        }
        {
            auto c = BallCensus::build(fixture_spec("ex-n0eq1"), 12);
            StructureBasics sb = structure_basics(*c);
            ZGraph z = derive_Z(*c, sb);
            require(z.topo == ZGraph::Topo::Segment && z.verts.size() == 5, "five-vertex segment");
            require(z.verts.front().zloop == 1 && z.verts.back().zloop == 1, "end loops index 1");
            require(pairs(z) == std::multiset<std::pair<int, int>>{{2, 2}, {1, 1}, {1, 2}, {2, 2}},
                    "segment index multiset");
        }
        {
            auto c = BallCensus::build(fixture_spec("ex-n0-ne-n1"), 12);
            StructureBasics sb = structure_basics(*c);
            ZGraph z = derive_Z(*c, sb);
            require(z.topo == ZGraph::Topo::Cycle && z.verts.size() == 4, "four-cycle quotient");
            require(pairs(z) == std::multiset<std::pair<int, int>>{{1, 2}, {1, 2}, {1, 2}, {1, 2}},
                    "cycle index multiset");
        }
    });

    criterion("4 evolution discipline over the window", [] {
        for (const Fixture& f : fixtures()) {
            if (std::string(f.id) == "ex-n0-ne-n1") continue;  // cyclic: labels not defined
            auto census = BallCensus::build(fixture_spec(f.id), 17);
            StructureBasics sb = structure_basics(*census);
            CyclicReport cyc = detect_cyclic(*census, f.N0, 15);
            require(cyc.verdict == CyclicVerdict::AcyclicUpToWindow,
                    std::string(f.id) + ": expected acyclic");
            MarkerChains ch = build_marker_chains(*census, f.N0);
            EvolutionTrace tr = evolve(*census, ch, f.N0 + 1, 15, &sb.in_G);
            require(tr.violations.empty(),
                    std::string(f.id) + ": " +
                        (tr.violations.empty() ? "" : tr.violations.front()));
            // branching radii put the special ball at degree three; one-sided
            // radii keep it at degree <= 2 with a linear graph outside the
            // finite part (asserted inside evolve); verify degrees again here.
            for (int n = tr.n_lo; n <= tr.n_hi; ++n) {
                FactorGraph fg = build_factor_graph(*census, n);
                int deg = fg.degree(ch.S[n]);
                if (tr.at(n) == CaseLabel::II)
                    require(deg == 3, std::string(f.id) + ": branching degree at " +
                                          std::to_string(n));
                else
                    require(deg <= 2, std::string(f.id) + ": one-sided degree at " +
                                          std::to_string(n));
            }
        }
    });

    criterion("5 closed-form recurrence agreement (<60s total)", [] {
        Timer t;
        for (const Fixture& f : fixtures()) {
            QuotientSpec spec = fixture_spec(f.id);
            RecurrenceAnalyzer ra(spec, 10);
            auto census = BallCensus::build(spec, 16);
            StructureBasics sb = structure_basics(*census);
            ZGraph z = derive_Z(*census, sb);
            std::optional<EvolutionTrace> trace;
            CyclicReport cyc = detect_cyclic(*census, f.N0, census->N - 2);
            if (cyc.verdict == CyclicVerdict::AcyclicUpToWindow) {
                MarkerChains ch = build_marker_chains(*census, f.N0);
                trace = evolve(*census, ch, f.N0 + 1, census->N - 2, &sb.in_G);
            }
            for (int n = f.N1 + 1; n <= 10; ++n) {
                Prediction pr = predict_rpp(sb, &z, trace ? &*trace : nullptr, census->b, n);
                RppResult rp = ra.rpp(n);
                require(!rp.capped, std::string(f.id) + ": search capped at " + std::to_string(n));
                require(rp.value == pr.value,
                        std::string(f.id) + ": n=" + std::to_string(n) + " got " +
                            std::to_string(rp.value) + " predicted " + std::to_string(pr.value) +
                            " (branch " + pr.branch + ")");
            }
        }
        require(t.seconds() < 60.0, "recurrence agreement too slow");
    });

    criterion("6 all-centers recurrence dichotomy", [] {
        for (const Fixture& f : fixtures()) {
            RecurrenceAnalyzer ra(fixture_spec(f.id), f.N1 + 2);
            RResult rr = ra.r(f.N1 + 1);
            require(rr.status == RStatus::NotAttained,
                    std::string(f.id) + ": expected not-attained at N1+1");
            require(!rr.missing.empty() && !rr.explanation.empty(),
                    std::string(f.id) + ": missing-class proof absent");
        }
        RecurrenceAnalyzer mono(fixture_spec("mono(3)"), 5);
        for (int n = 0; n <= 5; ++n) {
            RResult rr = mono.r(n);
            require(rr.status == RStatus::Attained && rr.value == n,
                    "constant coloring must attain R(n)=n");
        }
    });

    criterion("7 word family: class counts and window recurrence (<30s)", [] {
        Timer t;
        WordFixture wf = WordFixture::build(10);
        require(wf.rpp(1, 8) == 3, "window recurrence at n=1");
        for (int k = 2; k <= 4; ++k) {
            for (long long n = WordFixture::n_k(k - 1) + 1; n <= WordFixture::n_k(k); ++n) {
                int rpp = wf.rpp(static_cast<int>(n),
                                 static_cast<int>(n + WordFixture::x_len(k) + 4));
                require(rpp - n == WordFixture::x_len(k) / 2,
                        "half-length identity at n=" + std::to_string(n));
            }
            int n_k = static_cast<int>(WordFixture::n_k(k));
            require(wf.ball_count(n_k) == WordFixture::x_len(k),
                    "class count differs from the member length at k=" + std::to_string(k));
        }
        std::cout << "       k=1 report: ball classes " << wf.ball_count(1) << " = |X_1| "
                  << WordFixture::x_len(1) << "; plain factors " << wf.p_count(3)
                  << " deviate from |X_1| (reported, not suppressed)\n";
        require(t.seconds() < 30.0, "word checks too slow");
    });

    criterion("8 round trip: extension builds, bounded census, marked growth formula", [] {
        std::ostringstream detail;
        bool formula_everywhere = true;
        for (const Fixture& f : fixtures()) {
            auto census = BallCensus::build(fixture_spec(f.id), 12);
            StructureBasics sb = structure_basics(*census);
            ZGraph z = derive_Z(*census, sb);
            BoundedRoundTrip rt = bounded_round_trip(*census, sb, z, 10);
            require(rt.ext.bounded_ok,
                    std::string(f.id) + ": extension census not bounded within the bound");
            require(rt.ext.deep_agreement, std::string(f.id) + ": extension disagrees deep");
            require(rt.ext.assignment_ok, std::string(f.id) + ": outward assignment failed");
            require(rt.marked_quasi_sturmian,
                    std::string(f.id) + ": marked recoloring not quasi-Sturmian");
            if (!rt.formula_match) {
                formula_everywhere = false;
                detail << "  " << f.id << ": b_psi=";
                for (int x : rt.b_marked) detail << x << " ";
                detail << "vs n+|alphabet|+|G|=";
                for (int x : rt.formula) detail << x << " ";
                ExtensionCheck ec = build_periodic_extension(*census, sb, z);
                detail << "(observed identity: n+" << sb.G.size() << "+" << ec.b_ext.back()
                       << " from radius 1 on)\n";
            }
        }
        if (!formula_everywhere) {
            std::cout << detail.str();
            throw Inconsistency(
                "marked recoloring grows with slope one but the stated intercept "
                "n+|alphabet|+|G| does not hold on these fixtures");
        }
    });

    criterion("9 property suites", [] {
        // canonical-code permutation invariance, 1000 trials
        {
            Canon canon;
            ExpandedGraph g = expand_quotient(fixture_spec("ex-cycleG"), 16);
            std::mt19937 rng(20240817);
            ColoredBall ball = unfold_ball(g, 1, 5);
            int base = canonical_code(ball, canon, g.alphabet);
            for (int trial = 0; trial < 1000; ++trial) {
                for (auto& node : ball.nodes)
                    std::shuffle(node.kids.begin(), node.kids.end(), rng);
                require(canonical_code(ball, canon, g.alphabet) == base,
                        "sibling permutation changed a canonical code");
            }
        }
        // horizon doubling leaves every b(n), n <= 12, unchanged
        for (const Fixture& f : fixtures()) {
            CensusOptions opt;
            opt.verify_stability = true;
            BallCensus::build(fixture_spec(f.id), 12, opt);
        }
        // parallel vs serial census byte-identical
        for (const Fixture& f : fixtures()) {
            auto serial = BallCensus::build(fixture_spec(f.id), 9);
            CensusOptions opt;
            opt.parallel = true;
            auto parallel = BallCensus::build(fixture_spec(f.id), 9, opt);
            require(complexity_csv(*serial) == complexity_csv(*parallel),
                    std::string(f.id) + ": parallel census differs");
            for (int n : {3, 7})
                require(balls_text(*serial, n, true) == balls_text(*parallel, n, true),
                        std::string(f.id) + ": parallel class listing differs");
        }
    });

    if (g_failures)
        std::cout << g_failures << " criterion(s) failed\n";
    else
        std::cout << "all criteria passed\n";
    return g_failures;
}
