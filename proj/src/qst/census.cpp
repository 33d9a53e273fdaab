#include "qst/census.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>

namespace qst {

const ClassRecord* BallCensus::find(int n, int code) const {
    for (const auto& r : classes[n])
        if (r.code == code) return &r;
    return nullptr;
}

std::vector<std::pair<int, int>> BallCensus::special_balls(int n) const {
    std::vector<std::pair<int, int>> out;
    for (const auto& r : classes[n])
        if (r.extensions.size() >= 2)
            out.emplace_back(r.code, static_cast<int>(r.extensions.size()));
    return out;
}

int BallCensus::unique_special(int n) const {
    auto sp = special_balls(n);
    if (sp.size() != 1)
        throw Inconsistency("expected a unique special ball at radius " + std::to_string(n) +
                            ", found " + std::to_string(sp.size()));
    if (sp[0].second != 2)
        throw Inconsistency("special ball at radius " + std::to_string(n) + " has " +
                            std::to_string(sp[0].second) + " extensions, expected 2");
    return sp[0].first;
}

int BallCensus::containment_count(int n_outer, int outer, int inner) const {
    const ClassRecord* rec = find(n_outer, outer);
    if (!rec) throw Error("containment_count: unknown class");
    int n = n_outer - 1;
    std::optional<int> result;
    for (int w : rec->witnesses) {
        bool ok = true;
        int count = class_of[n][w] == inner ? 1 : 0;
        for (int eid : g.incident[w]) {
            int u = g.other(eid, w);
            if (class_of[n][u] < 0) {
                ok = false;
                break;
            }
            if (class_of[n][u] == inner) count += g.out_index(eid, w);
        }
        if (g.verts[w].loop > 0 && class_of[n][w] == inner) count += g.verts[w].loop;
        if (!ok) continue;
        if (result && *result != count)
            throw Inconsistency("containment count differs across witnesses of one class");
        result = count;
    }
    if (!result) throw LimitError("containment_count: no witness with known neighbor classes");
    return *result;
}

std::unique_ptr<BallCensus> BallCensus::build(const QuotientSpec& spec, int N, CensusOptions opt) {
    auto out = std::make_unique<BallCensus>();
    out->spec = spec;
    out->N = N;
    int H = opt.horizon >= 0 ? opt.horizon : default_horizon(spec, N);
    out->g = expand_quotient(spec, H);
    out->coder_ = std::make_unique<BallCoder>(out->g, out->canon);
    const ExpandedGraph& g = out->g;
    BallCoder& coder = *out->coder_;
    Canon& canon = out->canon;
    const int V = g.n_verts();

    out->class_of.assign(N + 1, std::vector<int>(V, -1));
    out->classes.resize(N + 1);
    out->b.assign(N + 1, 0);

    for (int n = 0; n <= N; ++n) {
        if (!opt.parallel) {
            for (int v = 0; v < V; ++v)
                if (coder.max_radius(v) >= n) out->class_of[n][v] = coder.code_at(v, n);
        } else {
            // unfold in parallel, intern serially for identical output
            std::vector<std::optional<ColoredBall>> balls(V);
            int nthreads = std::min(4u, std::max(1u, std::thread::hardware_concurrency()));
            std::vector<std::thread> pool;
            std::atomic<int> next{0};
            for (int t = 0; t < nthreads; ++t)
                pool.emplace_back([&] {
                    for (int v = next.fetch_add(1); v < V; v = next.fetch_add(1))
                        if (coder.max_radius(v) >= n) balls[v] = unfold_ball(g, v, n);
                });
            for (auto& th : pool) th.join();
            for (int v = 0; v < V; ++v)
                if (balls[v]) out->class_of[n][v] = canonical_code(*balls[v], canon, g.alphabet);
        }

        std::map<int, ClassRecord> by_code;
        for (int v = 0; v < V; ++v) {
            int c = out->class_of[n][v];
            if (c < 0) continue;
            auto& rec = by_code[c];
            rec.code = c;
            rec.witnesses.push_back(v);
        }
        for (auto& [code, rec] : by_code) {
            long long want = n == 0 ? 1
                             : g.degree == 2
                                 ? 2LL * n + 1
                                 : [&] {
                                       long long total = 1, layer = g.degree;
                                       for (int i = 1; i <= n; ++i) {
                                           total += layer;
                                           layer *= (g.degree - 1);
                                       }
                                       return total;
                                   }();
            if (canon.size_of(code) != want)
                throw Inconsistency("ball node count mismatch at radius " + std::to_string(n));
            out->classes[n].push_back(std::move(rec));
        }
        std::sort(out->classes[n].begin(), out->classes[n].end(),
                  [&](const ClassRecord& a, const ClassRecord& b) {
                      return canon.less(a.code, b.code);
                  });
        out->b[n] = static_cast<int>(out->classes[n].size());
    }

    for (int n = 0; n <= N; ++n) {
        for (auto& rec : out->classes[n]) {
            int w0 = rec.witnesses.front();
            if (n >= 1) rec.restriction = out->class_of[n - 1][w0];
            if (n < N) {
                std::vector<int> exts;
                for (int w : rec.witnesses) {
                    int e = out->class_of[n + 1][w];
                    if (e >= 0 && std::find(exts.begin(), exts.end(), e) == exts.end())
                        exts.push_back(e);
                }
                if (exts.empty())
                    throw LimitError("no witness of a radius-" + std::to_string(n) +
                                     " class extends within the horizon; enlarge it");
                std::sort(exts.begin(), exts.end(),
                          [&](int a, int b) { return canon.less(a, b); });
                rec.extensions = std::move(exts);
            }
        }
    }

    // complexity is bounded or strictly increasing; verify on the window
    for (int n = 0; n + 1 <= N; ++n) {
        if (out->b[n + 1] < out->b[n])
            throw Inconsistency("b(n) decreased at n=" + std::to_string(n + 1));
        if (out->b[n + 1] == out->b[n])
            for (int m = n + 1; m + 1 <= N; ++m)
                if (out->b[m + 1] > out->b[m])
                    throw Inconsistency("b(n) neither bounded nor strictly increasing");
    }

    bool has_subst = std::any_of(spec.tails.begin(), spec.tails.end(), [](const TailSpec& t) {
        return t.kind == TailKind::Substitution;
    });
    if ((has_subst || opt.verify_stability) && opt.horizon < 0) {
        ExpandedGraph g2 = expand_quotient(spec, 2 * H);
        Canon canon2;
        BallCoder coder2(g2, canon2);
        std::vector<int> b2(N + 1, 0);
        for (int n = 0; n <= N; ++n) {
            std::map<int, int> seen;
            for (int v = 0; v < g2.n_verts(); ++v)
                if (coder2.max_radius(v) >= n) ++seen[coder2.code_at(v, n)];
            b2[n] = static_cast<int>(seen.size());
        }
        if (b2 != out->b)
            throw LimitError(
                "horizon instability: doubling the horizon changed the complexity table");
    }

    return out;
}

ComplexityProfile complexity_profile(const BallCensus& census) {
    ComplexityProfile p;
    p.b = census.b;
    const int N = census.N;
    if (N >= 1) {
        for (int n0 = 0; n0 <= N - 1; ++n0) {
            bool ok = true;
            for (int n = n0; n + 1 <= N; ++n)
                if (p.b[n + 1] - p.b[n] != 1) {
                    ok = false;
                    break;
                }
            if (ok) {
                p.N0 = n0;
                p.c = p.b[n0] - n0;
                break;
            }
        }
    }
    if (p.N0) {
        p.verdict = Verdict::QuasiSturmianUpToN;
    } else if (N >= 1 && p.b[N] == p.b[N - 1]) {
        p.verdict = Verdict::PeriodicLike;
    } else {
        p.verdict = Verdict::Other;
    }
    return p;
}

std::vector<TypeSet> type_sets(const BallCensus& census) {
    std::vector<TypeSet> out;
    const int top = census.N - 1;  // specialness decidable for n <= N-1
    if (top < 0) return out;
    std::vector<std::map<int, bool>> special_code(top + 1);
    for (int n = 0; n <= top; ++n)
        for (const auto& [code, cnt] : census.special_balls(n)) special_code[n][code] = true;

    for (int v = 0; v < census.g.n_verts(); ++v) {
        if (census.coder().max_radius(v) < top) continue;
        TypeSet ts;
        ts.vertex = v;
        for (int n = 0; n <= top; ++n) {
            int code = census.class_of[n][v];
            if (code >= 0 && special_code[n].count(code)) ts.members.push_back(n);
        }
        ts.tau = ts.members.empty() ? -1 : ts.members.back();
        // the window value is exact only when no other vertex still shares
        // the largest computed ball: a shared class can turn special later
        const ClassRecord* rec = census.find(top, census.class_of[top][v]);
        ts.censored = (rec && rec->witnesses.size() > 1) ||
                      (!ts.members.empty() && ts.members.back() == top);
        out.push_back(std::move(ts));
    }
    return out;
}

}  // namespace qst
