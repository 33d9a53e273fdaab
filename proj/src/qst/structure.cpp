#include "qst/structure.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace qst {

std::string shape_name(Shape s) {
    switch (s) {
        case Shape::FinitePartPlusRay: return "finite-part-plus-ray";
        case Shape::Ray: return "ray";
        case Shape::Biinfinite: return "biinfinite";
        default: return "other";
    }
}

std::string bounded_name(BoundedVerdict b) {
    switch (b) {
        case BoundedVerdict::Bounded: return "bounded";
        case BoundedVerdict::UnboundedHeuristic: return "unbounded-heuristic";
        default: return "undetermined";
    }
}

std::string ZGraph::topo_string() const {
    switch (topo) {
        case Topo::SingleVertex: return "single-vertex";
        case Topo::Segment: return "segment(" + std::to_string(verts.size()) + ")";
        default: return "cycle(" + std::to_string(verts.size()) + ")";
    }
}

const TypeSet* StructureBasics::type_set_of(int vertex) const {
    for (const auto& t : tsets)
        if (t.vertex == vertex) return &t;
    return nullptr;
}

namespace {

// distinct neighbor vertices over plain edges (loops ignored)
std::vector<int> neighbor_verts(const ExpandedGraph& g, int v) {
    std::set<int> out;
    for (int eid : g.incident[v]) out.insert(g.other(eid, v));
    out.erase(v);
    return {out.begin(), out.end()};
}

}  // namespace

StructureBasics structure_basics(const BallCensus& census) {
    StructureBasics sb;
    sb.profile = complexity_profile(census);
    sb.tsets = type_sets(census);
    sb.in_G.assign(census.g.n_verts(), 0);
    if (!sb.profile.N0) {
        sb.degenerate = true;
        sb.shape = Shape::Other;
        sb.bounded = sb.profile.verdict == Verdict::PeriodicLike ? BoundedVerdict::Bounded
                                                                 : BoundedVerdict::Undetermined;
        return sb;
    }
    const int N0 = *sb.profile.N0;

    int min_tau = 1 << 28;
    const TypeSet* min_ts = nullptr;
    for (const auto& t : sb.tsets)
        if (t.tau < min_tau) {
            min_tau = t.tau;
            min_ts = &t;
        }
    if (!min_ts) throw LimitError("no vertex has a complete type set in the window");
    if (min_ts->censored) throw LimitError("minimal maximal type is right-censored; enlarge N");
    sb.N1 = std::max(N0, min_tau);
    if (sb.N1 >= census.N - 1)
        throw LimitError("window too small to separate the finite part (N1 near the boundary)");

    for (const auto& t : sb.tsets)
        if (!t.censored && t.tau <= sb.N1) {
            sb.G.push_back(t.vertex);
            sb.in_G[t.vertex] = 1;
        }

    std::vector<int> at_n1;
    for (const auto& t : sb.tsets)
        if (!t.censored && t.tau == sb.N1) at_n1.push_back(t.vertex);
    if (at_n1.empty())
        throw Inconsistency("no vertex attains the maximal type N1=" + std::to_string(sb.N1));
    for (size_t i = 1; i < at_n1.size(); ++i)
        for (int n = 0; n <= census.N - 1; ++n)
            if (census.class_of[n][at_n1[0]] != census.class_of[n][at_n1[i]])
                throw Inconsistency("two inequivalent vertices share the maximal type " +
                                    std::to_string(sb.N1));
    sb.x_N1 = at_n1.front();

    auto dist = census.g.distances_from(sb.x_N1);
    for (int v : sb.G) sb.r_xG = std::max(sb.r_xG, dist[v]);

    // shape: is everything outside G a simple one-ended path per tail?
    const auto& g = census.g;
    bool non_g_linear = true;
    int boundary = 0;
    bool whole_linear = true;
    for (int v = 0; v < g.n_verts(); ++v) {
        auto nb = neighbor_verts(g, v);
        if (nb.size() > 2) whole_linear = false;
        if (sb.in_G[v]) continue;
        bool touches_g = false;
        for (int w : nb) touches_g |= sb.in_G[w] != 0;
        if (touches_g) ++boundary;
        if (nb.size() > 2) non_g_linear = false;
    }
    const size_t tails = census.spec.tails.size();
    if (tails == 0) {
        sb.shape = Shape::Other;
    } else if (!non_g_linear || boundary != static_cast<int>(tails)) {
        sb.shape = Shape::Other;
    } else if (tails == 2) {
        sb.shape = whole_linear ? Shape::Biinfinite : Shape::Other;
    } else {
        sb.shape = (whole_linear && sb.G.size() <= 1) ? Shape::Ray : Shape::FinitePartPlusRay;
    }

    bool all_periodic = !census.spec.tails.empty() &&
                        std::all_of(census.spec.tails.begin(), census.spec.tails.end(),
                                    [](const TailSpec& t) { return t.kind == TailKind::Periodic; });
    sb.bounded = all_periodic ? BoundedVerdict::Bounded : BoundedVerdict::Undetermined;
    return sb;
}

namespace {

struct RayItem {
    int vert = -1;
    int color = 0;
    int loop = 0;
    int f = 1;  // index toward the next ray vertex
    int b = 1;  // index toward the previous vertex
    int phase = 0;
};

struct RayInfo {
    std::vector<RayItem> items;  // outward from the G boundary
    int p = 1;                   // template period
    int q = 1;                   // minimal translation period of the pattern
    // tuple table indexed by phase mod p
    std::vector<std::array<int, 4>> tuple;  // color, loop, f, b
};

RayInfo ray_info(const BallCensus& census, const StructureBasics& basics) {
    const auto& spec = census.spec;
    if (spec.tails.size() != 1 || spec.tails[0].kind != TailKind::Periodic)
        throw Inconsistency("tail-side quotient needs a single periodic tail");
    const auto& g = census.g;
    const TailSpec& tail = spec.tails[0];
    RayInfo ri;
    ri.p = tail.period();

    // G tail members must form a position prefix
    int k0 = 0;
    for (int v = 0; v < g.n_verts(); ++v)
        if (g.verts[v].tail == 0 && basics.in_G[v]) k0 = std::max(k0, g.verts[v].pos + 1);
    for (int j = 0; j < k0; ++j)
        if (!basics.in_G[g.vertex_of(0, j)])
            throw Inconsistency("finite part does not cover a tail prefix");

    // walk the ray from the unique boundary vertex
    int start = -1;
    for (int v = 0; v < g.n_verts(); ++v) {
        if (basics.in_G[v]) continue;
        for (int w : neighbor_verts(g, v))
            if (basics.in_G[w]) {
                if (start >= 0 && start != v)
                    throw Inconsistency("tail side touches the finite part more than once");
                start = v;
            }
    }
    if (start < 0) throw Inconsistency("tail side not attached to the finite part");

    int prev = -1, cur = start;
    while (cur >= 0) {
        int next = -1;
        for (int w : neighbor_verts(g, cur)) {
            if (w == prev || basics.in_G[w]) continue;
            if (next >= 0) throw Inconsistency("tail side branches; not a ray");
            next = w;
        }
        RayItem it;
        it.vert = cur;
        it.color = g.verts[cur].color;
        it.loop = g.verts[cur].loop;
        if (g.verts[cur].tail == 0) {
            int j = g.verts[cur].pos;
            it.f = tail.templates[j % ri.p].fwd;
            it.b = j == 0 ? tail.attach_bwd : tail.templates[(j - 1) % ri.p].bwd;
        } else {
            // finite ray vertex: indices from its two path edges
            for (int eid : g.incident[cur]) {
                int w = g.other(eid, cur);
                if (w == next) it.f = g.out_index(eid, cur);
                if (w == prev || (prev < 0 && basics.in_G[w])) it.b = g.out_index(eid, cur);
            }
        }
        ri.items.push_back(it);
        prev = cur;
        cur = next;
    }

    // where tail position 0 sits (conceptually) in the ray offset scale
    bool found = false;
    int t0 = 0;
    for (size_t t = 0; t < ri.items.size() && !found; ++t)
        if (g.verts[ri.items[t].vert].tail == 0 && g.verts[ri.items[t].vert].pos == k0) {
            t0 = static_cast<int>(t) - k0;
            found = true;
        }
    if (!found) throw Inconsistency("ray has no tail part");

    ri.tuple.resize(ri.p);
    for (int a = 0; a < ri.p; ++a) {
        const TailTemplate& tt = tail.templates[a];
        int cid = -1;
        for (size_t ci = 0; ci < g.alphabet.size(); ++ci)
            if (g.alphabet[ci] == tt.color) cid = static_cast<int>(ci);
        ri.tuple[a] = {cid, tt.loop, tt.fwd, tail.templates[(a + ri.p - 1) % ri.p].bwd};
    }

    for (size_t t = 0; t < ri.items.size(); ++t) {
        int phase = ((static_cast<int>(t) - t0) % ri.p + ri.p) % ri.p;
        ri.items[t].phase = phase;
        const auto& tp = ri.tuple[phase];
        if (ri.items[t].color != tp[0] || ri.items[t].loop != tp[1] || ri.items[t].f != tp[2] ||
            ri.items[t].b != tp[3])
            throw Inconsistency(
                "ray is not compatible with the periodic tail pattern; tail-side quotient "
                "undefined");
    }

    // minimal translation period
    for (int q = 1; q <= ri.p; ++q) {
        if (ri.p % q != 0) continue;
        bool ok = true;
        for (int a = 0; a < ri.p && ok; ++a) ok = ri.tuple[a] == ri.tuple[(a + q) % ri.p];
        if (ok) {
            ri.q = q;
            break;
        }
    }
    return ri;
}

}  // namespace

ZGraph derive_Z(const BallCensus& census, const StructureBasics& basics) {
    if (basics.degenerate) throw Inconsistency("tail-side quotient needs a quasi-Sturmian window");
    if (basics.bounded != BoundedVerdict::Bounded)
        throw Inconsistency("tail-side quotient is defined for periodic (bounded) tails");
    RayInfo ri = ray_info(census, basics);
    const int q = ri.q;
    const auto& g = census.g;

    // unique extension of tail-side ball classes one radius up
    {
        std::map<int, int> ext;  // N1-code -> (N1+1)-code
        const int n1 = basics.N1;
        for (int v = 0; v < g.n_verts(); ++v) {
            if (basics.in_G[v]) continue;
            if (census.class_of[n1][v] < 0 || n1 + 1 > census.N ||
                census.class_of[n1 + 1][v] < 0)
                continue;
            int lo = census.class_of[n1][v], hi = census.class_of[n1 + 1][v];
            auto it = ext.find(lo);
            if (it == ext.end())
                ext[lo] = hi;
            else if (it->second != hi)
                throw Inconsistency(
                    "a tail-side ball class extends two ways; tail-side indices undefined");
        }
    }

    auto tup = [&](int phase) { return ri.tuple[((phase % ri.p) + ri.p) % ri.p]; };

    // reflection axes of the bi-infinite pattern (indices swap orientation)
    std::vector<int> axes;
    for (int alpha = 0; alpha < q; ++alpha) {
        bool ok = true;
        for (int j = 0; j < q && ok; ++j) {
            int jr = ((alpha - j) % q + q) % q;
            auto a = tup(j), b = tup(jr);
            ok = a[0] == b[0] && a[1] == b[1] && a[2] == b[3] && b[2] == a[3];
        }
        if (ok) axes.push_back(alpha);
    }
    if (axes.size() > 1)
        throw Inconsistency("conflicting reflection axes; translation period not minimal");

    std::vector<int> orbit_of(q);
    std::vector<int> reps;
    if (axes.empty()) {
        for (int j = 0; j < q; ++j) orbit_of[j] = j;
        for (int j = 0; j < q; ++j) reps.push_back(j);
    } else {
        int alpha = axes[0];
        std::vector<int> id(q, -1);
        for (int j = 0; j < q; ++j) {
            int jr = ((alpha - j) % q + q) % q;
            int rep = std::min(j, jr);
            if (id[rep] < 0) {
                id[rep] = static_cast<int>(reps.size());
                reps.push_back(rep);
            }
            orbit_of[j] = id[rep];
        }
    }
    const int nz = static_cast<int>(reps.size());

    ZGraph z;
    z.degree = census.g.degree;
    std::vector<int> zloop(nz, 0);
    std::vector<std::map<int, int>> out_idx(nz);  // orbit -> index toward orbit
    for (int o = 0; o < nz; ++o) {
        std::optional<int> loop_val;
        std::optional<std::map<int, int>> row;
        for (int j = 0; j < q; ++j) {
            if (orbit_of[j] != o) continue;
            auto t = tup(j);
            int up = orbit_of[(j + 1) % q], down = orbit_of[((j - 1) % q + q) % q];
            int lv = t[1];
            std::map<int, int> r;
            if (up == o)
                lv += t[2];
            else
                r[up] += t[2];
            if (down == o)
                lv += t[3];
            else
                r[down] += t[3];
            if (loop_val && (*loop_val != lv || *row != r))
                throw Inconsistency("tail-side fold is not index-consistent");
            loop_val = lv;
            row = r;
        }
        zloop[o] = *loop_val;
        out_idx[o] = *row;
        long long dsum = zloop[o];
        for (auto& [t, k] : out_idx[o]) dsum += k;
        if (dsum != census.g.degree)
            throw Inconsistency("tail-side quotient vertex degree != tree degree");
    }

    // order vertices: single / path from an endpoint / cycle from phase 0
    std::vector<int> order;
    auto edge_neighbors = [&](int o) {
        std::vector<int> out;
        for (auto& [t, k] : out_idx[o]) out.push_back(t);
        return out;
    };
    if (nz == 1) {
        z.topo = ZGraph::Topo::SingleVertex;
        order = {0};
    } else {
        std::vector<int> deg(nz);
        int ends = 0;
        for (int o = 0; o < nz; ++o) {
            deg[o] = static_cast<int>(edge_neighbors(o).size());
            if (deg[o] == 1) ++ends;
        }
        bool path = ends == 2 && std::all_of(deg.begin(), deg.end(), [](int d) { return d <= 2; });
        bool cycle = ends == 0 && std::all_of(deg.begin(), deg.end(), [](int d) { return d == 2; });
        if (!path && !cycle) throw Inconsistency("tail-side quotient is neither a path nor a cycle");
        z.topo = path ? ZGraph::Topo::Segment : ZGraph::Topo::Cycle;
        if (path) {
            auto walk = [&](int from) {
                std::vector<int> w{from};
                int prev = -1, cur = from;
                while (static_cast<int>(w.size()) < nz) {
                    for (int t : edge_neighbors(cur))
                        if (t != prev) {
                            w.push_back(t);
                            prev = cur;
                            cur = t;
                            break;
                        }
                }
                return w;
            };
            std::vector<int> e;
            for (int o = 0; o < nz; ++o)
                if (deg[o] == 1) e.push_back(o);
            auto wa = walk(e[0]), wb = walk(e[1]);
            // deterministic orientation: lexicographically smaller signature
            auto sig = [&](const std::vector<int>& w) {
                std::vector<int> s;
                for (int o : w) {
                    s.push_back(tup(reps[o])[0]);
                    s.push_back(zloop[o]);
                    for (auto& [t, k] : out_idx[o]) s.push_back(k);
                }
                return s;
            };
            order = sig(wa) <= sig(wb) ? wa : wb;
        } else {
            int cur = orbit_of[0], prev = -1;
            order.push_back(cur);
            while (static_cast<int>(order.size()) < nz) {
                for (int t : edge_neighbors(cur))
                    if (t != prev) {
                        order.push_back(t);
                        prev = cur;
                        cur = t;
                        break;
                    }
            }
        }
    }

    // deep representative per orbit for the ball-class annotation
    const int n1 = basics.N1;
    std::vector<int> pos_index(nz, -1);
    for (int idx = 0; idx < nz; ++idx) {
        int o = order[idx];
        for (int j = census.g.horizon; j >= 0; --j) {
            if (orbit_of[j % q] != o) continue;
            int v = g.vertex_of(0, j);
            if (v >= 0 && census.class_of[n1][v] >= 0 && j >= ri.p) {
                pos_index[idx] = j;
                break;
            }
        }
    }

    std::vector<int> new_id(nz);
    for (int idx = 0; idx < nz; ++idx) new_id[order[idx]] = idx;
    z.q = q;
    z.orbit_of_phase.resize(q);
    for (int j = 0; j < q; ++j) z.orbit_of_phase[j] = new_id[orbit_of[j]];
    for (int idx = 0; idx < nz; ++idx) {
        int o = order[idx];
        ZGraph::V v;
        v.phase = reps[o];
        v.color = census.g.alphabet[tup(reps[o])[0]];
        v.zloop = zloop[o];
        if (pos_index[idx] >= 0)
            v.n1_code =
                census.canon.str(census.class_of[n1][g.vertex_of(0, pos_index[idx])]);
        z.verts.push_back(std::move(v));
    }
    std::set<std::pair<int, int>> done;
    for (int idx = 0; idx < nz; ++idx) {
        int o = order[idx];
        for (auto& [t, k] : out_idx[o]) {
            int jdx = new_id[t];
            auto key = std::minmax(idx, jdx);
            if (done.count({key.first, key.second})) continue;
            done.insert({key.first, key.second});
            z.edges.push_back({idx, jdx, k, out_idx[t].at(o)});
        }
    }
    std::sort(z.edges.begin(), z.edges.end());
    return z;
}

QuotientSpec extension_spec(const ZGraph& z) {
    QuotientSpec s;
    s.degree = z.degree;
    std::vector<std::string> used;
    for (const auto& v : z.verts)
        if (std::find(used.begin(), used.end(), v.color) == used.end()) used.push_back(v.color);
    s.alphabet = used;
    for (size_t i = 0; i < z.verts.size(); ++i)
        s.vertices.push_back({"z" + std::to_string(i), z.verts[i].color});
    for (const auto& e : z.edges)
        s.edges.push_back({"z" + std::to_string(e[0]), "z" + std::to_string(e[1]), e[2], e[3]});
    for (size_t i = 0; i < z.verts.size(); ++i)
        if (z.verts[i].zloop > 0)
            s.loops.push_back({"z" + std::to_string(i), z.verts[i].zloop});
    validate_spec(s);
    return s;
}

ExtensionCheck build_periodic_extension(const BallCensus& census, const StructureBasics& basics,
                                        const ZGraph& z) {
    ExtensionCheck ec;
    ec.extension = extension_spec(z);
    const int vz = static_cast<int>(z.verts.size());
    const int top = 2 * vz + 2;
    auto ext_census = BallCensus::build(ec.extension, top);
    ec.b_ext = ext_census->b;
    ec.bounded_ok = ec.b_ext[2 * vz] == ec.b_ext[top] && ec.b_ext[2 * vz] <= vz;

    // deep ray balls coincide with extension balls
    RayInfo ri = ray_info(census, basics);
    ExpandedGraph eg = expand_quotient(ec.extension, 0);
    Canon shared;
    BallCoder orig(census.g, shared), extc(eg, shared);
    ec.deep_agreement = true;
    for (int idx = 0; idx < vz && ec.deep_agreement; ++idx) {
        int want = -1;
        for (int j = census.g.horizon; j >= ri.p + 1; --j)
            if (z.orbit_of_phase[j % ri.q] == idx) {
                want = j;
                break;
            }
        if (want < 0) {
            ec.deep_agreement = false;
            break;
        }
        int v = census.g.vertex_of(0, want);
        int rmax = std::min({orig.max_radius(v), want - 1, 6});
        for (int r = 0; r <= rmax; ++r)
            if (orig.code_at(v, r) != extc.code_at(idx, r)) {
                ec.deep_agreement = false;
                break;
            }
    }

    // outward assignment of tail-side classes across the finite part
    ec.assignment_ok = [&] {
        const auto& g = census.g;
        int k0 = 0;
        for (int v = 0; v < g.n_verts(); ++v)
            if (g.verts[v].tail == 0 && basics.in_G[v]) k0 = std::max(k0, g.verts[v].pos + 1);
        int ju = k0 + 1;
        int u = g.vertex_of(0, ju);
        if (u < 0) return false;
        auto dist = g.distances_from(u);
        int reach = 0;
        for (int w : basics.G) reach = std::max(reach, dist[w]);
        int R = reach + 2;
        Canon scratch;
        BallCoder coder(g, scratch);
        if (R > coder.max_radius(u)) R = coder.max_radius(u);
        ColoredBall ball = unfold_ball(g, u, R);
        const std::vector<int>& orb = z.orbit_of_phase;

        // neighbor class rows in Z
        std::vector<std::map<int, int>> row(vz);
        for (int idx = 0; idx < vz; ++idx)
            if (z.verts[idx].zloop > 0) row[idx][idx] += z.verts[idx].zloop;
        for (const auto& e : z.edges) {
            row[e[0]][e[1]] += e[2];
            row[e[1]][e[0]] += e[3];
        }

        // phase of every ray vertex (for Y membership)
        std::map<int, int> ray_phase;
        for (const auto& it : ri.items) ray_phase[it.vert] = it.phase;

        std::vector<int> cls(ball.nodes.size(), -1);
        std::vector<char> inY(ball.nodes.size(), 0);
        inY[0] = 1;
        cls[0] = orb[ju % ri.q];
        for (size_t i = 0; i < ball.nodes.size(); ++i) {
            for (int k : ball.nodes[i].kids) {
                int pv = ball.nodes[k].vert;
                if (inY[i] && !basics.in_G[pv] && ray_phase.count(pv)) {
                    inY[k] = 1;
                    cls[k] = orb[ray_phase[pv] % ri.q];
                }
            }
        }
        // assign the rest outward, honoring the rows
        for (size_t i = 0; i < ball.nodes.size(); ++i) {
            if (cls[i] < 0) return false;
            if (ball.nodes[i].depth == ball.radius) continue;  // leaves carry no row obligation
            std::map<int, int> need = row[cls[i]];
            auto take = [&](int c) {
                auto it = need.find(c);
                if (it == need.end() || it->second == 0) return false;
                if (--it->second == 0) need.erase(it);
                return true;
            };
            if (ball.nodes[i].parent >= 0 && !take(cls[ball.nodes[i].parent])) return false;
            std::vector<int> unassigned;
            for (int k : ball.nodes[i].kids) {
                if (cls[k] >= 0) {
                    if (!take(cls[k])) return false;
                } else {
                    unassigned.push_back(k);
                }
            }
            std::vector<int> rest;
            for (auto& [c, m] : need)
                for (int t = 0; t < m; ++t) rest.push_back(c);
            if (rest.size() != unassigned.size()) return false;
            for (size_t t = 0; t < rest.size(); ++t) cls[unassigned[t]] = rest[t];
        }
        return true;
    }();

    return ec;
}

MarkedRecoloring marked_recoloring(const BallCensus& census, const StructureBasics& basics) {
    const auto& g = census.g;
    int k = 0;
    for (int v : basics.G)
        if (g.verts[v].tail >= 0) k = std::max(k, g.verts[v].pos + 1);
    QuotientSpec shifted = shift_tails(census.spec, k);

    MarkedRecoloring mr;
    mr.orig_alphabet_size = static_cast<int>(census.spec.alphabet.size());
    mr.g_size = static_cast<int>(basics.G.size());

    auto spec_id_of = [&](int v) -> std::string {
        if (g.verts[v].tail < 0) return g.verts[v].label;
        return "t" + std::to_string(g.verts[v].tail) + "_" + std::to_string(g.verts[v].pos);
    };
    std::map<std::string, std::string> fresh;
    int counter = 0;
    for (int v : basics.G) {
        std::string name;
        do {
            name = "mk" + std::to_string(counter++);
        } while (shifted.has_color(name));
        fresh[spec_id_of(v)] = name;
    }
    QuotientSpec out = shifted;
    for (auto& vx : out.vertices) {
        auto it = fresh.find(vx.id);
        if (it != fresh.end()) vx.color = it->second;
    }
    std::vector<std::string> used;
    auto use = [&](const std::string& c) {
        if (std::find(used.begin(), used.end(), c) == used.end()) used.push_back(c);
    };
    for (const auto& c : shifted.alphabet) {
        bool still = false;
        for (const auto& vx : out.vertices) still |= vx.color == c;
        for (const auto& t : out.tails)
            for (const auto& tt : t.templates) still |= tt.color == c;
        if (still) use(c);
    }
    for (const auto& vx : out.vertices) use(vx.color);
    out.alphabet = used;
    validate_spec(out);
    mr.spec = out;
    return mr;
}

BoundedRoundTrip bounded_round_trip(const BallCensus& census, const StructureBasics& basics,
                                    const ZGraph& z, int marked_max_n) {
    BoundedRoundTrip rt;
    rt.ext = build_periodic_extension(census, basics, z);
    rt.forward_ok = !basics.degenerate &&
                    (basics.shape == Shape::FinitePartPlusRay || basics.shape == Shape::Ray) &&
                    rt.ext.bounded_ok && rt.ext.deep_agreement && rt.ext.assignment_ok;

    MarkedRecoloring mr = marked_recoloring(census, basics);
    auto mc = BallCensus::build(mr.spec, marked_max_n);
    rt.b_marked = mc->b;
    auto prof = complexity_profile(*mc);
    rt.marked_quasi_sturmian = prof.verdict == Verdict::QuasiSturmianUpToN;
    for (int n = 0; n <= marked_max_n; ++n)
        rt.formula.push_back(n + mr.orig_alphabet_size + mr.g_size);
    rt.formula_match = rt.b_marked == rt.formula;
    return rt;
}

void check_type_set_triples(const BallCensus& census, const StructureBasics& basics) {
    const auto& g = census.g;
    for (const auto& ts : basics.tsets) {
        std::set<std::vector<int>> distinct{ts.members};
        bool complete = true;
        for (int w : neighbor_verts(g, ts.vertex)) {
            const TypeSet* nts = basics.type_set_of(w);
            if (!nts) {
                complete = false;
                break;
            }
            distinct.insert(nts->members);
        }
        if (complete && distinct.size() > 3)
            throw Inconsistency("a 1-ball realizes " + std::to_string(distinct.size()) +
                                " distinct type sets");
    }
}

}  // namespace qst
