#include "qst/unfold.hpp"

#include <algorithm>
#include <functional>

namespace qst {

namespace {
constexpr int kLoopArrival = -2;
constexpr int kNoArrival = -1;
}  // namespace

ColoredBall unfold_ball(const ExpandedGraph& g, int base, int radius) {
    ColoredBall ball;
    ball.radius = radius;
    ball.center = base;
    ball.nodes.push_back({base, g.verts[base].color, -1, 0, {}});
    std::vector<int> arrival{kNoArrival};

    for (size_t i = 0; i < ball.nodes.size(); ++i) {
        int depth = ball.nodes[i].depth;
        if (depth == radius) continue;
        int v = ball.nodes[i].vert;
        int in = arrival[i];
        long long emitted = 0;
        auto emit = [&](int w, int via, int mult) {
            for (int c = 0; c < mult; ++c) {
                int id = static_cast<int>(ball.nodes.size());
                ball.nodes.push_back({w, g.verts[w].color, static_cast<int>(i), depth + 1, {}});
                arrival.push_back(via);
                ball.nodes[i].kids.push_back(id);
                ++emitted;
            }
        };
        for (int eid : g.incident[v]) {
            int mult = g.out_index(eid, v) - (in == eid ? 1 : 0);
            emit(g.other(eid, v), eid, mult);
        }
        if (g.verts[v].loop > 0) emit(v, kLoopArrival, g.verts[v].loop - (in == kLoopArrival ? 1 : 0));
        long long want = in == kNoArrival ? g.degree : g.degree - 1;
        if (emitted != want)
            throw LimitError("horizon insufficient: ball of radius " + std::to_string(radius) +
                             " around '" + g.verts[base].label + "' is not fully materialized");
    }
    return ball;
}

ColoredBall restrict_ball(const ColoredBall& ball, int m) {
    if (m > ball.radius) throw Error("restrict_ball: radius " + std::to_string(m) + " exceeds " +
                                     std::to_string(ball.radius));
    ColoredBall out;
    out.radius = m;
    out.center = ball.center;
    size_t cut = ball.nodes.size();
    for (size_t i = 0; i < ball.nodes.size(); ++i)
        if (ball.nodes[i].depth > m) {
            cut = i;
            break;
        }
    out.nodes.assign(ball.nodes.begin(), ball.nodes.begin() + cut);
    for (auto& n : out.nodes) {
        std::vector<int> kept;
        for (int k : n.kids)
            if (k < static_cast<int>(cut)) kept.push_back(k);
        n.kids = std::move(kept);
    }
    return out;
}

int canonical_code(const ColoredBall& ball, Canon& canon,
                   const std::vector<std::string>& alphabet) {
    std::vector<int> code(ball.nodes.size(), -1);
    for (int i = static_cast<int>(ball.nodes.size()) - 1; i >= 0; --i) {
        std::vector<int> kids;
        kids.reserve(ball.nodes[i].kids.size());
        for (int k : ball.nodes[i].kids) kids.push_back(code[k]);
        code[i] = canon.node(canon.color_id(alphabet[ball.nodes[i].color]), std::move(kids));
    }
    return code[0];
}

std::map<int, int> interior_classes(const ColoredBall& ball, int n, Canon& canon,
                                    const std::vector<std::string>& alphabet) {
    if (n > ball.radius) throw Error("interior_classes: n exceeds ball radius");
    // rooted code of the ball re-rooted at `at`, entered from `from`, depth limited
    std::function<int(int, int, int)> code_from = [&](int at, int from, int depth) -> int {
        const BallNode& nd = ball.nodes[at];
        int cid = canon.color_id(alphabet[nd.color]);
        if (depth == 0) return canon.leaf(cid);
        std::vector<int> kids;
        if (nd.parent >= 0 && nd.parent != from)
            kids.push_back(code_from(nd.parent, at, depth - 1));
        for (int k : nd.kids)
            if (k != from) kids.push_back(code_from(k, at, depth - 1));
        return canon.node(cid, std::move(kids));
    };
    std::map<int, int> out;
    for (size_t i = 0; i < ball.nodes.size(); ++i) {
        if (ball.nodes[i].depth > ball.radius - n) continue;
        ++out[code_from(static_cast<int>(i), -1, n)];
    }
    return out;
}

BallCoder::BallCoder(const ExpandedGraph& g, Canon& canon) : g_(g), canon_(canon) {
    color_ids_.reserve(g.alphabet.size());
    for (const auto& c : g.alphabet) color_ids_.push_back(canon.color_id(c));
    max_radius_.assign(g.n_verts(), 1 << 28);
    for (int last : g.tail_last) {
        auto dist = g.distances_from(last);
        for (int v = 0; v < g.n_verts(); ++v)
            if (dist[v] >= 0) max_radius_[v] = std::min(max_radius_[v], dist[v]);
    }
}

int BallCoder::state_code(int vert, int in_edge, int depth) {
    if (depth == 0) return canon_.leaf(color_ids_[g_.verts[vert].color]);
    auto key = std::make_pair(std::make_pair(vert, in_edge), depth);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;

    std::vector<int> kids;
    long long emitted = 0;
    for (int eid : g_.incident[vert]) {
        int mult = g_.out_index(eid, vert) - (in_edge == eid ? 1 : 0);
        if (mult <= 0) continue;
        int sub = state_code(g_.other(eid, vert), eid, depth - 1);
        for (int c = 0; c < mult; ++c) kids.push_back(sub);
        emitted += mult;
    }
    int lmult = g_.verts[vert].loop - (in_edge == kLoopArrival ? 1 : 0);
    if (lmult > 0) {
        int sub = state_code(vert, kLoopArrival, depth - 1);
        for (int c = 0; c < lmult; ++c) kids.push_back(sub);
        emitted += lmult;
    }
    long long want = in_edge == kNoArrival ? g_.degree : g_.degree - 1;
    if (emitted != want)
        throw LimitError("horizon insufficient while coding ball near '" + g_.verts[vert].label +
                         "'");
    int code = canon_.node(color_ids_[g_.verts[vert].color], std::move(kids));
    memo_[key] = code;
    return code;
}

int BallCoder::code_at(int v, int radius) {
    if (radius > max_radius_[v])
        throw LimitError("horizon insufficient: radius " + std::to_string(radius) + " around '" +
                         g_.verts[v].label + "' exceeds materialized limit " +
                         std::to_string(max_radius_[v]));
    return state_code(v, kNoArrival, radius);
}

}  // namespace qst
