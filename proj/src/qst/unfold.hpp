#pragma once

#include <map>
#include <vector>

#include "qst/canon.hpp"
#include "qst/expand.hpp"

namespace qst {

// Explicit rooted tree extracted from the universal cover around a lift of
// a quotient vertex. Node 0 is the root; non-root internal nodes have
// exactly degree-1 children, nodes at depth == radius have none.
struct BallNode {
    int vert;         // expanded-graph vertex this node projects to
    int color;
    int parent;       // -1 for root
    int depth;
    std::vector<int> kids;
};

struct ColoredBall {
    int radius = 0;
    int center = -1;  // expanded-graph vertex
    std::vector<BallNode> nodes;  // BFS order
};

// Throws LimitError when the materialization cannot determine the ball.
ColoredBall unfold_ball(const ExpandedGraph& g, int base, int radius);

// Sub-ball of radius m about the same center.
ColoredBall restrict_ball(const ColoredBall& ball, int m);

int canonical_code(const ColoredBall& ball, Canon& canon,
                   const std::vector<std::string>& alphabet);

// Codes (with multiplicity) of the radius-n balls centered at every node of
// depth <= ball.radius - n, taken inside the ball.
std::map<int, int> interior_classes(const ColoredBall& ball, int n, Canon& canon,
                                    const std::vector<std::string>& alphabet);

// Memoized ball codes over one expanded graph. The subtree hanging off a
// directed step depends only on (vertex, arrival edge, remaining depth), so
// codes never require materializing the tree.
class BallCoder {
  public:
    BallCoder(const ExpandedGraph& g, Canon& canon);

    int max_radius(int v) const { return max_radius_[v]; }
    int code_at(int v, int radius);  // throws LimitError if not determined

    const ExpandedGraph& graph() const { return g_; }

  private:
    // state = arrival along edge eid into vertex v; encoded per (eid, side)
    int state_code(int vert, int in_edge, int depth);

    const ExpandedGraph& g_;
    Canon& canon_;
    std::vector<int> color_ids_;
    std::vector<int> max_radius_;
    std::map<std::pair<std::pair<int, int>, int>, int> memo_;  // ((vert,in_edge),depth) -> code
};

}  // namespace qst
