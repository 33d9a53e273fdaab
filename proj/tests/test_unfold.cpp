#include "doctest.h"

#include <random>

#include "qst/census.hpp"
#include "qst/fixtures.hpp"

using namespace qst;

namespace {

long long full_ball_size(int d, int n) {
    if (n == 0) return 1;
    if (d == 2) return 2LL * n + 1;
    long long total = 1, layer = d;
    for (int i = 1; i <= n; ++i) {
        total += layer;
        layer *= d - 1;
    }
    return total;
}

}  // namespace

TEST_CASE("radius zero is a single node of the vertex color") {
    ExpandedGraph g = expand_quotient(fixture_spec("ex-basic(3)"), 6);
    ColoredBall b = unfold_ball(g, 0, 0);
    CHECK(b.nodes.size() == 1);
    CHECK(g.alphabet[b.nodes[0].color] == "a1");
}

TEST_CASE("an index-3 edge lifts to three children") {
    ExpandedGraph g = expand_quotient(fixture_spec("ex-basic(3)"), 6);
    ColoredBall b = unfold_ball(g, 0, 1);  // first path vertex
    REQUIRE(b.nodes.size() == 4);
    for (int k : b.nodes[0].kids) CHECK(g.alphabet[b.nodes[k].color] == "a2");
}

TEST_CASE("constant coloring has one ball class per radius") {
    ExpandedGraph g = expand_quotient(fixture_spec("mono(3)"), 0);
    Canon canon;
    ColoredBall b = unfold_ball(g, 0, 2);
    CHECK(static_cast<long long>(b.nodes.size()) == full_ball_size(3, 2));
    for (const auto& node : b.nodes)
        CHECK(g.alphabet[node.color] == "a");
}

TEST_CASE("node counts match the regular-tree formula") {
    for (const auto& id : {"ex-basic(3)", "ex-n0eq1"}) {
        ExpandedGraph g = expand_quotient(fixture_spec(id), 20);
        for (int n : {1, 3, 5})
            CHECK(static_cast<long long>(unfold_ball(g, 0, n).nodes.size()) ==
                  full_ball_size(3, n));
    }
    ExpandedGraph g2 = expand_quotient(fixture_spec("word(3)"), 0);
    for (int n : {1, 2, 4})
        CHECK(static_cast<long long>(unfold_ball(g2, 0, n).nodes.size()) == full_ball_size(2, n));
}

TEST_CASE("unfolding past the materialized zone fails loudly") {
    ExpandedGraph g = expand_quotient(fixture_spec("ex-basic(3)"), 3);
    int last = g.tail_last[0];
    CHECK_THROWS_AS(unfold_ball(g, last, 1), LimitError);
}

TEST_CASE("sibling order never changes the canonical code") {
    Canon canon;
    ExpandedGraph g = expand_quotient(fixture_spec("ex-n0eq1"), 16);
    std::mt19937 rng(7);
    for (int v : {0, 1, 3, 6}) {
        ColoredBall ball = unfold_ball(g, v, 4);
        int base = canonical_code(ball, canon, g.alphabet);
        for (int trial = 0; trial < 250; ++trial) {
            for (auto& node : ball.nodes) std::shuffle(node.kids.begin(), node.kids.end(), rng);
            CHECK(canonical_code(ball, canon, g.alphabet) == base);
        }
    }
}

TEST_CASE("radius-0 codes separate colors") {
    Canon canon;
    ExpandedGraph g = expand_quotient(fixture_spec("ex-n0eq1"), 4);
    BallCoder coder(g, canon);
    // attach vertex is x-colored, first tail vertex is b-colored
    CHECK(coder.code_at(0, 0) != coder.code_at(1, 0));
}

TEST_CASE("the first two tail occurrences differ already at radius 1") {
    Canon canon;
    ExpandedGraph g = expand_quotient(fixture_spec("ex-n0eq1"), 8);
    BallCoder coder(g, canon);
    int p0 = g.vertex_of(0, 0), p1 = g.vertex_of(0, 1);
    CHECK(coder.code_at(p0, 1) != coder.code_at(p1, 1));
}

TEST_CASE("restriction agrees with direct extraction") {
    Canon canon;
    ExpandedGraph g = expand_quotient(fixture_spec("ex-cycleG"), 16);
    BallCoder coder(g, canon);
    for (int v : {0, 2, 5, 7}) {
        ColoredBall ball = unfold_ball(g, v, 5);
        CHECK(canonical_code(restrict_ball(ball, 5), canon, g.alphabet) ==
              canonical_code(ball, canon, g.alphabet));
        for (int m = 0; m <= 5; ++m)
            CHECK(canonical_code(restrict_ball(ball, m), canon, g.alphabet) ==
                  coder.code_at(v, m));
    }
    ColoredBall ball = unfold_ball(g, 0, 2);
    ColoredBall point = restrict_ball(ball, 0);
    CHECK(point.nodes.size() == 1);
}

TEST_CASE("interior class counts") {
    Canon canon;
    SUBCASE("the whole ball is its only full-radius member") {
        ExpandedGraph g = expand_quotient(fixture_spec("ex-basic(3)"), 10);
        ColoredBall ball = unfold_ball(g, 1, 3);
        auto m = interior_classes(ball, 3, canon, g.alphabet);
        REQUIRE(m.size() == 1);
        CHECK(m.begin()->second == 1);
        CHECK(m.begin()->first == canonical_code(ball, canon, g.alphabet));
    }
    SUBCASE("constant coloring: center plus neighbors") {
        ExpandedGraph g = expand_quotient(fixture_spec("mono(3)"), 0);
        ColoredBall ball = unfold_ball(g, 0, 2);
        auto m = interior_classes(ball, 1, canon, g.alphabet);
        REQUIRE(m.size() == 1);
        CHECK(m.begin()->second == 4);
    }
}

TEST_CASE("containment counts match explicit interior enumeration") {
    auto census = BallCensus::build(fixture_spec("ex-n0eq1"), 6);
    // cross-check the fast graph-side count against the explicit ball walk
    for (int n = 1; n <= 3; ++n) {
        for (const auto& outer : census->classes[n + 1]) {
            int w = outer.witnesses.front();
            ColoredBall ball = unfold_ball(census->g, w, n + 1);
            auto inner = interior_classes(ball, n, census->canon, census->g.alphabet);
            for (const auto& rec : census->classes[n]) {
                int got = census->containment_count(n + 1, outer.code, rec.code);
                auto it = inner.find(rec.code);
                int want = it == inner.end() ? 0 : it->second;
                CHECK(got == want);
            }
        }
    }
}
