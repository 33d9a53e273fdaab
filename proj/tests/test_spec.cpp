#include "doctest.h"

#include "qst/expand.hpp"
#include "qst/fixtures.hpp"
#include "qst/spec.hpp"

using namespace qst;

namespace {

const char* kMono3 =
    "qst 1\n"
    "degree 3\n"
    "alphabet a\n"
    "vertex v color=a\n"
    "loop v 3\n";

bool expansions_equal(const QuotientSpec& a, const QuotientSpec& b, int h) {
    ExpandedGraph ga = expand_quotient(a, h), gb = expand_quotient(b, h);
    if (ga.n_verts() != gb.n_verts() || ga.edges.size() != gb.edges.size()) return false;
    for (int v = 0; v < ga.n_verts(); ++v)
        if (ga.verts[v].label != gb.verts[v].label || ga.verts[v].color != gb.verts[v].color ||
            ga.verts[v].loop != gb.verts[v].loop)
            return false;
    for (size_t e = 0; e < ga.edges.size(); ++e)
        if (ga.edges[e].u != gb.edges[e].u || ga.edges[e].v != gb.edges[e].v ||
            ga.edges[e].iu != gb.edges[e].iu || ga.edges[e].iv != gb.edges[e].iv)
            return false;
    return true;
}

}  // namespace

TEST_CASE("simplest valid description parses") {
    QuotientSpec s = parse_spec(kMono3);
    CHECK(s.degree == 3);
    CHECK(s.alphabet == std::vector<std::string>{"a"});
    CHECK(s.vertices.size() == 1);
    CHECK(s.loops.size() == 1);
    CHECK(s.tails.empty());
}

TEST_CASE("embedded fixtures parse and validate") {
    for (const auto& id : {"ex-basic(3)", "ex-basic(5)", "ex-nonray", "ex-n0eq1",
                           "ex-loops-n0eq1", "ex-cycleG", "ex-n0-ne-n1", "mono(3)", "mono(4)",
                           "word(3)"})
        CHECK_NOTHROW(fixture_spec(id));
}

TEST_CASE("degree mismatch names the vertex") {
    const char* bad =
        "qst 1\ndegree 3\nalphabet a b\nvertex u color=a\nvertex w color=b\nedge u w 1 1\n"
        "loop u 2\n";
    // u sums to 3, w sums to 1
    try {
        parse_spec(bad);
        FAIL("expected a degree error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("'w'") != std::string::npos);
        CHECK(std::string(e.what()).find("degree mismatch") != std::string::npos);
    }
}

TEST_CASE("parse errors carry reasons") {
    CHECK_THROWS_AS(parse_spec("degree 3\n"), ParseError);             // missing header
    CHECK_THROWS_AS(parse_spec("qst 1\nfrobnicate 3\n"), ParseError);  // unknown key
    CHECK_THROWS_AS(parse_spec("qst 1\ndegree 3\nalphabet a a\n"), ParseError);
    const char* dup_id = "qst 1\ndegree 3\nalphabet a\nvertex v color=a\nvertex v color=a\n";
    CHECK_THROWS_AS(parse_spec(dup_id), ParseError);
    const char* unknown_ref =
        "qst 1\ndegree 2\nalphabet a\nvertex v color=a\nedge v nosuch 1 1\n";
    CHECK_THROWS_AS(parse_spec(unknown_ref), ParseError);
    const char* unused_color = "qst 1\ndegree 3\nalphabet a b\nvertex v color=a\nloop v 3\n";
    CHECK_THROWS_AS(parse_spec(unused_color), ParseError);
    const char* disconnected =
        "qst 1\ndegree 3\nalphabet a\nvertex u color=a\nvertex w color=a\nloop u 3\nloop w 3\n";
    CHECK_THROWS_AS(parse_spec(disconnected), ParseError);
}

TEST_CASE("periodic tail wrap rule is enforced") {
    const char* bad_wrap =
        "qst 1\ndegree 3\nalphabet a b\nvertex v color=b\n"
        "tail attach=v fwd=3 bwd=2 kind=periodic\n"
        "  template t0 color=a loop=0 fwd=2 bwd=1\n";
    CHECK_THROWS_AS(parse_spec(bad_wrap), ParseError);  // attach bwd != last template bwd
}

TEST_CASE("substitution tails require uniform templates and known rules") {
    const char* nonuniform =
        "qst 1\ndegree 3\nalphabet a b c\nvertex r color=c\nloop r 1\n"
        "tail attach=r fwd=2 bwd=1 kind=substitution\n"
        "  template A color=a loop=0 fwd=2 bwd=1\n"
        "  template B color=b loop=1 fwd=1 bwd=1\n"
        "  rules A->AB,B->A seed A\n";
    CHECK_THROWS_AS(parse_spec(nonuniform), ParseError);
    const char* bad_seed =
        "qst 1\ndegree 3\nalphabet a b c\nvertex r color=c\nloop r 1\n"
        "tail attach=r fwd=2 bwd=1 kind=substitution\n"
        "  template A color=a loop=0 fwd=2 bwd=1\n"
        "  template B color=b loop=0 fwd=2 bwd=1\n"
        "  rules A->AB,B->A seed Q\n";
    CHECK_THROWS_AS(parse_spec(bad_seed), ParseError);
}

TEST_CASE("serialize round-trips every fixture") {
    for (const auto& id : {"ex-basic(3)", "ex-nonray", "ex-n0eq1", "ex-loops-n0eq1", "ex-cycleG",
                           "ex-n0-ne-n1", "mono(3)"}) {
        QuotientSpec s = fixture_spec(id);
        QuotientSpec t = parse_spec(serialize_spec(s));
        for (int h : {0, 1, 4, 9}) CHECK(expansions_equal(s, t, h));
    }
}

TEST_CASE("expansion examples") {
    SUBCASE("no tail means nothing to expand") {
        ExpandedGraph g = expand_quotient(parse_spec(kMono3), 5);
        CHECK(g.n_verts() == 1);
        CHECK(g.verts[0].loop == 3);
    }
    SUBCASE("prefix plus first occurrences, degree consistent") {
        ExpandedGraph g = expand_quotient(fixture_spec("ex-basic(3)"), 4);
        CHECK(g.n_verts() == 2 + 5);
        for (int v = 0; v + 1 < g.n_verts(); ++v) {  // the last vertex is the frontier
            long long sum = g.verts[v].loop;
            for (int eid : g.incident[v]) sum += g.out_index(eid, v);
            CHECK(sum == 3);
        }
    }
    SUBCASE("substitution symbols follow the rules from the seed") {
        TailSpec t;
        t.kind = TailKind::Substitution;
        t.templates = {{"A", "a", 0, 2, 1}, {"B", "b", 0, 2, 1}};
        t.subst.rules = {{"A", {"A", "B"}}, {"B", {"A"}}};
        t.subst.seed = "A";
        auto sym = substitution_symbols(t, 8);
        CHECK(sym == std::vector<int>{0, 1, 0, 0, 1, 0, 1, 0});
    }
    SUBCASE("expansion at h is a prefix of expansion at h+1") {
        for (const auto& id : {"ex-basic(3)", "ex-n0eq1"}) {
            QuotientSpec s = fixture_spec(id);
            for (int h : {1, 3, 7}) {
                ExpandedGraph small = expand_quotient(s, h);
                ExpandedGraph big = expand_quotient(s, h + 1);
                REQUIRE(small.n_verts() < big.n_verts());
                for (int v = 0; v < small.n_verts(); ++v)
                    CHECK(small.verts[v].label == big.verts[v].label);
            }
        }
    }
}

TEST_CASE("shifting tail occurrences into the finite part keeps the coloring") {
    QuotientSpec s = fixture_spec("ex-n0eq1");
    QuotientSpec shifted = shift_tails(s, 3);
    CHECK(shifted.vertices.size() == s.vertices.size() + 3);
    ExpandedGraph a = expand_quotient(s, 9);
    ExpandedGraph b = expand_quotient(shifted, 6);
    REQUIRE(a.n_verts() == b.n_verts());
    for (int v = 0; v < a.n_verts(); ++v) {
        CHECK(a.verts[v].color == b.verts[v].color);
        CHECK(a.verts[v].loop == b.verts[v].loop);
    }
}
