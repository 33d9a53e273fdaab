#include "qst/fixtures.hpp"

#include <sstream>

#include "qst/word.hpp"

namespace qst {

std::vector<std::string> fixture_names() {
    return {"ex-basic", "ex-nonray", "ex-n0eq1", "ex-loops-n0eq1",
            "ex-cycleG", "ex-n0-ne-n1", "mono", "word"};
}

std::optional<FixtureRef> parse_fixture_id(const std::string& id) {
    std::string name = id;
    std::optional<int> arg;
    auto paren = id.find('(');
    auto colon = id.find(':');
    if (paren != std::string::npos && id.back() == ')') {
        name = id.substr(0, paren);
        arg = std::atoi(id.substr(paren + 1, id.size() - paren - 2).c_str());
    } else if (colon != std::string::npos) {
        name = id.substr(0, colon);
        arg = std::atoi(id.substr(colon + 1).c_str());
    }
    for (const auto& n : fixture_names())
        if (n == name) return FixtureRef{name, arg};
    return std::nullopt;
}

bool is_fixture_id(const std::string& id) { return parse_fixture_id(id).has_value(); }

namespace {

std::string mono_qst(int d) {
    if (d < 2) throw ParseError(0, "mono(d) needs d >= 2");
    std::ostringstream os;
    os << "qst 1\n"
       << "# one color, one vertex; the cover is the constant coloring\n"
       << "degree " << d << "\n"
       << "alphabet a\n"
       << "vertex v color=a\n"
       << "loop v " << d << "\n";
    return os.str();
}

std::string basic_qst(int c) {
    if (c < 3) throw ParseError(0, "ex-basic(c) needs c >= 3");
    std::ostringstream os;
    os << "qst 1\n"
       << "# path of singly-used colors feeding a one-template tail\n"
       << "degree 3\n"
       << "alphabet";
    for (int i = 1; i <= c; ++i) os << " a" << i;
    os << "\n";
    for (int i = 1; i <= c - 1; ++i) os << "vertex a" << i << " color=a" << i << "\n";
    os << "edge a1 a2 3 1\n";
    for (int i = 2; i <= c - 2; ++i) os << "edge a" << i << " a" << i + 1 << " 2 1\n";
    os << "tail attach=a" << c - 1 << " fwd=2 bwd=1 kind=periodic\n"
       << "  template t0 color=a" << c << " loop=0 fwd=2 bwd=1\n";
    return os.str();
}

const char* kNonray =
    "qst 1\n"
    "# two pendant colors on the ray's first vertex\n"
    "degree 3\n"
    "alphabet b w x\n"
    "vertex w0 color=w\n"
    "vertex x0 color=x\n"
    "vertex b1 color=b\n"
    "edge w0 b1 3 1\n"
    "edge x0 b1 3 1\n"
    "tail attach=b1 fwd=1 bwd=1 kind=periodic\n"
    "  template t0 color=b loop=0 fwd=2 bwd=1\n";

const char* kN0eq1 =
    "qst 1\n"
    "# tail follows the reflected walk on a five-vertex segment\n"
    "degree 3\n"
    "alphabet b w x\n"
    "vertex x0 color=x\n"
    "tail attach=x0 fwd=3 bwd=1 kind=periodic\n"
    "  template z1a color=b loop=1 fwd=1 bwd=2\n"
    "  template z2a color=w loop=0 fwd=1 bwd=1\n"
    "  template z3a color=b loop=0 fwd=2 bwd=1\n"
    "  template z4a color=w loop=0 fwd=2 bwd=1\n"
    "  template z5 color=b loop=1 fwd=1 bwd=2\n"
    "  template z4b color=w loop=0 fwd=1 bwd=2\n"
    "  template z3b color=b loop=0 fwd=1 bwd=1\n"
    "  template z2b color=w loop=0 fwd=2 bwd=1\n";

const char* kLoopsN0eq1 =
    "qst 1\n"
    "# looped pair behind the ray start\n"
    "degree 3\n"
    "alphabet b w x\n"
    "vertex bt color=b\n"
    "vertex bb color=b\n"
    "vertex w0 color=w\n"
    "vertex bm color=b\n"
    "loop bt 2\n"
    "loop bb 1\n"
    "edge bt w0 1 1\n"
    "edge bb w0 2 1\n"
    "edge w0 bm 1 1\n"
    "tail attach=bm fwd=2 bwd=1 kind=periodic\n"
    "  template t0 color=x loop=0 fwd=2 bwd=1\n";

const char* kCycleG =
    "qst 1\n"
    "# four-cycle in the finite part, pendant vertex on top\n"
    "degree 3\n"
    "alphabet b w x\n"
    "vertex xt color=x\n"
    "vertex bt color=b\n"
    "vertex bb color=b\n"
    "vertex w0 color=w\n"
    "vertex x1 color=x\n"
    "edge xt bt 3 1\n"
    "edge bt w0 1 1\n"
    "edge w0 bb 2 1\n"
    "edge bt x1 1 1\n"
    "edge bb x1 2 1\n"
    "tail attach=x1 fwd=1 bwd=1 kind=periodic\n"
    "  template t0 color=x loop=0 fwd=2 bwd=1\n";

const char* kN0NeN1 =
    "qst 1\n"
    "# four-template tail walking a four-cycle\n"
    "degree 3\n"
    "alphabet b w x\n"
    "vertex x0 color=x\n"
    "tail attach=x0 fwd=3 bwd=2 kind=periodic\n"
    "  template t0 color=b loop=0 fwd=1 bwd=2\n"
    "  template t1 color=w loop=0 fwd=1 bwd=2\n"
    "  template t2 color=b loop=0 fwd=1 bwd=2\n"
    "  template t3 color=x loop=0 fwd=1 bwd=2\n";

std::string word_qst(int k) {
    if (k < 1 || k > 16) throw ParseError(0, "word(k) needs 1 <= k <= 16");
    WordFixture wf = WordFixture::build(std::max(3, k));
    const std::string& w = wf.x(k);
    std::ostringstream os;
    os << "qst 1\n"
       << "# periodic approximation: the cycle spelled by word member " << k << "\n"
       << "# (limit-word tables come from the word adapter, not this graph)\n"
       << "degree 2\n"
       << "alphabet a b\n";
    int L = static_cast<int>(w.size());
    for (int i = 0; i < L; ++i) os << "vertex p" << i << " color=" << w[i] << "\n";
    for (int i = 0; i + 1 < L; ++i) os << "edge p" << i << " p" << i + 1 << " 1 1\n";
    os << "edge p" << L - 1 << " p0 1 1\n";
    return os.str();
}

}  // namespace

std::string fixture_qst(const std::string& id) {
    auto ref = parse_fixture_id(id);
    if (!ref) throw ParseError(0, "unknown fixture id '" + id + "'");
    if (ref->name == "mono") return mono_qst(ref->arg.value_or(3));
    if (ref->name == "ex-basic") return basic_qst(ref->arg.value_or(3));
    if (ref->name == "ex-nonray") return kNonray;
    if (ref->name == "ex-n0eq1") return kN0eq1;
    if (ref->name == "ex-loops-n0eq1") return kLoopsN0eq1;
    if (ref->name == "ex-cycleG") return kCycleG;
    if (ref->name == "ex-n0-ne-n1") return kN0NeN1;
    if (ref->name == "word") return word_qst(ref->arg.value_or(4));
    throw ParseError(0, "unknown fixture id '" + id + "'");
}

QuotientSpec fixture_spec(const std::string& id) { return parse_spec(fixture_qst(id)); }

}  // namespace qst
