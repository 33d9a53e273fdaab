#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qst/census.hpp"

namespace qst {

enum class Shape { FinitePartPlusRay, Ray, Biinfinite, Other };
enum class BoundedVerdict { Bounded, UnboundedHeuristic, Undetermined };
std::string shape_name(Shape s);
std::string bounded_name(BoundedVerdict b);

struct StructureBasics {
    ComplexityProfile profile;
    bool degenerate = false;  // no quasi-Sturmian window verdict
    int N1 = -1;
    std::vector<int> G;       // expanded vertex ids, ascending
    std::vector<char> in_G;   // indexed by expanded vertex id
    int x_N1 = -1;            // the vertex of maximal type N1
    int r_xG = 0;             // max distance from x_N1 to G
    Shape shape = Shape::Other;
    BoundedVerdict bounded = BoundedVerdict::Undetermined;
    std::vector<TypeSet> tsets;

    const TypeSet* type_set_of(int vertex) const;
};

StructureBasics structure_basics(const BallCensus& census);

// Quotient of the tail side: the periodic pattern of the ray folded by its
// own translation/reflection symmetries. A segment arises exactly when the
// pattern admits a reflection, a cycle when it does not.
struct ZGraph {
    enum class Topo { SingleVertex, Segment, Cycle };
    struct V {
        int phase = 0;            // representative phase of the orbit
        std::string color;
        int zloop = 0;            // loop index in Z
        std::string n1_code;      // canonical string of the deep N1-ball
    };
    Topo topo = Topo::SingleVertex;
    std::vector<V> verts;                            // path or cycle order
    std::vector<std::array<int, 4>> edges;           // a, b, i(a->b), i(b->a)
    int degree = 3;
    int q = 1;                        // translation period of the ray pattern
    std::vector<int> orbit_of_phase;  // phase mod q -> vertex index

    std::string topo_string() const;  // "single-vertex", "segment(5)", "cycle(4)"
};

ZGraph derive_Z(const BallCensus& census, const StructureBasics& basics);

// Z rendered as a tail-free quotient description; its cover is the
// periodic extension, recolored by center colors.
QuotientSpec extension_spec(const ZGraph& z);

struct ExtensionCheck {
    QuotientSpec extension;
    std::vector<int> b_ext;
    bool bounded_ok = false;       // stabilizes within 2|VZ| radii, value <= |VZ|
    bool deep_agreement = false;   // deep ray balls equal extension balls
    bool assignment_ok = false;    // outward class assignment honors index rows
};

ExtensionCheck build_periodic_extension(const BallCensus& census, const StructureBasics& basics,
                                        const ZGraph& z);

struct MarkedRecoloring {
    QuotientSpec spec;
    int orig_alphabet_size = 0;
    int g_size = 0;
};

// Fresh colors on the vertices of G (tail members first moved into the
// finite part); the described coloring is unchanged apart from the marks.
MarkedRecoloring marked_recoloring(const BallCensus& census, const StructureBasics& basics);

struct BoundedRoundTrip {
    bool forward_ok = false;       // quasi-Sturmian + periodic tail -> shape + extension
    ExtensionCheck ext;
    std::vector<int> b_marked;     // census of the marked recoloring
    bool marked_quasi_sturmian = false;
    std::vector<int> formula;      // n + |alphabet| + |G| per n
    bool formula_match = false;    // b_marked == formula on the window
};

BoundedRoundTrip bounded_round_trip(const BallCensus& census, const StructureBasics& basics,
                                    const ZGraph& z, int marked_max_n);

// Vertices of any 1-ball realize at most three distinct type sets.
void check_type_set_triples(const BallCensus& census, const StructureBasics& basics);

}  // namespace qst
