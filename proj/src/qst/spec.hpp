#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qst/errors.hpp"

namespace qst {

// Edge-indexed colored quotient graph with a finite part and up to two
// finitely described infinite tails. The unit of input for every analysis.

struct TailTemplate {
    std::string name;
    std::string color;
    int loop = 0;  // loop index at each occurrence, >= 0
    int fwd = 1;   // index from occurrence j toward occurrence j+1
    int bwd = 1;   // index from occurrence j+1 back toward occurrence j
};

enum class TailKind { Periodic, Substitution };

struct SubstitutionRules {
    std::vector<std::pair<std::string, std::vector<std::string>>> rules;
    std::string seed;
};

struct TailSpec {
    std::string attach;  // finite vertex id
    int attach_fwd = 1;  // index from attach toward occurrence 0
    int attach_bwd = 1;  // index from occurrence 0 back toward attach
    TailKind kind = TailKind::Periodic;
    std::vector<TailTemplate> templates;  // in ray order
    SubstitutionRules subst;              // kind == Substitution only

    int period() const { return static_cast<int>(templates.size()); }
    const TailTemplate* find_template(const std::string& name) const;
};

struct FiniteVertex {
    std::string id;
    std::string color;
};

struct SpecEdge {
    std::string a, b;
    int fwd = 1;  // index i(a -> b)
    int bwd = 1;  // index i(b -> a)
};

struct SpecLoop {
    std::string at;
    int index = 1;
};

struct QuotientSpec {
    int degree = 3;
    std::vector<std::string> alphabet;
    std::vector<FiniteVertex> vertices;
    std::vector<SpecEdge> edges;
    std::vector<SpecLoop> loops;
    std::vector<TailSpec> tails;

    int vertex_index(const std::string& id) const;  // -1 if unknown
    bool has_color(const std::string& c) const;
};

// Parses and validates a qst-format document. Throws ParseError.
QuotientSpec parse_spec(const std::string& text);

// Validation only (degree sums, connectivity, surjectivity, tail rules).
void validate_spec(const QuotientSpec& spec);

// Canonical text form; parse_spec(serialize_spec(s)) reproduces s.
std::string serialize_spec(const QuotientSpec& spec);

// Moves the first k occurrences of every tail into the finite part,
// keeping the described coloring identical. Periodic tails only.
QuotientSpec shift_tails(const QuotientSpec& spec, int k);

// Expands substitution rules from the seed until at least `count` symbols
// are produced; returns template indices. Throws ParseError if the rules
// cannot produce that many symbols.
std::vector<int> substitution_symbols(const TailSpec& tail, int count);

}  // namespace qst
