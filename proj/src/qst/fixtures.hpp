#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qst/spec.hpp"

namespace qst {

// Embedded worked examples. Each id maps to a qst document; `word(k)` maps
// to the periodic approximation by the k-th member of the nested word
// family (the exact limit-word tables live in the word module).
//   ex-basic(c)  ex-nonray  ex-n0eq1  ex-loops-n0eq1  ex-cycleG
//   ex-n0-ne-n1  mono(d)    word(k)
struct FixtureRef {
    std::string name;
    std::optional<int> arg;
};

std::vector<std::string> fixture_names();
std::optional<FixtureRef> parse_fixture_id(const std::string& id);
bool is_fixture_id(const std::string& id);

// The qst document for a fixture id. Throws ParseError for unknown ids or
// bad arguments.
std::string fixture_qst(const std::string& id);
QuotientSpec fixture_spec(const std::string& id);

}  // namespace qst
