#pragma once

#include <string>

#include "qst/census.hpp"
#include "qst/factor_graph.hpp"
#include "qst/recurrence.hpp"
#include "qst/structure.hpp"
#include "qst/word.hpp"

namespace qst {

std::string complexity_csv(const BallCensus& census);

std::string balls_text(const BallCensus& census, int n, bool with_codes);

// Marker annotations appear when the window supports them.
std::string factor_graph_dot(const BallCensus& census, int n);

std::string evolution_csv(const BallCensus& census, const EvolutionTrace& trace);

// Key-value block: window data, finite part, shape, tail-side quotient.
std::string structure_text(const QuotientSpec& spec, int max_n);

// Columns n,Rpp,Rpp_predicted,branch,R,status for 0 <= n <= max_n.
std::string recurrence_csv(const QuotientSpec& spec, int max_n, bool with_predictions);

// Limit-word tables: member sizes, class counts, window recurrence.
std::string word_report(int k_max, int max_n);

struct CheckOutcome {
    std::string report;
    int failures = 0;       // invariant violations
    int limit_failures = 0; // window/cap shortfalls
    int exit_code() const { return failures ? 2 : (limit_failures ? 3 : 0); }
};

// Runs every applicable invariant of every module against one description.
CheckOutcome run_check(const QuotientSpec& spec, int max_n);

// Word-module self-checks (identities and window recurrence).
CheckOutcome run_word_check(int k_max);

}  // namespace qst
