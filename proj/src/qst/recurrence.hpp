#pragma once

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qst/factor_graph.hpp"
#include "qst/structure.hpp"

namespace qst {

struct RppResult {
    int n = 0;
    int cap = 0;
    bool capped = false;
    int value = -1;        // minimal m with one m-ball containing every n-ball
    int center = -1;       // witness center (expanded vertex)
    int best_coverage = 0; // classes covered by the best center when capped
};

enum class RStatus { Attained, NotAttained, CapExceeded };

struct RResult {
    int n = 0;
    int cap = 0;
    RStatus status = RStatus::CapExceeded;
    int value = -1;           // minimal m with every m-ball containing every n-ball
    std::string missing;      // canonical string of a class missing far out
    std::string explanation;  // proof sketch for NotAttained
};

// Ball-recurrence searches over a wide materialization of one description.
class RecurrenceAnalyzer {
  public:
    RecurrenceAnalyzer(const QuotientSpec& spec, int max_n);

    const std::vector<int>& b() const { return b_; }
    int default_cap(int n) const { return n + b_[n] + 4; }

    RppResult rpp(int n, int cap = -1);
    RResult r(int n, int cap = -1);

    // classes realized arbitrarily far out on the tail (periodic tails)
    std::set<int> far_classes(int n) const;
    const std::vector<std::vector<int>>& classes() const { return cls_; }
    Canon& canon() { return canon_; }
    const ExpandedGraph& graph() const { return g_; }

  private:
    std::vector<int> coverage_candidates(int cap) const;
    QuotientSpec spec_;
    int max_n_;
    int cap_max_;
    std::vector<int> b_;
    ExpandedGraph g_;
    Canon canon_;
    std::unique_ptr<BallCoder> coder_;
    std::vector<std::vector<int>> cls_;  // [n][vertex] -> class, -1 unknown
};

// Set of classes within tree distance r of a lift of `start`, one layer at
// a time. Walking back along an edge is allowed when its index exceeds 1.
std::vector<std::vector<int>> reach_layers(const ExpandedGraph& g, int start, int max_r);

struct Prediction {
    int n = 0;
    int value = -1;
    char branch = '?';  // '1', 'a' or 'b'
    std::optional<int> nk;
};

// Closed-form value of the one-ball recurrence radius, by structure class.
Prediction predict_rpp(const StructureBasics& basics, const ZGraph* z, const EvolutionTrace* trace,
                       const std::vector<int>& b, int n);

// uniform-recurrence probe: does every radius up to `window` admit a finite
// R value across all evaluated centers?
bool uniform_recurrence_probe(RecurrenceAnalyzer& ra, int window);

}  // namespace qst
