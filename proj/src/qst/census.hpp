#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "qst/unfold.hpp"

namespace qst {

struct ClassRecord {
    int code = -1;
    std::vector<int> witnesses;   // expanded vertex ids, ascending
    int restriction = -1;         // code of the centered (n-1)-ball, n >= 1
    std::vector<int> extensions;  // distinct (n+1)-codes realized by witnesses, n < N
};

struct CensusOptions {
    int horizon = -1;  // -1: default_horizon(spec, N)
    bool parallel = false;
    bool verify_stability = false;  // substitution tails are always verified
};

// Ball classes for every radius 0..N, over one materialization.
class BallCensus {
  public:
    static std::unique_ptr<BallCensus> build(const QuotientSpec& spec, int N,
                                             CensusOptions opt = {});

    QuotientSpec spec;
    ExpandedGraph g;
    Canon canon;
    int N = 0;
    std::vector<int> b;                            // b[n] = classes at radius n
    std::vector<std::vector<int>> class_of;        // [n][vertex] -> code, -1 unknown
    std::vector<std::vector<ClassRecord>> classes; // [n], canonical order

    const ClassRecord* find(int n, int code) const;
    // classes with >= 2 extensions, with extension counts; defined for n < N
    std::vector<std::pair<int, int>> special_balls(int n) const;
    // the one special ball at n, asserting uniqueness and extension count 2
    int unique_special(int n) const;
    // number of radius-n balls of class `inner` contained in the radius-(n+1)
    // ball `outer` (computed from any witness; consistent across witnesses)
    int containment_count(int n_outer, int outer, int inner) const;

    BallCoder& coder() { return *coder_; }
    const BallCoder& coder() const { return *coder_; }

    BallCensus() = default;
    BallCensus(const BallCensus&) = delete;
    BallCensus& operator=(const BallCensus&) = delete;

  private:
    std::unique_ptr<BallCoder> coder_;
};

enum class Verdict { QuasiSturmianUpToN, PeriodicLike, Other };

struct ComplexityProfile {
    std::vector<int> b;
    std::optional<int> N0;  // window-relative
    std::optional<int> c;   // b(N0) - N0
    Verdict verdict = Verdict::Other;
};

ComplexityProfile complexity_profile(const BallCensus& census);

struct TypeSet {
    int vertex = -1;
    std::vector<int> members;  // radii n with the vertex's n-ball special
    int tau = -1;              // max member; -1 when empty
    bool censored = false;     // tau may grow beyond the window
};

// Type sets for every vertex whose balls are determined up to radius N-1.
std::vector<TypeSet> type_sets(const BallCensus& census);

}  // namespace qst
