#pragma once

#include <set>
#include <string>
#include <vector>

#include "qst/errors.hpp"

namespace qst {

// Coloring of the 2-regular tree by the limit of a nested word family.
// Radius-n ball classes are length-(2n+1) factors taken up to reversal;
// factor sets are trusted at a length only after three consecutive family
// members agree on them.
class WordFixture {
  public:
    static WordFixture build(int k_max);

    int k_max() const { return k_max_; }
    const std::string& x(int k) const { return X_.at(k); }
    const std::string& text() const { return X_.back(); }

    static long long n_k(int k) { return (1LL << k) - 1; }
    static long long x_len(int k) { return 3LL * (1LL << (k - 1)) + 1; }
    static std::string reversal_canon(std::string w);

    bool stable(int len) const;  // factor set of this length is settled
    std::set<std::string> factors(int len) const;
    std::set<std::string> ball_classes(int n) const;  // length 2n+1, up to reversal

    int p_count(int len) const;    // plain factor count
    int ball_count(int n) const;   // class count up to reversal

    // minimal radius m such that one window of length 2m+1 contains every
    // radius-n class among its subwindows; throws LimitError when the search
    // needs window lengths beyond the settled range
    int rpp(int n, int cap) const;

  private:
    int k_max_ = 0;
    std::vector<std::string> X_;  // X_[k] for k >= 1; X_[0] unused
};

}  // namespace qst
