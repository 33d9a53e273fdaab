#include "qst/word.hpp"

#include <algorithm>

namespace qst {

WordFixture WordFixture::build(int k_max) {
    if (k_max < 3) throw Error("word fixture needs k_max >= 3");
    WordFixture wf;
    wf.k_max_ = k_max;
    wf.X_.resize(k_max + 1);
    std::string L;  // L_1 is empty
    for (int k = 1; k <= k_max; ++k) {
        if (k % 2 == 1)
            wf.X_[k] = "a" + L + "a" + L + "b" + L + "a";
        else
            wf.X_[k] = "b" + L + "a" + L + "b" + L + "b";
        L = L + (k % 2 == 1 ? "a" : "b") + L;  // L_{k+1}
    }
    return wf;
}

std::string WordFixture::reversal_canon(std::string w) {
    std::string r(w.rbegin(), w.rend());
    return std::min(w, r);
}

namespace {
std::set<std::string> factor_set(const std::string& s, int len) {
    std::set<std::string> out;
    if (len <= 0 || len > static_cast<int>(s.size())) return out;
    for (size_t i = 0; i + len <= s.size(); ++i) out.insert(s.substr(i, len));
    return out;
}
}  // namespace

bool WordFixture::stable(int len) const {
    if (k_max_ < 3) return false;
    auto a = factor_set(X_[k_max_ - 2], len);
    auto b = factor_set(X_[k_max_ - 1], len);
    auto c = factor_set(X_[k_max_], len);
    return !c.empty() && a == b && b == c;
}

std::set<std::string> WordFixture::factors(int len) const { return factor_set(X_[k_max_], len); }

std::set<std::string> WordFixture::ball_classes(int n) const {
    std::set<std::string> out;
    for (const auto& f : factors(2 * n + 1)) out.insert(reversal_canon(f));
    return out;
}

int WordFixture::p_count(int len) const { return static_cast<int>(factors(len).size()); }

int WordFixture::ball_count(int n) const { return static_cast<int>(ball_classes(n).size()); }

int WordFixture::rpp(int n, int cap) const {
    if (!stable(2 * n + 1))
        throw LimitError("factor sets of length " + std::to_string(2 * n + 1) +
                         " are not settled; increase k_max");
    auto all = ball_classes(n);
    const std::string& s = X_[k_max_];
    for (int m = n; m <= cap; ++m) {
        int wlen = 2 * m + 1;
        if (!stable(wlen))
            throw LimitError("factor sets of length " + std::to_string(wlen) +
                             " are not settled; increase k_max");
        int sub = 2 * n + 1;
        for (size_t i = 0; i + wlen <= s.size(); ++i) {
            std::set<std::string> got;
            for (int j = 0; j + sub <= wlen; ++j)
                got.insert(reversal_canon(s.substr(i + j, sub)));
            if (got.size() == all.size()) return m;
        }
    }
    throw LimitError("window covering search exceeded the cap " + std::to_string(cap));
}

}  // namespace qst
