#include "qst/canon.hpp"

#include <algorithm>

namespace qst {

int Canon::color_id(const std::string& name) {
    auto it = color_ids_.find(name);
    if (it != color_ids_.end()) return it->second;
    int id = static_cast<int>(colors_.size());
    colors_.push_back(name);
    color_ids_[name] = id;
    return id;
}

int Canon::node(int color, std::vector<int> kids) {
    std::sort(kids.begin(), kids.end(), [this](int a, int b) { return less(a, b); });
    auto key = std::make_pair(color, kids);
    auto it = index_.find(key);
    if (it != index_.end()) return it->second;
    Entry e;
    e.color = color;
    e.kids = key.second;
    e.size = 1;
    e.depth = 0;
    for (int k : e.kids) {
        e.size += entries_[k].size;
        e.depth = std::max(e.depth, entries_[k].depth + 1);
    }
    int id = static_cast<int>(entries_.size());
    entries_.push_back(std::move(e));
    index_.emplace(std::move(key), id);
    return id;
}

// Bracket form "(<color> <child>...<child>)" compares child-by-child; when
// one child list is a prefix of the other, the longer list sorts first
// (')' > ' ' in the string form).
int Canon::cmp(int a, int b) const {
    if (a == b) return 0;
    unsigned long long key =
        (static_cast<unsigned long long>(std::min(a, b)) << 32) | static_cast<unsigned>(std::max(a, b));
    bool flipped = a > b;
    auto it = cmp_memo_.find(key);
    int r;
    if (it != cmp_memo_.end()) {
        r = it->second;
    } else {
        const Entry& ea = entries_[std::min(a, b)];
        const Entry& eb = entries_[std::max(a, b)];
        r = colors_[ea.color].compare(colors_[eb.color]);
        if (r == 0) {
            size_t m = std::min(ea.kids.size(), eb.kids.size());
            for (size_t i = 0; i < m && r == 0; ++i) r = cmp(ea.kids[i], eb.kids[i]);
            if (r == 0) r = ea.kids.size() > eb.kids.size() ? -1 : 1;
        }
        r = r < 0 ? -1 : 1;
        cmp_memo_[key] = r;
    }
    return flipped ? -r : r;
}

std::string Canon::str(int code) const {
    const Entry& e = entries_[code];
    if (e.size > 20'000'000)
        throw LimitError("canonical string too large to materialize (ball of " +
                         std::to_string(e.size) + " nodes)");
    std::string out = "(" + colors_[e.color];
    for (int k : e.kids) {
        out += ' ';
        out += str(k);
    }
    out += ')';
    return out;
}

}  // namespace qst
