#pragma once

#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "qst/errors.hpp"

namespace qst {

// Interner for rooted colored trees. Two trees get the same code iff they
// are isomorphic by a color-preserving root-fixing map; a node's canonical
// form is its color followed by its children's forms in canonical order.
// Codes are process-local; the bracketed canonical string is the stable
// cross-run artifact and canonical order equals lexicographic order on it.
class Canon {
  public:
    int color_id(const std::string& name);
    const std::string& color_name(int cid) const { return colors_[cid]; }

    int leaf(int color_id) { return node(color_id, {}); }
    int node(int color_id, std::vector<int> kids);

    // total order; matches lexicographic order of str()
    int cmp(int a, int b) const;
    bool less(int a, int b) const { return cmp(a, b) < 0; }

    int color_of(int code) const { return entries_[code].color; }
    const std::vector<int>& kids_of(int code) const { return entries_[code].kids; }
    long long size_of(int code) const { return entries_[code].size; }
    int depth_of(int code) const { return entries_[code].depth; }

    std::string str(int code) const;  // bracketed canonical form

  private:
    struct Entry {
        int color;
        std::vector<int> kids;  // canonical order
        long long size;
        int depth;
    };
    std::vector<std::string> colors_;
    std::unordered_map<std::string, int> color_ids_;
    std::vector<Entry> entries_;
    std::map<std::pair<int, std::vector<int>>, int> index_;
    mutable std::unordered_map<unsigned long long, int> cmp_memo_;
};

}  // namespace qst
