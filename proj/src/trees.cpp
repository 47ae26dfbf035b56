#include "tropsi/trees.hpp"

#include <algorithm>
#include <stdexcept>

namespace tropsi {

Split Split::from_side(MarkSet side, int n) {
  const MarkSet full = full_mark_set(n);
  if ((side & full) != side) throw std::invalid_argument("split side exceeds [n]");
  if (contains_mark(side, 1)) side = full & ~side;
  const int size = mark_count(side);
  if (size < 2 || size > n - 2) {
    throw std::invalid_argument("split sides must have between 2 and n-2 marks");
  }
  return Split(side);
}

MarkSet Split::two_element_side(int n) const {
  if (mark_count(side_) == 2) return side_;
  const MarkSet comp = complement(n);
  if (mark_count(comp) == 2) return comp;
  return 0;
}

MarkSet Split::pair_avoiding(int mark, int n) const {
  if (mark_count(side_) == 2 && !contains_mark(side_, mark)) return side_;
  const MarkSet comp = complement(n);
  if (mark_count(comp) == 2 && !contains_mark(comp, mark)) return comp;
  return 0;
}

bool splits_compatible(Split a, Split b, int n) {
  const MarkSet full = full_mark_set(n);
  const MarkSet i = a.side(), j = b.side();
  return (i & j) == 0 || (i & ~j & full) == 0 || (~i & j & full) == 0 ||
         (~i & ~j & full) == 0;
}

CombinatorialType::CombinatorialType(int n, std::vector<Split> splits) : n_(n) {
  if (n < 4) throw std::invalid_argument("combinatorial types need n >= 4");
  std::sort(splits.begin(), splits.end());
  for (std::size_t i = 0; i < splits.size(); ++i) {
    if (i + 1 < splits.size() && splits[i] == splits[i + 1]) {
      throw std::invalid_argument("duplicate split in combinatorial type");
    }
    for (std::size_t j = i + 1; j < splits.size(); ++j) {
      if (!splits_compatible(splits[i], splits[j], n)) {
        throw std::invalid_argument("incompatible splits: " + splits[i].to_string() + " vs " +
                                    splits[j].to_string());
      }
    }
  }
  if (static_cast<int>(splits.size()) > n - 3) {
    throw std::invalid_argument("too many splits for a tree on n marks");
  }
  splits_ = std::move(splits);
}

bool CombinatorialType::has_split(Split s) const {
  return std::find(splits_.begin(), splits_.end(), s) != splits_.end();
}

std::vector<VertexLocalData> CombinatorialType::vertex_data() const {
  // The canonical sides (all 1-free) form a laminar family; the tree is its
  // Hasse forest plus a root vertex holding mark 1.
  const std::size_t k = splits_.size();
  std::vector<int> parent(k, -1);  // index of the minimal strict superset
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j) continue;
      const MarkSet si = splits_[i].side(), sj = splits_[j].side();
      if ((si & sj) == si && si != sj) {  // si subset of sj
        if (parent[i] < 0 || (sj & splits_[parent[i]].side()) == sj) parent[i] = static_cast<int>(j);
      }
    }
  }
  std::vector<std::vector<int>> children(k + 1);  // slot k is the root
  for (std::size_t i = 0; i < k; ++i) {
    children[parent[i] < 0 ? k : parent[i]].push_back(static_cast<int>(i));
  }

  std::vector<VertexLocalData> out;
  out.reserve(k + 1);
  const auto make_vertex = [&](std::size_t slot) {
    VertexLocalData v;
    MarkSet below = 0;
    std::vector<MarkSet> parts;
    for (int c : children[slot]) {
      below |= splits_[c].side();
      parts.push_back(splits_[c].side());
    }
    if (slot == k) {
      v.key = 0;
      v.valence = static_cast<int>(children[slot].size());
      v.marks = full_mark_set(n_) & ~below;
    } else {
      v.key = splits_[slot].side();
      v.valence = static_cast<int>(children[slot].size()) + 1;
      v.marks = splits_[slot].side() & ~below;
      parts.push_back(splits_[slot].complement(n_));
    }
    for (int mark : marks_of(v.marks)) parts.push_back(mark_bit(mark));
    std::sort(parts.begin(), parts.end(), mark_set_less);
    v.parts = std::move(parts);
    return v;
  };

  out.push_back(make_vertex(k));  // root first
  for (std::size_t i = 0; i < k; ++i) out.push_back(make_vertex(i));
  return out;
}

std::string CombinatorialType::to_string() const {
  if (splits_.empty()) return "{*}";
  std::string s;
  for (std::size_t i = 0; i < splits_.size(); ++i) {
    if (i) s += ' ';
    s += splits_[i].to_string();
  }
  return s;
}

bool operator<(const CombinatorialType& a, const CombinatorialType& b) {
  if (a.n() != b.n()) return a.n() < b.n();
  return std::lexicographical_compare(a.splits().begin(), a.splits().end(), b.splits().begin(),
                                      b.splits().end());
}

bool is_w_stable(const CombinatorialType& t, const WeightVector& w) {
  if (t.n() != w.n()) throw std::invalid_argument("mark count mismatch");
  for (const VertexLocalData& v : t.vertex_data()) {
    if (!w.vertex_stable(v.valence, v.marks)) return false;
  }
  return true;
}

std::vector<Split> valid_splits(const WeightVector& w) {
  const int n = w.n();
  std::vector<Split> out;
  // Canonical sides are the subsets of {2..n} of size 2..n-2.
  for (MarkSet side = 0; side <= full_mark_set(n); side += 2) {
    const int size = mark_count(side);
    if (size < 2 || size > n - 2) continue;
    if (w.weight_exceeds_one(side) && w.weight_exceeds_one(full_mark_set(n) & ~side)) {
      out.push_back(Split::from_side(side, n));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void extend_types(const std::vector<Split>& splits, const std::vector<std::vector<bool>>& compat,
                  std::size_t next, std::size_t remaining, std::vector<std::size_t>& chosen, int n,
                  std::vector<CombinatorialType>& out) {
  if (remaining == 0) {
    std::vector<Split> sel;
    sel.reserve(chosen.size());
    for (std::size_t idx : chosen) sel.push_back(splits[idx]);
    out.emplace_back(n, std::move(sel));
    return;
  }
  for (std::size_t i = next; i + remaining <= splits.size(); ++i) {
    bool ok = true;
    for (std::size_t idx : chosen) {
      if (!compat[idx][i]) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    chosen.push_back(i);
    extend_types(splits, compat, i + 1, remaining - 1, chosen, n, out);
    chosen.pop_back();
  }
}

}  // namespace

std::vector<CombinatorialType> enumerate_types(const WeightVector& w, int codim) {
  const int n = w.n();
  if (codim < 0 || codim > n - 3) {
    throw std::invalid_argument("codimension must lie between 0 and n-3");
  }
  const std::vector<Split> splits = valid_splits(w);
  std::vector<std::vector<bool>> compat(splits.size(), std::vector<bool>(splits.size(), false));
  for (std::size_t i = 0; i < splits.size(); ++i) {
    for (std::size_t j = 0; j < splits.size(); ++j) {
      compat[i][j] = splits_compatible(splits[i], splits[j], n);
    }
  }
  std::vector<CombinatorialType> out;
  std::vector<std::size_t> chosen;
  extend_types(splits, compat, 0, static_cast<std::size_t>(n - 3 - codim), chosen, n, out);
  std::sort(out.begin(), out.end());
  return out;
}

CombinatorialType contract_edge(const CombinatorialType& t, Split s) {
  if (!t.has_split(s)) throw std::invalid_argument("contract_edge: split not present");
  std::vector<Split> splits;
  for (const Split& other : t.splits()) {
    if (!(other == s)) splits.push_back(other);
  }
  return CombinatorialType(t.n(), std::move(splits));
}

std::vector<std::pair<CombinatorialType, Split>> expansions(const CombinatorialType& t,
                                                            const WeightVector& w) {
  std::vector<std::pair<CombinatorialType, Split>> out;
  if (t.codim() == 0) return out;
  for (const Split& s : valid_splits(w)) {
    if (t.has_split(s)) continue;
    bool ok = true;
    for (const Split& existing : t.splits()) {
      if (!splits_compatible(existing, s, t.n())) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    std::vector<Split> splits = t.splits();
    splits.push_back(s);
    out.emplace_back(CombinatorialType(t.n(), std::move(splits)), s);
  }
  return out;
}

}  // namespace tropsi
