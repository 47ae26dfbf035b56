#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "tropsi/marks.hpp"
#include "tropsi/weights.hpp"

namespace tropsi {

/// A split of [n], stored by its canonical side: the side not containing
/// mark 1.  This fixes the identification v_I = v_{[n] \ I} once and for all.
class Split {
 public:
  /// Builds the canonical split from either side; throws std::invalid_argument
  /// unless 2 <= |I| <= n-2.
  static Split from_side(MarkSet side, int n);

  MarkSet side() const { return side_; }
  MarkSet complement(int n) const { return full_mark_set(n) & ~side_; }

  /// The two-element side if one exists (the canonical side or its
  /// complement), otherwise 0.
  MarkSet two_element_side(int n) const;

  /// The two-element side not containing the mark, or 0 if there is none.
  MarkSet pair_avoiding(int mark, int n) const;

  bool separates(int i, int j) const { return contains_mark(side_, i) != contains_mark(side_, j); }

  std::string to_string() const { return mark_set_to_string(side_); }

  friend bool operator==(const Split&, const Split&) = default;

 private:
  explicit Split(MarkSet side) : side_(side) {}
  MarkSet side_ = 0;
};

inline bool operator<(Split a, Split b) { return mark_set_less(a.side(), b.side()); }

/// Compatibility of two splits: at least one of the four pairwise side
/// intersections is empty.  Compatible systems of splits are exactly the ones
/// realised by a tree.
bool splits_compatible(Split a, Split b, int n);

/// Data of one vertex of the tree underlying a combinatorial type: its
/// valence, the marks it supports, and the partition of [n] induced by
/// deleting the vertex (marks at the vertex appear as singleton parts).
struct VertexLocalData {
  MarkSet key = 0;  // canonical side of the split above the vertex; 0 for the root
  int valence = 0;
  MarkSet marks = 0;
  std::vector<MarkSet> parts;

  int degree() const { return valence + mark_count(marks); }
};

/// A rational n-marked tree encoded as a compatible split system.  Vertices,
/// edges and markings are derived on demand, never stored.
class CombinatorialType {
 public:
  CombinatorialType(int n, std::vector<Split> splits);

  int n() const { return n_; }
  const std::vector<Split>& splits() const { return splits_; }
  int edge_count() const { return static_cast<int>(splits_.size()); }
  int codim() const { return n_ - 3 - edge_count(); }
  bool has_split(Split s) const;

  std::vector<VertexLocalData> vertex_data() const;

  std::string to_string() const;

  friend bool operator==(const CombinatorialType&, const CombinatorialType&) = default;

 private:
  int n_;
  std::vector<Split> splits_;  // canonical order, pairwise compatible
};

bool operator<(const CombinatorialType& a, const CombinatorialType& b);

bool is_w_stable(const CombinatorialType& t, const WeightVector& w);

/// All splits valid for w: both sides of the associated two-vertex type are
/// stable, i.e. both sides have weight above 1.
std::vector<Split> valid_splits(const WeightVector& w);

/// All w-stable combinatorial types of the given codimension (n-3-codim
/// compatible valid splits), in canonical order.
std::vector<CombinatorialType> enumerate_types(const WeightVector& w, int codim);

/// Removes the split s from t; the codimension increases by one.
CombinatorialType contract_edge(const CombinatorialType& t, Split s);

/// All w-stable single-split refinements of t, as (refined type, new split)
/// pairs in canonical split order.
std::vector<std::pair<CombinatorialType, Split>> expansions(const CombinatorialType& t,
                                                            const WeightVector& w);

}  // namespace tropsi
