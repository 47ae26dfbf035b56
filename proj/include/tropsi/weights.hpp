#pragma once

#include <string>
#include <vector>

#include "tropsi/marks.hpp"
#include "tropsi/numbers.hpp"

namespace tropsi {

/// A heavy/light weight vector on marks 1..n: the first n-m marks are heavy
/// (weight 1), the last m are light (weight eps with 0 < eps < 1/m).  eps is
/// never materialised: every choice in that range yields the same stability
/// combinatorics, so all predicates are decided from (n, m) alone.
class WeightVector {
 public:
  WeightVector(int n, int lights);

  /// Canonicalises an explicit rational weight vector.  Requires every mark to
  /// classify as heavy or light, heavy marks to form the prefix, and the light
  /// total to stay below 1; throws std::invalid_argument otherwise.
  static WeightVector from_weights(const std::vector<Rat>& weights);

  int n() const { return n_; }
  int m() const { return m_; }
  int heavy_count() const { return n_ - m_; }

  bool is_heavy(int mark) const { return mark >= 1 && mark <= n_ - m_; }
  bool is_light(int mark) const { return mark > n_ - m_ && mark <= n_; }

  MarkSet full_set() const { return full_mark_set(n_); }
  MarkSet heavy_set() const { return full_mark_set(n_ - m_); }
  MarkSet light_set() const { return full_set() & ~heavy_set(); }

  /// True iff the total weight of `marks` is <= 1, i.e. the set is a legal
  /// part of a totally w-unstable partition.  Holds exactly when the set is
  /// all light or a single heavy mark.
  bool weight_at_most_one(MarkSet marks) const;

  bool weight_exceeds_one(MarkSet marks) const { return !weight_at_most_one(marks); }

  /// Stability of a vertex: valence + total mark weight > 2 (strict).
  bool vertex_stable(int valence, MarkSet marks) const;

  std::string to_string() const;

  friend bool operator==(const WeightVector&, const WeightVector&) = default;

 private:
  int n_;
  int m_;
};

}  // namespace tropsi
