#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tropsi/marks.hpp"
#include "tropsi/numbers.hpp"
#include "tropsi/weights.hpp"

namespace tropsi {

/// A partition of a mark set into disjoint nonempty parts, stored in the
/// canonical order (parts sorted by least element).
struct SetPartition {
  std::vector<MarkSet> parts;
  MarkSet ground = 0;

  /// Validates disjointness and sorts the parts canonically.
  static SetPartition of(std::vector<MarkSet> parts);

  int length() const { return static_cast<int>(parts.size()); }
  std::string to_string() const;

  friend bool operator==(const SetPartition&, const SetPartition&) = default;
};

bool partition_less(const SetPartition& a, const SetPartition& b);

/// Psi-exponent vector K = (k_1, ..., k_n), all entries >= 0.
struct PsiExponents {
  std::vector<std::int64_t> k;

  explicit PsiExponents(std::vector<std::int64_t> entries);

  int n() const { return static_cast<int>(k.size()); }
  std::int64_t at(int mark) const { return k[mark - 1]; }
  std::int64_t total() const;
  std::int64_t total_over(MarkSet marks) const;
};

/// Exact multinomial coefficient top! / prod(parts_i!).  Returns 0 when top or
/// any entry is negative; throws std::invalid_argument when all entries are
/// nonnegative but do not sum to top.
BigInt multinomial(std::int64_t top, std::span<const std::int64_t> parts);

/// All totally w-unstable partitions of S (every part of weight <= 1), in
/// canonical order.  For heavy/light w the heavy marks of S are forced into
/// singleton parts and the light marks are partitioned arbitrarily.
std::vector<SetPartition> unstable_partitions(MarkSet S, const WeightVector& w);

/// True iff some subset of parts of P unions exactly to S.
bool is_admissible(const SetPartition& P, MarkSet S);

/// The P-sequence of K: entry i is 1 - |P_i| + sum_{j in P_i} k_j.
std::vector<std::int64_t> p_sequence(const PsiExponents& K, const SetPartition& P);

/// Tropical local multiplicity of the mark set S:
///   sum over P in unstable_partitions(S, w) of
///     (-1)^(|S| - l(P)) * multinomial(sum K(P), K(P)).
/// The empty S contributes the empty partition only and yields 1.
BigInt tlm(MarkSet S, const PsiExponents& K, const WeightVector& w);

/// Same sum as tlm restricted to partitions in which t2 and N lie in
/// different parts.
BigInt tlm_restricted(MarkSet S, const PsiExponents& K, const WeightVector& w, int t2, int N);

}  // namespace tropsi
