#include "tropsi/partitions.hpp"

#include <algorithm>
#include <stdexcept>

namespace tropsi {

SetPartition SetPartition::of(std::vector<MarkSet> parts) {
  SetPartition p;
  MarkSet seen = 0;
  for (MarkSet part : parts) {
    if (part == 0) throw std::invalid_argument("set partition parts must be nonempty");
    if (part & seen) throw std::invalid_argument("set partition parts must be disjoint");
    seen |= part;
  }
  std::sort(parts.begin(), parts.end(), mark_set_less);
  p.parts = std::move(parts);
  p.ground = seen;
  return p;
}

std::string SetPartition::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += '|';
    std::string s = mark_set_to_string(parts[i]);
    out += s.substr(1, s.size() - 2);
  }
  out += ']';
  return out;
}

bool partition_less(const SetPartition& a, const SetPartition& b) {
  return std::lexicographical_compare(a.parts.begin(), a.parts.end(), b.parts.begin(),
                                      b.parts.end(), mark_set_less);
}

PsiExponents::PsiExponents(std::vector<std::int64_t> entries) : k(std::move(entries)) {
  for (std::int64_t v : k) {
    if (v < 0) throw std::invalid_argument("psi exponents must be nonnegative");
  }
}

std::int64_t PsiExponents::total() const {
  std::int64_t s = 0;
  for (std::int64_t v : k) s += v;
  return s;
}

std::int64_t PsiExponents::total_over(MarkSet marks) const {
  std::int64_t s = 0;
  for (int mark : marks_of(marks)) s += at(mark);
  return s;
}

BigInt multinomial(std::int64_t top, std::span<const std::int64_t> parts) {
  if (top < 0) return 0;
  std::int64_t sum = 0;
  bool negative = false;
  for (std::int64_t p : parts) {
    if (p < 0) negative = true;
    sum += p;
  }
  if (negative) return 0;
  if (sum != top) {
    throw std::invalid_argument("multinomial: nonnegative entries must sum to the top index");
  }
  BigInt result = 1;
  std::int64_t used = 0;
  for (std::int64_t p : parts) {
    // multiply by binom(used + p, p)
    for (std::int64_t i = 1; i <= p; ++i) {
      result *= used + i;
      result /= i;
    }
    used += p;
  }
  return result;
}

namespace {

// Enumerates all set partitions of `elements` by restricted growth, appending
// each to `out` merged with the forced singleton parts.
void light_partitions(const std::vector<int>& elements, std::size_t idx,
                      std::vector<MarkSet>& blocks, const std::vector<MarkSet>& singletons,
                      std::vector<SetPartition>& out) {
  if (idx == elements.size()) {
    std::vector<MarkSet> parts = singletons;
    parts.insert(parts.end(), blocks.begin(), blocks.end());
    out.push_back(SetPartition::of(std::move(parts)));
    return;
  }
  const MarkSet bit = mark_bit(elements[idx]);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    blocks[b] |= bit;
    light_partitions(elements, idx + 1, blocks, singletons, out);
    blocks[b] &= ~bit;
  }
  blocks.push_back(bit);
  light_partitions(elements, idx + 1, blocks, singletons, out);
  blocks.pop_back();
}

}  // namespace

std::vector<SetPartition> unstable_partitions(MarkSet S, const WeightVector& w) {
  if (S == 0) throw std::invalid_argument("unstable_partitions: S must be nonempty");
  if ((S & w.full_set()) != S) throw std::invalid_argument("unstable_partitions: S exceeds [n]");
  std::vector<MarkSet> singletons;
  for (int mark : marks_of(S & w.heavy_set())) singletons.push_back(mark_bit(mark));
  std::vector<int> lights = marks_of(S & w.light_set());

  std::vector<SetPartition> out;
  std::vector<MarkSet> blocks;
  if (lights.empty()) {
    out.push_back(SetPartition::of(singletons));
  } else {
    light_partitions(lights, 0, blocks, singletons, out);
  }
  std::sort(out.begin(), out.end(), partition_less);
  return out;
}

bool is_admissible(const SetPartition& P, MarkSet S) {
  if ((S & P.ground) != S) throw std::invalid_argument("is_admissible: S must lie in the ground set");
  MarkSet covered = 0;
  for (MarkSet part : P.parts) {
    const MarkSet overlap = part & S;
    if (overlap == 0) continue;
    if (overlap != part) return false;  // part straddles the boundary of S
    covered |= part;
  }
  return covered == S;
}

std::vector<std::int64_t> p_sequence(const PsiExponents& K, const SetPartition& P) {
  if ((P.ground & full_mark_set(K.n())) != P.ground) {
    throw std::invalid_argument("p_sequence: partition ground set exceeds [n]");
  }
  std::vector<std::int64_t> seq;
  seq.reserve(P.parts.size());
  for (MarkSet part : P.parts) {
    seq.push_back(1 - mark_count(part) + K.total_over(part));
  }
  return seq;
}

namespace {

BigInt tlm_sum(MarkSet S, const PsiExponents& K, const WeightVector& w, int avoid_t2, int avoid_N) {
  if (S == 0) return 1;  // empty vertex: empty partition, empty product
  BigInt total = 0;
  const int size = mark_count(S);
  for (const SetPartition& P : unstable_partitions(S, w)) {
    if (avoid_t2 != 0) {
      bool merged = false;
      for (MarkSet part : P.parts) {
        if (contains_mark(part, avoid_t2) && contains_mark(part, avoid_N)) merged = true;
      }
      if (merged) continue;
    }
    const std::vector<std::int64_t> seq = p_sequence(K, P);
    std::int64_t top = 0;
    for (std::int64_t v : seq) top += v;
    const BigInt term = multinomial(top, seq);
    if ((size - P.length()) % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

}  // namespace

BigInt tlm(MarkSet S, const PsiExponents& K, const WeightVector& w) {
  return tlm_sum(S, K, w, 0, 0);
}

BigInt tlm_restricted(MarkSet S, const PsiExponents& K, const WeightVector& w, int t2, int N) {
  if (t2 == N || !contains_mark(S, t2) || !contains_mark(S, N)) {
    throw std::invalid_argument("tlm_restricted: t2 and N must be distinct marks of S");
  }
  return tlm_sum(S, K, w, t2, N);
}

}  // namespace tropsi
