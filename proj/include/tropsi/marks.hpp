#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace tropsi {

// Marks 1..n are stored as bits 0..n-1 of a MarkSet.
using MarkSet = std::uint32_t;

inline constexpr MarkSet mark_bit(int mark) { return MarkSet{1} << (mark - 1); }

inline constexpr MarkSet full_mark_set(int n) { return (MarkSet{1} << n) - 1; }

inline constexpr bool contains_mark(MarkSet s, int mark) { return (s & mark_bit(mark)) != 0; }

inline constexpr int mark_count(MarkSet s) { return std::popcount(s); }

inline constexpr int least_mark(MarkSet s) { return std::countr_zero(s) + 1; }

std::vector<int> marks_of(MarkSet s);

std::string mark_set_to_string(MarkSet s);

// Lexicographic order on the sorted element sequences of two mark sets.
// Used for canonical part and split order.
inline bool mark_set_less(MarkSet a, MarkSet b) {
  while (a != 0 && b != 0) {
    const int la = std::countr_zero(a);
    const int lb = std::countr_zero(b);
    if (la != lb) return la < lb;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

}  // namespace tropsi
