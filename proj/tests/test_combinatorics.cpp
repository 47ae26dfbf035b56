#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "tropsi/partitions.hpp"
#include "tropsi/weights.hpp"

using namespace tropsi;

namespace {

// Test-side oracle: all set partitions of the marks of S, by simple recursion
// independent of the library's restricted-growth enumeration.
void brute_partitions(const std::vector<int>& elems, std::size_t idx, std::vector<MarkSet>& parts,
                      std::vector<std::vector<MarkSet>>& out) {
  if (idx == elems.size()) {
    out.push_back(parts);
    return;
  }
  const MarkSet bit = mark_bit(elems[idx]);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    parts[i] |= bit;
    brute_partitions(elems, idx + 1, parts, out);
    parts[i] &= ~bit;
  }
  parts.push_back(bit);
  brute_partitions(elems, idx + 1, parts, out);
  parts.pop_back();
}

// Filters by explicit rational weights (heavy 1, light 1/(2m)); the library
// decides the same predicate symbolically from (n, m) alone.
std::vector<SetPartition> brute_unstable(MarkSet S, const WeightVector& w) {
  std::vector<std::vector<MarkSet>> all;
  std::vector<MarkSet> scratch;
  brute_partitions(marks_of(S), 0, scratch, all);
  std::vector<SetPartition> out;
  for (const auto& parts : all) {
    bool ok = true;
    for (MarkSet part : parts) {
      const Rat weight = Rat(mark_count(part & w.heavy_set())) +
                         (w.m() ? Rat(mark_count(part & w.light_set()), 2 * w.m()) : Rat(0));
      if (weight > 1) ok = false;
    }
    if (ok) out.push_back(SetPartition::of(parts));
  }
  std::sort(out.begin(), out.end(), partition_less);
  return out;
}

BigInt factorial(std::int64_t v) {
  BigInt out = 1;
  for (std::int64_t i = 2; i <= v; ++i) out *= i;
  return out;
}

}  // namespace

TEST_CASE("multinomial on the stated examples") {
  const std::vector<std::int64_t> a{1, 1, 1};
  CHECK(multinomial(3, a) == 6);
  const std::vector<std::int64_t> b{2, 0, 0, 0, 0};
  CHECK(multinomial(2, b) == 1);
  const std::vector<std::int64_t> c{-1, 2};
  CHECK(multinomial(1, c) == 0);
  CHECK(multinomial(-1, a) == 0);
  const std::vector<std::int64_t> bad{1, 1};
  CHECK_THROWS_AS(multinomial(3, bad), std::invalid_argument);
}

TEST_CASE("multinomial agrees with factorials and their recursion") {
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<int> len(1, 5), entry(0, 4);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::int64_t> parts(len(rng));
    std::int64_t top = 0;
    for (auto& p : parts) {
      p = entry(rng);
      top += p;
    }
    BigInt expected = factorial(top);
    for (std::int64_t p : parts) expected /= factorial(p);
    CHECK(multinomial(top, parts) == expected);
    if (top >= 1) {
      BigInt recursion = 0;
      for (std::size_t j = 0; j < parts.size(); ++j) {
        std::vector<std::int64_t> dec = parts;
        --dec[j];
        recursion += multinomial(top - 1, dec);
      }
      CHECK(multinomial(top, parts) == recursion);
    }
  }
}

TEST_CASE("unstable partitions match the brute-force rational filter") {
  for (int n = 4; n <= 6; ++n) {
    for (int m = 0; m <= n - 2; ++m) {
      const WeightVector w(n, m);
      for (MarkSet S = 1; S <= w.full_set(); ++S) {
        const auto brute = brute_unstable(S, w);
        const auto fast = unstable_partitions(S, w);
        REQUIRE(fast.size() == brute.size());
        CHECK(fast == brute);
      }
    }
  }
}

TEST_CASE("unstable partition counts are Bell numbers of the light part") {
  const std::int64_t bell[] = {1, 1, 2, 5, 15, 52};
  for (int n = 4; n <= 6; ++n) {
    for (int m = 0; m <= n - 2; ++m) {
      const WeightVector w(n, m);
      for (MarkSet S = 1; S <= w.full_set(); ++S) {
        const int lights = mark_count(S & w.light_set());
        CHECK(unstable_partitions(S, w).size() == static_cast<std::size_t>(bell[lights]));
      }
    }
  }
}

TEST_CASE("stated partition examples") {
  const WeightVector w(5, 3);  // (1^2, eps^3)
  CHECK(unstable_partitions(mark_bit(3) | mark_bit(4) | mark_bit(5), w).size() == 5);
  CHECK(unstable_partitions(w.full_set(), w).size() == 5);
  const WeightVector lm(5, 3);
  const auto both_heavy = unstable_partitions(mark_bit(1) | mark_bit(2), lm);
  REQUIRE(both_heavy.size() == 1);
  CHECK(both_heavy[0].parts == std::vector<MarkSet>{mark_bit(1), mark_bit(2)});
}

TEST_CASE("admissibility") {
  const SetPartition p =
      SetPartition::of({mark_bit(1), mark_bit(2) | mark_bit(3), mark_bit(4)});
  CHECK(is_admissible(p, mark_bit(2) | mark_bit(3) | mark_bit(4)));
  CHECK_FALSE(is_admissible(p, mark_bit(1) | mark_bit(2)));
  CHECK(is_admissible(p, p.ground));
}

TEST_CASE("p-sequences") {
  {
    const PsiExponents k({2, 1, 1});
    const SetPartition p = SetPartition::of({mark_bit(1), mark_bit(2) | mark_bit(3)});
    CHECK(p_sequence(k, p) == std::vector<std::int64_t>{2, 1});
  }
  {
    const PsiExponents k({0, 0, 0, 0});
    const SetPartition p =
        SetPartition::of({mark_bit(1), mark_bit(2), mark_bit(3), mark_bit(4)});
    CHECK(p_sequence(k, p) == std::vector<std::int64_t>{0, 0, 0, 0});
  }
  {
    const PsiExponents k({2, 0, 0, 0, 0});
    const SetPartition p = SetPartition::of(
        {mark_bit(1), mark_bit(2), mark_bit(3) | mark_bit(4) | mark_bit(5)});
    CHECK(p_sequence(k, p) == std::vector<std::int64_t>{2, 0, -2});
  }
}

TEST_CASE("p-sequence entries sum to l(P) - |S| + sum k") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> entry(0, 3);
  const WeightVector w(6, 3);
  for (MarkSet S = 1; S <= w.full_set(); S += 3) {
    std::vector<std::int64_t> k(6, 0);
    for (auto& v : k) v = entry(rng);
    const PsiExponents K(k);
    for (const SetPartition& P : unstable_partitions(S, w)) {
      const auto seq = p_sequence(K, P);
      std::int64_t sum = 0;
      for (auto v : seq) sum += v;
      CHECK(sum == P.length() - mark_count(S) + K.total_over(S));
    }
  }
}

TEST_CASE("tlm on the stated examples") {
  const WeightVector w(5, 3);
  // A single mark is one singleton partition with multinomial 1.
  for (int k4 = 0; k4 <= 3; ++k4) {
    std::vector<std::int64_t> k(5, 0);
    k[3] = k4;
    CHECK(tlm(mark_bit(4), PsiExponents(k), w) == 1);
  }
  // Two heavy marks reduce to a plain multinomial.
  CHECK(tlm(mark_bit(1) | mark_bit(2), PsiExponents({1, 2, 0, 0, 0}), w) == 3);
  // Frozen oracle value (hand-checked and cross-checked against the brute
  // partition enumeration below): S = [5], w = (1^2, eps^3), K = (2,0,...).
  CHECK(tlm(w.full_set(), PsiExponents({2, 0, 0, 0, 0}), w) == 1);
}

TEST_CASE("tlm all-heavy reduction") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> entry(0, 4);
  for (int n = 4; n <= 7; ++n) {
    for (int m = 0; m <= n - 2; ++m) {
      const WeightVector w(n, m);
      for (int trial = 0; trial < 20; ++trial) {
        std::vector<std::int64_t> k(n, 0);
        for (auto& v : k) v = entry(rng);
        const PsiExponents K(k);
        MarkSet S = 0;
        for (int mark = 1; mark <= n - m; ++mark) {
          if (rng() & 1) S |= mark_bit(mark);
        }
        if (S == 0) continue;
        std::vector<std::int64_t> local;
        for (int mark : marks_of(S)) local.push_back(K.at(mark));
        CHECK(tlm(S, K, w) == multinomial(K.total_over(S), local));
      }
    }
  }
}

TEST_CASE("tlm against direct evaluation over brute-forced partitions") {
  std::mt19937 rng(4242);
  std::uniform_int_distribution<int> entry(0, 3);
  for (int n = 4; n <= 6; ++n) {
    for (int m = 0; m <= n - 2; ++m) {
      const WeightVector w(n, m);
      for (int trial = 0; trial < 30; ++trial) {
        const MarkSet S = (rng() % w.full_set()) + 1;
        std::vector<std::int64_t> k(n, 0);
        for (auto& v : k) v = entry(rng);
        const PsiExponents K(k);
        BigInt expected = 0;
        for (const SetPartition& P : brute_unstable(S, w)) {
          const auto seq = p_sequence(K, P);
          std::int64_t top = 0;
          for (auto v : seq) top += v;
          const BigInt term = multinomial(top, seq);
          expected += (mark_count(S) - P.length()) % 2 == 0 ? term : -term;
        }
        CHECK(tlm(S, K, w) == expected);
      }
    }
  }
}

TEST_CASE("tlm restricted to separating partitions") {
  const WeightVector w(5, 3);
  // Heavy t2 or N makes the restriction vacuous.
  for (MarkSet S = 1; S <= w.full_set(); ++S) {
    if (!contains_mark(S, 1) || !contains_mark(S, 3)) continue;
    const PsiExponents K({1, 0, 2, 0, 0});
    CHECK(tlm_restricted(S, K, w, 1, 3) == tlm(S, K, w));
  }
  // S = {3,4,5} all light, K = 0: only the all-singleton partition separates
  // 4 and 5 with a nonzero multinomial.
  const MarkSet S = mark_bit(3) | mark_bit(4) | mark_bit(5);
  CHECK(tlm_restricted(S, PsiExponents({0, 0, 0, 0, 0}), w, 4, 5) == 1);
  CHECK_THROWS_AS(tlm_restricted(S, PsiExponents({0, 0, 0, 0, 0}), w, 4, 4),
                  std::invalid_argument);
}

TEST_CASE("weight vector canonicalization") {
  CHECK(WeightVector::from_weights({Rat(1), Rat(1), Rat(3, 4), Rat(1, 2)}).m() == 0);
  const WeightVector lm =
      WeightVector::from_weights({Rat(1), Rat(1), Rat(1, 3), Rat(1, 3), Rat(1, 4)});
  CHECK(lm.n() == 5);
  CHECK(lm.m() == 3);
  // Light total not below 1.
  CHECK_THROWS_AS(WeightVector::from_weights({Rat(1), Rat(1), Rat(1, 2), Rat(1, 2)}),
                  std::invalid_argument);
  // Heavies must precede lights.
  CHECK_THROWS_AS(WeightVector::from_weights({Rat(1, 4), Rat(1), Rat(1), Rat(1, 4)}),
                  std::invalid_argument);
  // Neither heavy nor jointly light.
  CHECK_THROWS_AS(
      WeightVector::from_weights({Rat(1), Rat(1), Rat(3, 5), Rat(3, 5), Rat(1, 5)}),
      std::invalid_argument);
  CHECK_THROWS_AS(WeightVector(5, 4), std::invalid_argument);
  CHECK_THROWS_AS(WeightVector(3, 0), std::invalid_argument);
}
