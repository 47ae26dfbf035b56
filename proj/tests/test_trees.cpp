#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "tropsi/trees.hpp"

using namespace tropsi;

namespace {

MarkSet set_of(std::initializer_list<int> marks) {
  MarkSet s = 0;
  for (int m : marks) s |= mark_bit(m);
  return s;
}

std::int64_t double_factorial(int v) {
  std::int64_t out = 1;
  for (int i = v; i > 1; i -= 2) out *= i;
  return out;
}

}  // namespace

TEST_CASE("split canonicalization and compatibility") {
  const Split a = Split::from_side(set_of({1, 4, 5}), 5);
  CHECK(a.side() == set_of({2, 3}));  // canonical side avoids mark 1
  CHECK(a.complement(5) == set_of({1, 4, 5}));
  CHECK(a.two_element_side(5) == set_of({2, 3}));
  CHECK_THROWS_AS(Split::from_side(set_of({2}), 5), std::invalid_argument);
  CHECK_THROWS_AS(Split::from_side(set_of({2, 3, 4, 5}), 5), std::invalid_argument);

  const auto s = [](std::initializer_list<int> m) { return Split::from_side(set_of(m), 5); };
  CHECK(splits_compatible(s({2, 3}), s({4, 5}), 5));      // disjoint
  CHECK(splits_compatible(s({2, 3}), s({2, 3, 4}), 5));   // nested
  CHECK_FALSE(splits_compatible(s({2, 3}), s({3, 4}), 5));  // crossing
}

TEST_CASE("vertex data of simple types") {
  const int n = 5;
  {
    const CombinatorialType star(n, {});
    const auto vs = star.vertex_data();
    REQUIRE(vs.size() == 1);
    CHECK(vs[0].valence == 0);
    CHECK(vs[0].marks == full_mark_set(n));
    CHECK(vs[0].parts.size() == 5);  // all singletons
  }
  {
    const Split split = Split::from_side(set_of({4, 5}), n);
    const CombinatorialType two(n, {split});
    const auto vs = two.vertex_data();
    REQUIRE(vs.size() == 2);
    // Root holds {1,2,3} and sees the far side {4,5} as one part.
    CHECK(vs[0].key == 0);
    CHECK(vs[0].valence == 1);
    CHECK(vs[0].marks == set_of({1, 2, 3}));
    CHECK(vs[0].parts == std::vector<MarkSet>{set_of({1}), set_of({2}), set_of({3}),
                                              set_of({4, 5})});
    CHECK(vs[1].valence == 1);
    CHECK(vs[1].marks == set_of({4, 5}));
  }
}

TEST_CASE("caterpillar vertex data") {
  // 1,2 -- 5,6 -- 3,4 on six marks: splits {3,4} and {3,4,5,6}.
  const int n = 6;
  const CombinatorialType t(
      n, {Split::from_side(set_of({3, 4}), n), Split::from_side(set_of({3, 4, 5, 6}), n)});
  const auto vs = t.vertex_data();
  REQUIRE(vs.size() == 3);
  CHECK(vs[0].marks == set_of({1, 2}));
  CHECK(vs[0].valence == 1);
  // Middle vertex: split {3,4,5,6} with child {3,4}.
  CHECK(vs[2].key == set_of({3, 4, 5, 6}));
  CHECK(vs[2].marks == set_of({5, 6}));
  CHECK(vs[2].valence == 2);
  CHECK(vs[2].parts ==
        std::vector<MarkSet>{set_of({1, 2}), set_of({3, 4}), set_of({5}), set_of({6})});
}

TEST_CASE("w-stability") {
  const WeightVector w32(5, 2);  // (1^3, eps^2)
  CHECK_FALSE(is_w_stable(CombinatorialType(5, {Split::from_side(set_of({4, 5}), 5)}), w32));
  CHECK(is_w_stable(CombinatorialType(5, {Split::from_side(set_of({1, 2}), 5)}), w32));
  const WeightVector ones(5, 0);
  for (int codim = 0; codim <= 2; ++codim) {
    for (const CombinatorialType& t : enumerate_types(ones, codim)) {
      CHECK(is_w_stable(t, ones));
    }
  }
}

TEST_CASE("enumeration counts") {
  // Maximal cones of M_{0,n}: (2n-5)!! for the all-ones weight.
  for (int n = 4; n <= 7; ++n) {
    CHECK(enumerate_types(WeightVector(n, 0), 0).size() ==
          static_cast<std::size_t>(double_factorial(2 * n - 5)));
  }
  const WeightVector ones5(5, 0);
  CHECK(enumerate_types(ones5, 2).size() == 1);    // the star
  CHECK(enumerate_types(ones5, 1).size() == 10);   // Petersen vertices
  const WeightVector lm5(5, 3);
  CHECK(enumerate_types(lm5, 1).size() == 6);      // hexagon rays
  CHECK(enumerate_types(lm5, 0).size() == 6);      // hexagon edges
  CHECK_THROWS_AS(enumerate_types(ones5, 3), std::invalid_argument);
}

TEST_CASE("every maximal type is trivalent") {
  for (int n = 4; n <= 6; ++n) {
    for (int m = 0; m <= n - 2; ++m) {
      for (const CombinatorialType& t : enumerate_types(WeightVector(n, m), 0)) {
        for (const VertexLocalData& v : t.vertex_data()) {
          CHECK(v.degree() == 3);
        }
      }
    }
  }
}

TEST_CASE("types are stable and rebuild to identical vertex data") {
  for (int n = 4; n <= 6; ++n) {
    for (int m = 0; m <= n - 2; ++m) {
      const WeightVector w(n, m);
      for (int codim = 0; codim <= n - 3; ++codim) {
        for (const CombinatorialType& t : enumerate_types(w, codim)) {
          CHECK(is_w_stable(t, w));
          const CombinatorialType rebuilt(t.n(), t.splits());
          CHECK(rebuilt == t);
          CHECK(rebuilt.vertex_data().size() == t.vertex_data().size());
          // Local partitions tile [n].
          for (const VertexLocalData& v : t.vertex_data()) {
            MarkSet u = 0;
            int total = 0;
            for (MarkSet part : v.parts) {
              u |= part;
              total += mark_count(part);
            }
            CHECK(u == full_mark_set(n));
            CHECK(total == n);
            CHECK(static_cast<int>(v.parts.size()) == v.degree());
          }
        }
      }
    }
  }
}

TEST_CASE("enumeration is closed under single contractions") {
  for (int n = 4; n <= 6; ++n) {
    for (int m = 0; m <= n - 2; ++m) {
      const WeightVector w(n, m);
      for (int codim = 1; codim <= n - 3; ++codim) {
        const auto coarser = enumerate_types(w, codim);
        std::set<CombinatorialType> contracted;
        for (const CombinatorialType& t : enumerate_types(w, codim - 1)) {
          for (const Split& s : t.splits()) contracted.insert(contract_edge(t, s));
        }
        CHECK(contracted == std::set<CombinatorialType>(coarser.begin(), coarser.end()));
      }
    }
  }
}

TEST_CASE("contraction merges vertex degrees") {
  const WeightVector w(6, 0);
  for (const CombinatorialType& t : enumerate_types(w, 0)) {
    for (const Split& s : t.splits()) {
      const CombinatorialType contracted = contract_edge(t, s);
      CHECK(contracted.codim() == t.codim() + 1);
      // Exactly one vertex of the contraction is 4-valent.
      int fours = 0;
      for (const VertexLocalData& v : contracted.vertex_data()) {
        if (v.degree() == 4) ++fours;
      }
      CHECK(fours == 1);
    }
  }
  CHECK_THROWS_AS(contract_edge(CombinatorialType(6, {}), Split::from_side(set_of({2, 3}), 6)),
                  std::invalid_argument);
}

TEST_CASE("expansions of a codim-1 type are its stable pairings") {
  {
    const WeightVector ones(5, 0);
    const CombinatorialType ray(5, {Split::from_side(set_of({1, 2}), 5)});
    CHECK(expansions(ray, ones).size() == 3);
  }
  {
    const WeightVector w(5, 2);
    const CombinatorialType ray(5, {Split::from_side(set_of({1, 2}), 5)});
    const auto exp = expansions(ray, w);
    CHECK(exp.size() == 2);  // the pairing {4,5} is not w-stable
    for (const auto& [refined, split] : exp) {
      CHECK_FALSE(split.side() == set_of({4, 5}));
      CHECK(refined.edge_count() == 2);
    }
  }
  // Expansion count equals the number of enumerated types one level finer
  // that contain the type.
  const WeightVector w(6, 2);
  const auto finer = enumerate_types(w, 1);
  for (const CombinatorialType& t : enumerate_types(w, 2)) {
    std::size_t containing = 0;
    for (const CombinatorialType& big : finer) {
      bool contains = true;
      for (const Split& s : t.splits()) {
        if (!big.has_split(s)) contains = false;
      }
      if (contains) ++containing;
    }
    CHECK(expansions(t, w).size() == containing);
  }
}
