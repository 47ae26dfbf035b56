#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tropsi/divisors.hpp"
#include "tropsi/json_io.hpp"
#include "tropsi/psi.hpp"

using namespace tropsi;

namespace {

MarkSet set_of(std::initializer_list<int> marks) {
  MarkSet s = 0;
  for (int m : marks) s |= mark_bit(m);
  return s;
}

Split split_of(std::initializer_list<int> marks, int n) {
  return Split::from_side(set_of(marks), n);
}

}  // namespace

TEST_CASE("phi_I ray values") {
  const auto f = phi_I(split_of({4, 5}, 5), 5);
  CHECK(f.value_on_ray(split_of({4, 5}, 5)) == 1);
  CHECK(f.value_on_ray(split_of({1, 2}, 5)) == 0);
  // phi_I = phi_{I^c} by the canonical-side identification.
  CHECK(f.value_on_ray(split_of({1, 2, 3}, 5)) == 1);
  CHECK_FALSE(f.positive_rep_mark.has_value());
}

TEST_CASE("V_{N,w} membership and K(N,w)") {
  {
    const WeightVector w(5, 2);
    const auto v4 = V_set(4, w);
    CHECK(v4.size() == 6);
    CHECK(K_constant(4, w) == 6);
    CHECK(K_constant(1, w) == 5);  // C(4,2) - C(2,2)
  }
  {
    const WeightVector w(5, 3);  // Losev-Manin
    CHECK(K_constant(1, w) == 3);       // m
    CHECK(K_constant(3, w) == 4);       // 2m - 2
    // V_{N,w} for light N consists of the heavy-light pairs avoiding N.
    const auto v3 = V_set(3, w);
    REQUIRE(v3.size() == 4);
    for (const Split& s : v3) {
      const MarkSet two = s.two_element_side(5);
      CHECK(mark_count(two & w.heavy_set()) == 1);
      CHECK_FALSE(contains_mark(two, 3));
    }
  }
  for (int n = 4; n <= 6; ++n) {
    for (int m = 0; m <= n - 2; ++m) {
      const WeightVector w(n, m);
      for (int N = 1; N <= n; ++N) {
        CHECK(K_constant(N, w) == static_cast<std::int64_t>(V_set(N, w).size()));
      }
    }
  }
}

TEST_CASE("f_{N,w} ray table") {
  const WeightVector ones(5, 0);
  const auto f = f_N_w(4, ones);
  CHECK(f.value_on_ray(split_of({1, 2}, 5)) == 1);
  CHECK(f.value_on_ray(split_of({3, 4}, 5)) == 0);
  CHECK(f.positive_rep_mark == 4);
  // Losev-Manin: V_{N,w} for light N is the set of heavy-light pairs.
  const WeightVector lm(6, 4);
  const auto g = f_N_w(3, lm);
  CHECK(g.value_on_ray(split_of({2, 4}, 6)) == 1);
  CHECK(g.value_on_ray(split_of({2, 3}, 6)) == 0);
  CHECK(g.value_on_ray(split_of({2, 4, 5}, 6)) == 0);
}

TEST_CASE("positive representations") {
  const WeightVector w(5, 2);
  const AmbientSpace space(w);
  // A member of V_{N,w} represents itself.
  {
    const auto rep = positive_representation(split_of({2, 3}, 5), 4, w, space);
    REQUIRE(rep.size() == 1);
    CHECK(rep.at(split_of({2, 3}, 5)) == 1);
  }
  // A worked case with a 3-element support side: v_34 = v_12 + v_15 + v_25.
  {
    const auto rep = positive_representation(split_of({3, 4}, 5), 4, w, space);
    REQUIRE(rep.size() == 3);
    CHECK(rep.at(split_of({1, 2}, 5)) == 1);
    CHECK(rep.at(split_of({1, 5}, 5)) == 1);
    CHECK(rep.at(split_of({2, 5}, 5)) == 1);
    // Verify the equation itself in R_w.
    Vector sum = space.zero();
    for (const auto& [s, c] : rep) sum += c * space.ray_vector(s);
    CHECK(sum == space.ray_vector(split_of({3, 4}, 5)));
  }
  // Exhaustive existence and uniqueness on n = 5 for both weight families.
  for (int m : {0, 2}) {
    const WeightVector w5(5, m);
    const AmbientSpace space5(w5);
    for (const Split& I : valid_splits(w5)) {
      for (int N = 1; N <= 5; ++N) {
        CHECK_NOTHROW(positive_representation(I, N, w5, space5));
      }
    }
  }
}

TEST_CASE("boundary divisor D_45 on M_{0,5}") {
  const Cycle d45 = boundary_divisor(split_of({4, 5}, 5), 5);
  const WeightVector ones(5, 0);
  Cycle expected(ones, 1);
  expected.add(CombinatorialType(5, {split_of({1, 2}, 5)}), 1);
  expected.add(CombinatorialType(5, {split_of({1, 3}, 5)}), 1);
  expected.add(CombinatorialType(5, {split_of({2, 3}, 5)}), 1);
  expected.add(CombinatorialType(5, {split_of({4, 5}, 5)}), -1);
  CHECK(d45 == expected);
}

TEST_CASE("boundary divisor on M_{0,4} is the origin with weight 1") {
  // The only codimension-1 cone of M_{0,4} is the star; the +-1 rule puts
  // weight +1 on it for every 2-element I (I is a union of two singletons).
  for (auto marks : {std::initializer_list<int>{2, 3}, {2, 4}, {3, 4}}) {
    const Cycle d = boundary_divisor(split_of(marks, 4), 4);
    REQUIRE(d.entries.size() == 1);
    CHECK(d.entries.begin()->first.edge_count() == 0);
    CHECK(d.entries.begin()->second == 1);
  }
}

TEST_CASE("boundary divisors agree with Weil divisors of phi_I") {
  for (int n = 4; n <= 5; ++n) {
    const WeightVector classical(n, 0);
    const AmbientSpace space(classical);
    const Cycle fan = full_fan(classical);
    for (const Split& I : valid_splits(classical)) {
      CHECK(boundary_divisor(I, n) == weil_divisor(phi_I(I, n), fan, space));
    }
  }
}

TEST_CASE("div(f_{N,w}) realizes K(N,w) psi_{N,w}") {
  {
    const WeightVector w(5, 2);
    const AmbientSpace space(w);
    const Cycle divisor = weil_divisor(f_N_w(4, w), full_fan(w), space);
    Cycle expected(w, 1);
    expected.add(CombinatorialType(5, {split_of({1, 5}, 5)}), 6);
    expected.add(CombinatorialType(5, {split_of({2, 5}, 5)}), 6);
    expected.add(CombinatorialType(5, {split_of({3, 5}, 5)}), 6);
    CHECK(divisor == expected);
  }
  // Light mark on a Losev-Manin space: both sides empty.
  {
    const WeightVector w(5, 3);
    const AmbientSpace space(w);
    const Cycle divisor = weil_divisor(f_N_w(3, w), full_fan(w), space);
    CHECK(divisor.empty());
    CHECK(psi_class(3, w).empty());
  }
  for (int n = 4; n <= 5; ++n) {
    for (int m = 0; m <= n - 2; ++m) {
      const WeightVector w(n, m);
      const AmbientSpace space(w);
      const Cycle fan = full_fan(w);
      for (int N = 1; N <= n; ++N) {
        if (n == 4 && m == 2 && !w.is_heavy(N)) continue;  // see the anomaly case below
        CHECK(weil_divisor(f_N_w(N, w), fan, space) ==
              psi_class(N, w).scaled(K_constant(N, w)));
      }
    }
  }
}

TEST_CASE("the divisor realization degenerates on the smallest Losev-Manin space") {
  // For n = 4, m = 2, a light mark N has the same ray table as a heavy one:
  // every ray of the line fan carries a 2-element side avoiding N.  The Weil
  // divisor is therefore 2 * {0}, although psi_{N,w} is empty.  This is the
  // one configuration where the realization identity has no solution: no
  // ray-value function on a line with two unit values can have an empty
  // divisor.
  const WeightVector w(4, 2);
  const AmbientSpace space(w);
  const Cycle fan = full_fan(w);
  for (int N : {3, 4}) {
    CHECK(psi_class(N, w).empty());
    const Cycle divisor = weil_divisor(f_N_w(N, w), fan, space);
    REQUIRE(divisor.entries.size() == 1);
    CHECK(divisor.entries.begin()->first.edge_count() == 0);
    CHECK(divisor.entries.begin()->second == 2);
  }
  // The heavy marks on the same space do satisfy the identity.
  for (int N : {1, 2}) {
    CHECK(weil_divisor(f_N_w(N, w), fan, space) ==
          psi_class(N, w).scaled(K_constant(N, w)));
  }
}

TEST_CASE("Weil divisors of f_{N,w} and phi_I are balanced") {
  for (int n = 4; n <= 5; ++n) {
    for (int m = 0; m <= n - 2; ++m) {
      const WeightVector w(n, m);
      const AmbientSpace space(w);
      const Cycle fan = full_fan(w);
      for (int N = 1; N <= n; ++N) {
        CHECK(check_balancing(weil_divisor(f_N_w(N, w), fan, space), space).balanced);
      }
    }
    const WeightVector classical(n, 0);
    const AmbientSpace space(classical);
    const Cycle fan = full_fan(classical);
    for (const Split& I : valid_splits(classical)) {
      CHECK(check_balancing(weil_divisor(phi_I(I, n), fan, space), space).balanced);
    }
  }
}

TEST_CASE("weil divisor of the zero function is empty") {
  const WeightVector w(5, 2);
  const AmbientSpace space(w);
  RationalFunctionOnFan zero{w, {}, std::nullopt};
  for (const Split& s : valid_splits(w)) zero.ray_values.emplace(s, Rat(0));
  CHECK(weil_divisor(zero, full_fan(w), space).empty());
}

TEST_CASE("rational function JSON") {
  RationalFunctionOnFan f{WeightVector(5, 0), {}, std::nullopt};
  f.ray_values.emplace(Split::from_side(mark_bit(2) | mark_bit(3), 5), Rat(1, 2));
  f.ray_values.emplace(Split::from_side(mark_bit(4) | mark_bit(5), 5), Rat(3));
  const auto j = function_to_json(f);
  CHECK(j.at("rays").at("2,3") == "1/2");
  CHECK(j.at("rays").at("4,5") == "3");
}

TEST_CASE("weil divisor error paths") {
  const WeightVector w(5, 0);
  const AmbientSpace space(w);
  // Undefined ray value.
  RationalFunctionOnFan partial{w, {}, std::nullopt};
  CHECK_THROWS_AS(weil_divisor(partial, full_fan(w), space), std::invalid_argument);
  // Unbalanced input cycle is reported as a decomposition failure.
  Cycle broken = full_fan(w);
  broken.entries.erase(broken.entries.begin());
  CHECK_THROWS_AS(weil_divisor(phi_I(split_of({2, 3}, 5), 5), broken, space), std::logic_error);
}
