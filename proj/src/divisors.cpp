#include "tropsi/divisors.hpp"

#include <algorithm>
#include <stdexcept>

namespace tropsi {

Rat RationalFunctionOnFan::value_on_ray(Split s) const {
  const auto it = ray_values.find(s);
  if (it == ray_values.end()) {
    throw std::invalid_argument("rational function undefined on ray " + s.to_string());
  }
  return it->second;
}

RationalFunctionOnFan phi_I(Split I, int n) {
  const WeightVector classical(n, 0);
  RationalFunctionOnFan f{classical, {}, std::nullopt};
  for (const Split& s : valid_splits(classical)) {
    f.ray_values.emplace(s, s == I ? Rat(1) : Rat(0));
  }
  return f;
}

std::vector<Split> V_set(int N, const WeightVector& w) {
  std::vector<Split> out;
  for (const Split& s : valid_splits(w)) {
    if (s.pair_avoiding(N, w.n()) != 0) out.push_back(s);
  }
  return out;
}

std::int64_t K_constant(int N, const WeightVector& w) {
  const auto choose2 = [](std::int64_t k) { return k * (k - 1) / 2; };
  const std::int64_t n = w.n(), m = w.m();
  if (n - m == 2) return w.is_heavy(N) ? m : 2 * m - 2;
  return w.is_heavy(N) ? choose2(n - 1) - choose2(m) : choose2(n - 1) - choose2(m - 1);
}

RationalFunctionOnFan f_N_w(int N, const WeightVector& w) {
  if (N < 1 || N > w.n()) throw std::invalid_argument("f_N_w: mark out of range");
  RationalFunctionOnFan f{w, {}, N};
  const std::vector<Split> members = V_set(N, w);
  for (const Split& s : valid_splits(w)) {
    const bool in_v = std::find(members.begin(), members.end(), s) != members.end();
    f.ray_values.emplace(s, in_v ? Rat(1) : Rat(0));
  }
  return f;
}

std::map<Split, Rat> positive_representation(Split I, int N, const WeightVector& w,
                                             const AmbientSpace& space) {
  const int n = w.n();
  // Support rule: coefficients live on the side of I not containing N.
  const MarkSet support_side = contains_mark(I.side(), N) ? I.complement(n) : I.side();
  const std::vector<Split> members = V_set(N, w);
  std::vector<Split> candidates;
  for (const Split& s : members) {
    const MarkSet two = s.pair_avoiding(N, n);
    if ((two & support_side) == two) candidates.push_back(s);
  }
  linalg::Matrix columns;
  for (const Split& s : candidates) columns.push_back(space.ray_vector(s).coords());
  const auto solution = linalg::solve_columns(columns, space.ray_vector(I).coords());
  if (!solution) {
    throw std::logic_error("positive representation infeasible for " + I.to_string());
  }
  if (!solution->kernel.empty()) {
    throw std::logic_error("positive representation not unique for " + I.to_string());
  }
  std::map<Split, Rat> rep;
  bool has_zero = candidates.size() < members.size();
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const Rat& c = solution->particular[i];
    if (c < 0) {
      throw std::logic_error("positive representation has a negative coefficient for " +
                             I.to_string());
    }
    if (c == 0) has_zero = true;
    rep.emplace(candidates[i], c);
  }
  if (!has_zero) {
    throw std::logic_error("positive representation has no zero coefficient for " + I.to_string());
  }
  return rep;
}

namespace {

BigInt to_integer(const Rat& value, const char* what) {
  if (denominator(value) != 1) {
    throw std::logic_error(std::string(what) + ": expected an integer weight");
  }
  return numerator(value);
}

// Weight of f on the face tau for the cone-wise linear strategy: evaluate the
// balanced sum by exact decomposition in the ray basis of tau.
Rat face_weight_linear(const RationalFunctionOnFan& f, const AmbientSpace& space,
                       const CombinatorialType& face,
                       const std::vector<std::pair<CombinatorialType, Split>>& stars,
                       const Cycle& z) {
  Rat first = 0;
  std::vector<Rat> sum(space.coord_count(), Rat(0));
  for (const auto& [cone, extra] : stars) {
    const Rat weight(z.entries.at(cone));
    first += weight * f.value_on_ray(extra);
    const std::vector<Rat> ray = space.raw_ray_vector(extra);
    for (std::size_t c = 0; c < sum.size(); ++c) sum[c] += weight * ray[c];
  }
  const Vector reduced = space.reduce(std::move(sum));
  linalg::Matrix columns;
  std::vector<Split> rays(face.splits());
  for (const Split& s : rays) columns.push_back(space.ray_vector(s).coords());
  const auto solution = linalg::solve_columns(columns, reduced.coords());
  if (!solution) {
    throw std::logic_error("weil_divisor: balanced sum not in the span of face " +
                           face.to_string());
  }
  if (!solution->kernel.empty()) {
    throw std::logic_error("weil_divisor: face rays are linearly dependent at " +
                           face.to_string());
  }
  Rat second = 0;
  for (std::size_t i = 0; i < rays.size(); ++i) {
    second += solution->particular[i] * f.value_on_ray(rays[i]);
  }
  return first - second;
}

// Weight of f_{N,w} on the face tau: both terms of the divisor formula are
// evaluated through positive representations in V_{N,w}; the canonical
// representative of the balanced sum is reached by subtracting
// min_S(total_S) * sum_{V_{N,w}} v_S = 0.
Rat face_weight_positive_rep(const RationalFunctionOnFan& f, const AmbientSpace& space,
                             const std::vector<std::pair<CombinatorialType, Split>>& stars,
                             const Cycle& z) {
  const int N = *f.positive_rep_mark;
  const std::vector<Split> members = V_set(N, f.w);
  std::map<Split, Rat> totals;
  for (const Split& s : members) totals.emplace(s, Rat(0));
  Rat first = 0;
  for (const auto& [cone, extra] : stars) {
    const Rat weight(z.entries.at(cone));
    const std::map<Split, Rat> rep = positive_representation(extra, N, f.w, space);
    for (const auto& [s, c] : rep) {
      first += weight * c * f.value_on_ray(s);
      totals.at(s) += weight * c;
    }
  }
  Rat minimum;
  bool have_min = false;
  for (const auto& [s, total] : totals) {
    if (!have_min || total < minimum) {
      minimum = total;
      have_min = true;
    }
  }
  Rat second = 0;
  for (const auto& [s, total] : totals) second += (total - minimum) * f.value_on_ray(s);
  return first - second;
}

}  // namespace

Cycle weil_divisor(const RationalFunctionOnFan& f, const Cycle& z, const AmbientSpace& space) {
  if (!(f.w == z.w)) throw std::invalid_argument("weil_divisor: function carrier mismatch");
  Cycle out(z.w, z.dim - 1);
  for (const auto& [face, stars] : codim1_faces(z)) {
    const Rat weight = f.positive_rep_mark
                           ? face_weight_positive_rep(f, space, stars, z)
                           : face_weight_linear(f, space, face, stars, z);
    out.add(face, to_integer(weight, "weil_divisor"));
  }
  return out;
}

Cycle boundary_divisor(Split I, int n) {
  const WeightVector classical(n, 0);
  Cycle out(classical, n - 4);
  for (const CombinatorialType& t : enumerate_types(classical, 1)) {
    const std::vector<VertexLocalData> vertices = t.vertex_data();
    const VertexLocalData* four = nullptr;
    for (const VertexLocalData& v : vertices) {
      if (v.degree() == 4) {
        if (four) throw std::logic_error("codim-1 type with two 4-valent vertices");
        four = &v;
      }
    }
    if (!four) throw std::logic_error("codim-1 type without a 4-valent vertex");
    const std::vector<MarkSet>& parts = four->parts;
    int weight = 0;
    for (std::size_t i = 0; i < parts.size() && weight == 0; ++i) {
      if (parts[i] == I.side() || parts[i] == I.complement(n)) weight = -1;
      for (std::size_t j = i + 1; j < parts.size() && weight == 0; ++j) {
        if ((parts[i] | parts[j]) == I.side() || (parts[i] | parts[j]) == I.complement(n)) {
          weight = 1;
        }
      }
    }
    out.add(t, weight);
  }
  return out;
}

}  // namespace tropsi
