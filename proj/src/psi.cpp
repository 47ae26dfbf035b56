#include "tropsi/psi.hpp"

#include <stdexcept>

namespace tropsi {

PsiProductQuery::PsiProductQuery(WeightVector weights, PsiExponents k)
    : w(std::move(weights)), exponents(std::move(k)) {
  if (exponents.n() != w.n()) {
    throw std::invalid_argument("psi query needs one exponent per mark");
  }
  if (exponents.total() > w.n() - 3) {
    throw std::invalid_argument("psi query codimension exceeds n-3");
  }
}

namespace {

const VertexLocalData& unique_four_valent_vertex(const std::vector<VertexLocalData>& vertices,
                                                 const CombinatorialType& t) {
  const VertexLocalData* four = nullptr;
  for (const VertexLocalData& v : vertices) {
    if (v.degree() == 4) {
      if (four) throw std::logic_error("codim-1 type with two 4-valent vertices: " + t.to_string());
      four = &v;
    }
  }
  if (!four) throw std::logic_error("codim-1 type without a 4-valent vertex: " + t.to_string());
  return *four;
}

}  // namespace

Cycle psi_class(int N, const WeightVector& w) {
  if (N < 1 || N > w.n()) throw std::invalid_argument("psi_class: mark out of range");
  Cycle out(w, w.n() - 4);
  for (const CombinatorialType& t : enumerate_types(w, 1)) {
    const std::vector<VertexLocalData> vertices = t.vertex_data();
    const VertexLocalData& v = unique_four_valent_vertex(vertices, t);
    if (!contains_mark(v.marks, N)) continue;
    if (w.is_light(N) && mark_count(v.marks & w.light_set()) >= 2) continue;
    out.entries.emplace(t, 1);
  }
  return out;
}

Cycle psi_class_pushforward(int N, const WeightVector& w) {
  const WeightVector classical(w.n(), 0);
  Cycle combined = psi_class(N, classical);
  if (w.is_light(N)) {
    // C_w^2: the mark sets of weight <= 1 and size >= 2, i.e. the all-light
    // subsets of size >= 2.  Subtract D_S for every member containing N.
    const MarkSet lights = w.light_set();
    for (MarkSet S = lights; S != 0; S = (S - 1) & lights) {
      if (!contains_mark(S, N) || mark_count(S) < 2) continue;
      const Cycle d = boundary_divisor(Split::from_side(S, w.n()), w.n());
      for (const auto& [t, weight] : d.entries) combined.add(t, -weight);
    }
  }
  return pushforward_cycle(combined, w);
}

Cycle intersect_product(const PsiProductQuery& q) {
  const WeightVector& w = q.w;
  Cycle out(w, w.n() - 3 - q.codim());
  for (const CombinatorialType& t : enumerate_types(w, q.codim())) {
    BigInt weight = 1;
    bool admissible = true;
    for (const VertexLocalData& v : t.vertex_data()) {
      if (v.degree() != 3 + q.exponents.total_over(v.marks)) {
        admissible = false;
        break;
      }
    }
    if (!admissible) continue;
    for (const VertexLocalData& v : t.vertex_data()) {
      weight *= tlm(v.marks, q.exponents, w);
      if (weight == 0) break;
    }
    out.add(t, weight);
  }
  return out;
}

Cycle intersect_step(const Cycle& z, int N) {
  const WeightVector& w = z.w;
  const std::vector<Split> members = V_set(N, w);
  Cycle out(w, z.dim - 1);
  for (const auto& [face, stars] : codim1_faces(z)) {
    BigInt minimum = 0;
    bool have_min = false;
    for (const Split& s : members) {
      const MarkSet pair = s.pair_avoiding(N, w.n());
      BigInt total = 0;
      for (const auto& [cone, extra] : stars) {
        // A_{sigma/tau}: the side of the extra split not containing N.
        const MarkSet side = contains_mark(extra.side(), N) ? extra.complement(w.n())
                                                            : extra.side();
        if ((pair & side) == pair) total += z.entries.at(cone);
      }
      if (!have_min || total < minimum) {
        minimum = total;
        have_min = true;
      }
    }
    if (have_min) out.add(face, minimum);
  }
  return out;
}

Cycle intersect_recursive_ordered(const PsiProductQuery& q, std::span<const int> factors) {
  std::int64_t count = 0;
  std::vector<std::int64_t> seen(q.w.n(), 0);
  for (int N : factors) {
    if (N < 1 || N > q.w.n()) throw std::invalid_argument("factor mark out of range");
    ++seen[N - 1];
    ++count;
  }
  if (count != q.codim()) throw std::invalid_argument("factor list does not match exponents");
  for (int i = 0; i < q.w.n(); ++i) {
    if (seen[i] != q.exponents.k[i]) {
      throw std::invalid_argument("factor list does not match exponents");
    }
  }
  Cycle z = full_fan(q.w);
  for (int N : factors) z = intersect_step(z, N);
  return z;
}

Cycle intersect_recursive(const PsiProductQuery& q) {
  std::vector<int> factors;
  for (int mark = 1; mark <= q.w.n(); ++mark) {
    for (std::int64_t i = 0; i < q.exponents.at(mark); ++i) factors.push_back(mark);
  }
  return intersect_recursive_ordered(q, factors);
}

BigInt degree(const PsiProductQuery& q) {
  const WeightVector& w = q.w;
  if (q.codim() != w.n() - 3) {
    throw std::invalid_argument("degree requires exponents summing to n-3");
  }
  BigInt total = 0;
  for (const SetPartition& P : unstable_partitions(w.full_set(), w)) {
    const std::vector<std::int64_t> seq = p_sequence(q.exponents, P);
    const BigInt term = multinomial(P.length() - 3, seq);
    if ((w.n() - P.length()) % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

}  // namespace tropsi
