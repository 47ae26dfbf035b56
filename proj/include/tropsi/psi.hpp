#pragma once

#include <span>
#include <vector>

#include "tropsi/divisors.hpp"
#include "tropsi/fan.hpp"
#include "tropsi/partitions.hpp"
#include "tropsi/weights.hpp"

namespace tropsi {

/// A psi-class intersection query: prod_i psi_{i,w}^{k_i}.
struct PsiProductQuery {
  WeightVector w;
  PsiExponents exponents;

  PsiProductQuery(WeightVector weights, PsiExponents k);

  int codim() const { return static_cast<int>(exponents.total()); }
};

/// psi_{N,w} by its combinatorial characterisation: codimension-1 types whose
/// unique 4-valent vertex carries N; for light N the vertex must not carry a
/// second light mark.  All weights 1.
Cycle psi_class(int N, const WeightVector& w);

/// psi_{N,w} as a pushforward: psi_N on M_{0,n}^trop minus the boundary
/// divisors D_S over all S in C_w^2 containing N, pushed along the
/// contraction to M_{0,w}^trop.  Serves as the definitional oracle.
Cycle psi_class_pushforward(int N, const WeightVector& w);

/// Closed-form intersection product: the types of codimension sum(k) whose
/// every vertex satisfies val(v) + |marks(v)| = 3 + sum of k over marks(v),
/// weighted by the product of the tropical local multiplicities.
Cycle intersect_product(const PsiProductQuery& q);

/// One intersection step Z . psi_{N,w} via the min-formula: the weight of a
/// codimension-1 face tau is min over v_S in V_{N,w} of the total weight of
/// the cones whose primitive-generator split contains S on its N-free side.
Cycle intersect_step(const Cycle& z, int N);

/// Recursive divisor oracle: iterates intersect_step over the factor list
/// (mark N repeated k_N times, ascending).
Cycle intersect_recursive(const PsiProductQuery& q);

/// Same, with an explicit factor order (for order-independence checks).
Cycle intersect_recursive_ordered(const PsiProductQuery& q, std::span<const int> factors);

/// Top-degree closed form: sum over totally w-unstable partitions P of [n] of
/// (-1)^(n - l(P)) * multinomial(l(P) - 3, K(P)); requires sum(k) = n-3.
BigInt degree(const PsiProductQuery& q);

}  // namespace tropsi
