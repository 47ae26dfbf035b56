#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tropsi/linalg.hpp"
#include "tropsi/marks.hpp"
#include "tropsi/numbers.hpp"
#include "tropsi/trees.hpp"
#include "tropsi/weights.hpp"

namespace tropsi {

/// A point of the quotient space R_w, stored as the canonical coset
/// representative (the unique representative vanishing on the pivot
/// coordinates of the ambient space).
class Vector {
 public:
  Vector() = default;
  explicit Vector(std::vector<Rat> coords) : coords_(std::move(coords)) {}

  const std::vector<Rat>& coords() const { return coords_; }
  bool is_zero() const;

  Vector& operator+=(const Vector& other);
  Vector& operator-=(const Vector& other);
  Vector& operator*=(const Rat& scalar);
  friend Vector operator+(Vector a, const Vector& b) { return a += b; }
  friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
  friend Vector operator*(const Rat& s, Vector v) { return v *= s; }
  friend bool operator==(const Vector&, const Vector&) = default;

  std::string to_string() const;

 private:
  std::vector<Rat> coords_;
};

/// The ambient quotient space R_w = R^(C(n,2)-C(m,2)) / Im(phi_w), with
/// coordinates indexed by the pairs {i,j} that are not both light.  The
/// reduction recipe (pivot coordinates) is fixed once by exact elimination on
/// the basis phi_w(e_1), ..., phi_w(e_n).
class AmbientSpace {
 public:
  explicit AmbientSpace(const WeightVector& w);

  const WeightVector& weights() const { return w_; }
  int coord_count() const { return static_cast<int>(coords_.size()); }
  int quotient_dim() const { return coord_count() - w_.n(); }
  const std::vector<std::pair<int, int>>& coord_pairs() const { return coords_; }
  int coord_index(int i, int j) const;

  /// Canonical coset representative: subtracts the unique element of
  /// Im(phi_w) matching the vector on the pivot coordinates.
  Vector reduce(std::vector<Rat> raw) const;

  /// Image of phi_w on a point of R^n (before reduction).
  std::vector<Rat> phi(const std::vector<Rat>& point) const;

  /// The reduced ray vector v_I: coordinate T is 1 iff |I cap T| = 1.
  Vector ray_vector(Split I) const;
  std::vector<Rat> raw_ray_vector(Split I) const;

  Vector zero() const { return Vector(std::vector<Rat>(coords_.size(), Rat(0))); }

 private:
  WeightVector w_;
  std::vector<std::pair<int, int>> coords_;
  std::vector<int> coord_lookup_;
  linalg::Matrix reducers_;
  std::vector<int> pivots_;
};

/// A weighted fan: same-dimension w-stable combinatorial types with nonzero
/// integer weights.  The universal output of divisors and intersections.
struct Cycle {
  WeightVector w;
  int dim = 0;
  std::map<CombinatorialType, BigInt> entries;

  Cycle(WeightVector weights, int dimension) : w(std::move(weights)), dim(dimension) {}

  bool empty() const { return entries.empty(); }
  void add(const CombinatorialType& t, const BigInt& weight);
  Cycle scaled(const BigInt& factor) const;

  friend bool operator==(const Cycle&, const Cycle&) = default;
};

/// M_{0,w}^trop as a cycle: all maximal types with weight 1.
Cycle full_fan(const WeightVector& w);

/// The codimension-1 faces of a cycle, each with the list of adjacent cones
/// given as (member type, extra split).
std::map<CombinatorialType, std::vector<std::pair<CombinatorialType, Split>>> codim1_faces(
    const Cycle& z);

/// Distance embedding of a tropical curve with the given edge lengths; equals
/// the length-weighted sum of the ray vectors of its splits.
Vector embed_point(const CombinatorialType& t, const std::map<Split, Rat>& lengths,
                   const AmbientSpace& space);

/// The extra split of sigma over tau together with its ray vector.
std::pair<Split, Vector> primitive_generator(const CombinatorialType& sigma,
                                             const CombinatorialType& tau,
                                             const AmbientSpace& space);

struct BalanceReport {
  bool balanced = true;
  std::optional<CombinatorialType> violation;
  std::string detail;
};

/// Checks the balancing condition around every codimension-1 face of z: the
/// weighted sum of primitive generators must lie in the linear span of the
/// face's rays.
BalanceReport check_balancing(const Cycle& z, const AmbientSpace& space);

/// Image of a classical type under the contraction M_{0,n} -> M_{0,w}: keeps
/// exactly the w-valid splits.
CombinatorialType pushforward_type(const CombinatorialType& t, const WeightVector& w);

/// Pushforward of a cycle on M_{0,n}^trop: cones whose image drops dimension
/// are discarded, weights of coinciding images add up.
Cycle pushforward_cycle(const Cycle& z, const WeightVector& w);

}  // namespace tropsi
