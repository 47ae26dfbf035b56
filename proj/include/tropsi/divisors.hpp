#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "tropsi/fan.hpp"
#include "tropsi/numbers.hpp"
#include "tropsi/trees.hpp"
#include "tropsi/weights.hpp"

namespace tropsi {

/// A rational function on M_{0,w}^trop, given by its values on the rays.
///
/// Two evaluation strategies exist for the Weil-divisor formula:
///  - cone-wise linear extension in ray coordinates (the ordinary piecewise
///    linear function; used by the split indicators phi_I);
///  - evaluation through the unique positive representation in V_{N,w}
///    (used by f_{N,w}; its ray values do not extend cone-linearly).
struct RationalFunctionOnFan {
  WeightVector w;
  std::map<Split, Rat> ray_values;
  std::optional<int> positive_rep_mark;  // set to N for f_{N,w}

  Rat value_on_ray(Split s) const;
};

/// Indicator of a split: 1 on v_I (= v_{I^c}), 0 on every other ray of
/// M_{0,n}^trop, extended cone-linearly.
RationalFunctionOnFan phi_I(Split I, int n);

/// The rays v_S with |S| = 2 and N not in S that exist in M_{0,w}^trop,
/// in canonical order.
std::vector<Split> V_set(int N, const WeightVector& w);

/// |V_{N,w}| in closed form: m or 2m-2 when n-m = 2 (N heavy/light), else
/// C(n-1,2) - C(m,2) or C(n-1,2) - C(m-1,2).
std::int64_t K_constant(int N, const WeightVector& w);

/// The function with value 1 on V_{N,w} and 0 on all other rays, evaluated
/// through positive representations.
RationalFunctionOnFan f_N_w(int N, const WeightVector& w);

/// The unique representation v_I = sum c_S v_S over v_S in V_{N,w} with
/// nonnegative coefficients, at least one zero coefficient, and support on
/// the side of I not containing N.  Computed by an exact constrained solve.
std::map<Split, Rat> positive_representation(Split I, int N, const WeightVector& w,
                                             const AmbientSpace& space);

/// The tropical Weil divisor of f on the balanced cycle z:
///   w(tau) = sum_sigma f(w(sigma) u_{sigma/tau}) - f(sum_sigma w(sigma) u_{sigma/tau}).
/// Zero-weight faces are dropped.
Cycle weil_divisor(const RationalFunctionOnFan& f, const Cycle& z, const AmbientSpace& space);

/// Boundary divisor D_I on M_{0,n}^trop in closed form: a codimension-1 cone
/// with local partition P_1..P_4 gets weight +1 if I = P_i u P_j, -1 if I or
/// its complement equals a single part, 0 otherwise.
Cycle boundary_divisor(Split I, int n);

}  // namespace tropsi
