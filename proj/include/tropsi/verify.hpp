#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tropsi::verify {

struct CheckResult {
  std::string name;
  bool pass = true;
  long long cases = 0;
  std::string detail;  // first counterexample when failing
};

using Report = std::vector<CheckResult>;

bool all_pass(const Report& report);

/// Invariant suite of the fan module: quotient identities, spans,
/// simpliciality, and balancing of the moduli fans.
Report fan_suite(int max_n);

/// Invariant suite of the divisors module: divisor realisation of the
/// psi-classes, boundary-divisor agreement, positive representations, and
/// the K(N,w) counts.
Report divisor_suite(int max_n);

/// Invariant suite of the psi module: closed form against the recursive
/// oracle, definition equivalence, specialisations, degrees, and order
/// independence.
Report psi_suite(int max_n);

/// Invariant suite of the combinatorics module: the appendix properties and
/// the binary min-formula weights.
Report appendix_suite(int max_n);

/// The acceptance criteria, one result per criterion.
Report acceptance(int max_n);

}  // namespace tropsi::verify
