#pragma once

#include <optional>
#include <vector>

#include "tropsi/numbers.hpp"

namespace tropsi::linalg {

using Row = std::vector<Rat>;
using Matrix = std::vector<Row>;

/// In-place reduced row echelon form; returns the pivot column of each
/// surviving row (zero rows are dropped).
std::vector<int> rref(Matrix& m);

int rank(Matrix m);

struct Solution {
  Row particular;     // one solution of A x = b
  Matrix kernel;      // basis of the null space of A
};

/// Exact solve of A x = b with A given column-wise.  Returns std::nullopt when
/// the system is inconsistent.
std::optional<Solution> solve_columns(const Matrix& columns, const Row& rhs);

}  // namespace tropsi::linalg
