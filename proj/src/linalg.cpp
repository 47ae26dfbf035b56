#include "tropsi/linalg.hpp"

#include <cstddef>
#include <stdexcept>

namespace tropsi::linalg {

std::vector<int> rref(Matrix& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const std::size_t cols = m[0].size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    const Rat inv = m[row][col];
    for (std::size_t c = col; c < cols; ++c) m[row][c] /= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      const Rat factor = m[r][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= factor * m[row][c];
    }
    pivots.push_back(static_cast<int>(col));
    ++row;
  }
  m.resize(row);
  return pivots;
}

int rank(Matrix m) { return static_cast<int>(rref(m).size()); }

std::optional<Solution> solve_columns(const Matrix& columns, const Row& rhs) {
  const std::size_t vars = columns.size();
  const std::size_t dim = rhs.size();
  for (const Row& col : columns) {
    if (col.size() != dim) throw std::invalid_argument("solve_columns: dimension mismatch");
  }
  Matrix aug(dim, Row(vars + 1, Rat(0)));
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < vars; ++c) aug[r][c] = columns[c][r];
    aug[r][vars] = rhs[r];
  }
  const std::vector<int> pivots = rref(aug);
  for (int p : pivots) {
    if (static_cast<std::size_t>(p) == vars) return std::nullopt;  // row (0 ... 0 | 1)
  }
  Solution sol;
  sol.particular.assign(vars, Rat(0));
  std::vector<int> pivot_of_col(vars, -1);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    pivot_of_col[pivots[r]] = static_cast<int>(r);
    sol.particular[pivots[r]] = aug[r][vars];
  }
  for (std::size_t c = 0; c < vars; ++c) {
    if (pivot_of_col[c] >= 0) continue;
    Row basis(vars, Rat(0));
    basis[c] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) basis[pivots[r]] = -aug[r][c];
    sol.kernel.push_back(std::move(basis));
  }
  return sol;
}

}  // namespace tropsi::linalg
