#include "reptype/linalg.hpp"

#include <utility>

namespace reptype {

bool solve_linear(std::vector<std::vector<Rat>>& A, std::vector<Rat>& rhs) {
  const std::size_t m = A.size();
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t piv = col;
    while (piv < m && A[piv][col] == 0) ++piv;
    if (piv == m) return false;
    std::swap(A[piv], A[col]);
    std::swap(rhs[piv], rhs[col]);
    for (std::size_t r = 0; r < m; ++r) {
      if (r == col || A[r][col] == 0) continue;
      Rat factor = A[r][col] / A[col][col];
      for (std::size_t c = col; c < m; ++c) A[r][c] -= factor * A[col][c];
      rhs[r] -= factor * rhs[col];
    }
  }
  for (std::size_t r = 0; r < m; ++r) rhs[r] /= A[r][r];
  return true;
}

}  // namespace reptype
