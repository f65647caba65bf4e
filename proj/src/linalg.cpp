#include "hypdeg/linalg.hpp"

#include <utility>

#include "hypdeg/error.hpp"

namespace hypdeg {

Int bareiss_determinant(IntMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return Int(1);
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return Int(0);
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int v = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m[i][j] = std::move(v);
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < a.size(); ++col) {
    std::size_t pr = row;
    while (pr < a.size() && a[pr][col] == 0) ++pr;
    if (pr == a.size()) continue;
    std::swap(a[row], a[pr]);
    const Rat inv = 1 / a[row][col];
    for (auto& x : a[row]) x *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == row || a[i][col] == 0) continue;
      const Rat factor = a[i][col];
      for (std::size_t j = 0; j < a[i].size(); ++j) a[i][j] -= factor * a[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

int matrix_rank(RatMatrix m) {
  if (m.empty()) return 0;
  return static_cast<int>(rref(m, m.front().size()).size());
}

std::vector<RationalVector> nullspace(RatMatrix a, std::size_t cols) {
  const auto pivots = rref(a, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(cols, Rat(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RationalVector> solve_linear(RatMatrix a, RationalVector b) {
  require(a.size() == b.size(), ErrorCode::PreconditionFailed, "solve_linear: shape mismatch");
  if (a.empty()) return RationalVector{};
  const std::size_t cols = a.front().size();
  for (std::size_t i = 0; i < a.size(); ++i) a[i].push_back(b[i]);
  const auto pivots = rref(a, cols);
  for (std::size_t r = pivots.size(); r < a.size(); ++r)
    if (a[r][cols] != 0) return std::nullopt;
  RationalVector x(cols, Rat(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = a[r][cols];
  return x;
}

IntVector null_line(const IntMatrix& rows, std::size_t cols) {
  IntVector u(cols, Int(0));
  if (rows.size() + 1 != cols) return u;
  for (std::size_t k = 0; k < cols; ++k) {
    IntMatrix minor(rows.size(), IntVector(cols - 1));
    for (std::size_t i = 0; i < rows.size(); ++i) {
      std::size_t c = 0;
      for (std::size_t j = 0; j < cols; ++j)
        if (j != k) minor[i][c++] = rows[i][j];
    }
    Int det = bareiss_determinant(std::move(minor));
    u[k] = (k % 2 == 0) ? det : Int(-det);
  }
  return u;
}

}  // namespace hypdeg
