#pragma once

#include <optional>
#include <vector>

#include "hypdeg/numeric.hpp"

namespace hypdeg {

using IntMatrix = std::vector<std::vector<Int>>;
using RatMatrix = std::vector<std::vector<Rat>>;

/// Determinant by Bareiss fraction-free elimination (every intermediate division is exact).
Int bareiss_determinant(IntMatrix m);

int matrix_rank(RatMatrix m);

/// Basis of {x : A x = 0}; A has `cols` columns (needed when A has no rows).
std::vector<RationalVector> nullspace(RatMatrix a, std::size_t cols);

/// Some solution of A x = b, or nullopt if inconsistent.
std::optional<RationalVector> solve_linear(RatMatrix a, RationalVector b);

/// Generator of the null line of an (n-1) x n integer matrix of rank n-1 via signed maximal
/// minors; returns the zero vector when the rank is smaller.
IntVector null_line(const IntMatrix& rows, std::size_t cols);

}  // namespace hypdeg
