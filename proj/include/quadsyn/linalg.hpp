#pragma once

#include <vector>

#include "quadsyn/rational.hpp"

// Small dense exact linear algebra. Sizes here never exceed 10x10.
namespace quadsyn::linalg {

using RatMatrix = std::vector<std::vector<Rational>>;
using IntMatrix = std::vector<std::vector<Integer>>;

int rank(RatMatrix m);

/// Basis of {v : m v = 0}; one vector per free column, in column order.
std::vector<std::vector<Rational>> kernel(RatMatrix m, std::size_t columns);

/// Gaussian elimination over the rationals. Square input.
Rational determinant(RatMatrix m);

/// Fraction-free (Bareiss) elimination; every intermediate is an integer
/// and the last pivot is the determinant exactly.
Integer determinant_bareiss(IntMatrix m);

}  // namespace quadsyn::linalg
