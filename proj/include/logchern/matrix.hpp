#pragma once

/**
 * @file matrix.hpp
 * @brief Small dense exact matrices over Q.
 */

#include <cstddef>
#include <vector>

#include "logchern/rat.hpp"

namespace logchern {

using RatMatrix = std::vector<std::vector<Rat>>;

RatMatrix identity_matrix(std::size_t n);
RatMatrix matrix_product(const RatMatrix& a, const RatMatrix& b);
bool is_square(const RatMatrix& m);

Rat determinant(RatMatrix m);

/// Throws std::domain_error if `m` is singular or not square.
RatMatrix inverse(const RatMatrix& m);

/// Row rank via Gaussian elimination. Rows may have any common length.
std::size_t rank(RatMatrix m);

}  // namespace logchern
