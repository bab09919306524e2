#pragma once

#include <cstddef>
#include <vector>

namespace rackcast::linalg {

/// In-place Cholesky solve of A x = b for symmetric positive-definite A
/// (row-major n x n). Returns false if a pivot is not strictly positive.
bool cholesky_solve(std::vector<double> a, std::size_t n, std::vector<double> b,
                    std::vector<double>& x);

/// Gram matrix AᵀA (+ lambda on the diagonal) and right-hand side Aᵀy for
/// the augmented design [1 | X].
void ridge_normal_equations(const std::vector<std::vector<double>>& x,
                            const std::vector<double>& y, double lambda,
                            std::vector<double>& gram, std::vector<double>& rhs);

} // namespace rackcast::linalg
