#pragma once

#include <vector>

namespace wsa {

/// Eigenvalues of a symmetric k x k matrix (row-major), ascending, via cyclic
/// Jacobi rotations. Intended for the small Gram matrices that back RIP
/// estimation and the greedy solvers (k <= a few dozen).
std::vector<double> symmetric_eigenvalues(std::vector<double> g, int k);

/// Solves the SPD system G b = rhs (G row-major k x k) by Cholesky. If a pivot
/// collapses, retries once with a 1e-12 ridge on the diagonal and reports it
/// through ridge_used.
std::vector<double> cholesky_solve(std::vector<double> g, std::vector<double> rhs,
                                   bool& ridge_used);

}  // namespace wsa
