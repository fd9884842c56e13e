#ifndef APEQ_MATRICES_HPP
#define APEQ_MATRICES_HPP

#include <vector>

#include "apeq/rational.hpp"

namespace apeq {

using Matrix = std::vector<std::vector<ComplexRational>>;

/// Exact determinant by Gaussian elimination with column pivoting.
ComplexRational determinant(Matrix a);

/// V[t][i] = p_i^{t+1} for t, i in 0..n-1.  This is the coefficient matrix of
/// the diagonal moments x^{p_i}: row t collects the t+1st powers.
Matrix power_moment_matrix(const std::vector<unsigned>& ps);

/// M[t][i] = p_i * (p_i - 1) * ... * (p_i - t), the falling factorials that
/// multiply the top-derivation coefficients in the symmetrized expansion.
Matrix falling_factorial_matrix(const std::vector<unsigned>& ps);

/// Closed form shared by both determinants:
/// prod_i p_i * prod_{i<j} (p_j - p_i).
/// Row t of the falling-factorial matrix is a fixed unit-triangular integer
/// combination of rows 1..t+1 of the power-moment matrix (Stirling numbers of
/// the first kind), so the two determinants coincide; the product formula is
/// the Vandermonde evaluation.  Nonzero exactly when the p_i are distinct and
/// nonzero.
ComplexRational exponent_determinant_closed_form(const std::vector<unsigned>& ps);

}  // namespace apeq

#endif  // APEQ_MATRICES_HPP
