#ifndef APEQ_SYMMETRIZE_HPP
#define APEQ_SYMMETRIZE_HPP

#include <vector>

#include "apeq/equation.hpp"
#include "apeq/polynomial.hpp"

namespace apeq {

/// Multivariate symmetrization of a homogeneous equation of weight N:
///
///   (1/N!) * sum over permutations s of {1..N} of
///       sum_i f_i(x_{s(1)} * ... * x_{s(p_i)}) * g_i(x_{s(p_i+1)}) * ... * g_i(x_{s(N)})
///
/// in the variables x_1, ..., x_N.  Substituting x_t -> x on the diagonal
/// recovers the single-variable expansion exactly, and the result is the zero
/// polynomial precisely when the single-variable expansion is (both follow
/// from symmetry of the expansion).  Throws std::invalid_argument when the
/// equation is not homogeneous.
///
/// Three routes compute the same polynomial:
///   - a serial reference loop over all N! permutations,
///   - an OpenMP loop over permutation ranks (factorial-number-system
///     unranking makes the iteration order-free),
///   - a collapsed sum over p_i-element subsets with weight p_i! * q_i! / N!.
Polynomial symmetrize_reference(const Equation& eq);
Polynomial symmetrize_parallel(const Equation& eq);
Polynomial symmetrize_subsets(const Equation& eq);

/// Substitutes x_v -> x_to for every variable, merging towers pointwise.
Polynomial diagonalize(const Polynomial& p, std::uint16_t to_var = 0);

/// Verifies each equation (expansion identically zero); the parallel variant
/// distributes whole equations across threads.  Entries are 0 or 1.
std::vector<char> batch_verify(const std::vector<Equation>& eqs);
std::vector<char> batch_verify_parallel(const std::vector<Equation>& eqs);

}  // namespace apeq

#endif  // APEQ_SYMMETRIZE_HPP
