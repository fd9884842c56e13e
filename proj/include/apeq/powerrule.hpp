#ifndef APEQ_POWERRULE_HPP
#define APEQ_POWERRULE_HPP

#include <cstdint>
#include <vector>

#include "apeq/combinatorics.hpp"
#include "apeq/polynomial.hpp"

namespace apeq {

/// Closed-form expansion of d^k(x^p) as a sum over partitions of k:
/// for a partition of k with j_t parts equal to t (t >= 1) and p' total parts,
/// the coefficient is  k! / (prod_t (t!)^{j_t} * j_t!)  *  p*(p-1)*...*(p-p'+1)
/// and the monomial is  prod_t d^t(x)^{j_t} * x^(p-p').
/// Partitions with more than p parts contribute nothing (the falling factorial
/// vanishes), so only partitions into at most p parts are enumerated.
/// Generators are labeled (var, hom): hom selects the tower the symbols live in.
Polynomial power_rule_partition(unsigned k, unsigned p,
                                std::uint16_t var = 0, std::uint16_t hom = 0);

/// Independent route: d^k(x^p) = sum over compositions l_1+...+l_p = k of
/// multinomial(k; l) * prod_i d^{l_i}(x), collecting equal factors.
Polynomial power_rule_compositions(unsigned k, unsigned p,
                                   std::uint16_t var = 0, std::uint16_t hom = 0);

/// Second independent route: start from x^p and apply the formal derivation
/// k times via the product rule.
Polynomial power_rule_leibniz(unsigned k, unsigned p,
                              std::uint16_t var = 0, std::uint16_t hom = 0);

/// The partition coefficient above, exposed for direct inspection:
/// part.mult[t-1] = j_t, parts must sum to k.
BigInt partition_coefficient(unsigned k, unsigned p, const Partition& part);

/// d^k applied to a product of distinct variables:
/// d^k(x_{v_1} * ... * x_{v_p}) = sum over compositions l of
/// multinomial(k; l) * prod_i d^{l_i}(x_{v_i}).
Polynomial power_rule_product(unsigned k, const std::vector<std::uint16_t>& vars,
                              std::uint16_t hom = 0);

/// One application of the formal derivation: every generator (var, hom, j)
/// becomes (var, hom, j+1) under the product rule.  Each tower carries its
/// own derivation; polynomials mixing towers are differentiated tower-wise.
Polynomial formal_derivative(const Polynomial& p);

}  // namespace apeq

#endif  // APEQ_POWERRULE_HPP
