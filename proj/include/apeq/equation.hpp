#ifndef APEQ_EQUATION_HPP
#define APEQ_EQUATION_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "apeq/additive_map.hpp"
#include "apeq/polynomial.hpp"

namespace apeq {

/// One summand f(x^p) * g(x)^q of an equation.
struct EquationTerm {
    AdditiveMap f;
    unsigned p = 1;
    AdditiveMap g;
    unsigned q = 0;
    std::string f_name;  // optional display names; generated when empty
    std::string g_name;
};

/// The equation  sum_i f_i(x^{p_i}) * g_i(x)^{q_i} = 0.
struct Equation {
    std::vector<EquationTerm> terms;

    Equation& add(AdditiveMap f, unsigned p, AdditiveMap g, unsigned q,
                  std::string f_name = "", std::string g_name = "");

    /// Expands the left-hand side into the free algebra of generators.
    Polynomial expand(std::uint16_t var = 0) const;

    /// True when the expansion is identically zero, i.e. the maps solve the
    /// equation for every additive-map interpretation of the symbols.
    bool verify(std::uint16_t var = 0) const { return expand(var).is_zero(); }

    std::string str() const;
};

/// Structural side conditions on the exponent vectors.
struct ConditionReport {
    bool p_strictly_increasing = false;  // p_1 < p_2 < ... < p_n
    bool p_distinct = false;             // the p_i are pairwise distinct
    bool homogeneous = false;            // p_i + q_i is the same for all i
    unsigned weight = 0;                 // the common value N when homogeneous
    bool cross_distinct = false;         // p_i != q_j whenever i != j
    bool all_exponents_distinct = false; // the 2n values p_1..p_n, q_1..q_n are distinct
};

ConditionReport check_conditions(const Equation& eq);

/// One weight class of an inhomogeneous equation.
struct HomogeneousPart {
    unsigned weight = 0;
    std::vector<std::size_t> term_indices;  // positions in the original equation
    Equation sub;
};

/// Splits an equation into its homogeneous parts by total weight p_i + q_i,
/// ordered by decreasing weight.  Solving the original equation (in the
/// decomposable sense) is equivalent to solving every part separately.
std::vector<HomogeneousPart> homogenize(const Equation& eq);

}  // namespace apeq

#endif  // APEQ_EQUATION_HPP
