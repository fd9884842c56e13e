#ifndef APEQ_FAMILIES_HPP
#define APEQ_FAMILIES_HPP

#include <cstddef>
#include <vector>

#include "apeq/equation.hpp"

namespace apeq {

/// Constructors for the known solution families.  Every constructor returns a
/// fully instantiated equation whose expansion is identically zero; where a
/// family carries a scalar constraint the dependent coefficient is solved for
/// in closed form, so the caller only supplies the free parameters.

/// The basic derivation pair at exponents (p1, q1) and (p1-1, q1+1):
/// d(x^{p1}) * d(x)^{q1} - p1 * x^{p1-1} * d(x)^{q1+1} = 0.  Requires p1 >= 1.
Equation family_derivation_pair(unsigned p1, unsigned q1);

/// First-order affine pair at (p1, q1), (p1-1, q1+1):
///   f1 = l11*D + a*p1*l11*id     g1 = m11*D + a*m11*id
///   f2 = l20*id                  g2 = m21*D + a*m21*id
/// with l20 = -p1*l11*m11^{q1} / m21^{q1+1}.  The g's share the affine shift
/// a, which makes d + a*id factor out of both sides.  Requires p1 >= 1 and
/// l11, m11, m21 nonzero.
Equation family_affine_pair(unsigned p1, unsigned q1, const ComplexRational& l11,
                            const ComplexRational& m11, const ComplexRational& m21,
                            const ComplexRational& a);

/// Degenerate-partner pair at (p1, q1), (N-1, 1) where N = p1 + q1:
///   f1 = l11*D + l10*id   g1 = m10*id
///   f2 = l20*id           g2 = m21*D + m20*id
/// with l20 = -p1*l11*m10^{q1} / m21 and m20 = -l10*m10^{q1} / l20.
/// Requires p1 >= 1, q1 >= 2 (so the two p's differ) and l11, m10, m21 nonzero.
Equation family_degenerate_pair(unsigned p1, unsigned q1, const ComplexRational& l11,
                                const ComplexRational& l10, const ComplexRational& m10,
                                const ComplexRational& m21);

/// Both-g-scaled-identity pair at (p1, q1), (p2, q2) with p1+q1 == p2+q2:
///   f_i = l_i1*D + l_i0*id   g_i = m_i0*id
/// with l21 = -p1*l11*m10^{q1} / (p2*m20^{q2}) and
///      l20 = -l10*m10^{q1} / m20^{q2}.
/// Requires p1 != p2, p1, p2 >= 1 and m10, m20 nonzero.
Equation family_scaled_identity_pair(unsigned p1, unsigned q1, unsigned p2, unsigned q2,
                                     const ComplexRational& l11, const ComplexRational& l10,
                                     const ComplexRational& m10, const ComplexRational& m20);

/// Proportional family: f_i = l_i*id, g_i = c_i*l_i*id.  No constraint is
/// solved here; the expansion equals the residual times x^N when the weights
/// agree.  See proportional_residual.
Equation family_proportional(const std::vector<unsigned>& ps, const std::vector<unsigned>& qs,
                             const std::vector<ComplexRational>& ls,
                             const std::vector<ComplexRational>& cs);

/// sum_i c_i^{q_i} * l_i^{q_i+1}; the proportional family solves the equation
/// exactly when this vanishes (given a common weight).
ComplexRational proportional_residual(const std::vector<unsigned>& qs,
                                      const std::vector<ComplexRational>& ls,
                                      const std::vector<ComplexRational>& cs);

/// Two-homomorphism difference family of weight N >= 3:
///   (phi1 - phi2)(x^2) * (phi1 + phi2)(x)^{N-2}
/// + (phi2 - phi1)(x)   * (phi1 + phi2)(x)^{N-1} = 0.
Equation family_hom_difference(unsigned N);

/// Scaled two-homomorphism family of weight N >= 3 and parameter c:
///   f1 = a1*(phi1 + c*phi2)    at (1, N-1),  g1 = b1*(phi1 - c*phi2)
///   f2 = a2*(phi1 - c^2*phi2)  at (2, N-2),  g2 = b2*(phi1 - c*phi2)
/// with a2 = -a1*b1^{N-1} / b2^{N-2}.  At c = -1, a1 = b1 = b2 = 1 this
/// reduces to the difference family above (terms swapped, overall sign
/// flipped).  Requires a1, b1, b2, c nonzero.
Equation family_hom_scaled(unsigned N, const ComplexRational& c, const ComplexRational& a1,
                           const ComplexRational& b1, const ComplexRational& b2);

/// Repeated-exponent family: both terms share (p, q), f1 = g1 = f2 = d and
/// g2 = l*d with 1 + l^q = 0.  l = -1 for odd q, l = i for q = 2 mod 4; no
/// Gaussian-rational l exists when 4 divides q, so that case is rejected.
Equation family_repeated_exponent(unsigned p, unsigned q);

/// Second-order solution of weight N >= 5 built from d^2(x^2):
///   d^2(x^2) * x^{N-2} - 2*x^{N-2} * d(x)^2 - 2*d^2(x) * x^{N-1} = 0.
Equation family_second_order(unsigned N);

/// Structural dichotomy of a solution: either every map has tower order at
/// most one, or the maximal order K >= 2 occurs in some f_i whose partner g_i
/// is a scaled identity.
enum class SolutionShape { AllOrdersAtMostOne, MaxOrderWithLinearG, Other };

struct ShapeReport {
    SolutionShape shape = SolutionShape::Other;
    std::uint32_t max_order = 0;
    std::vector<std::size_t> witnesses;  // terms realizing the shape
};

ShapeReport classify_shape(const Equation& eq);

}  // namespace apeq

#endif  // APEQ_FAMILIES_HPP
