#include "apeq/families.hpp"

#include <stdexcept>

namespace apeq {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

Equation family_derivation_pair(unsigned p1, unsigned q1) {
    require(p1 >= 1, "derivation pair: p1 must be at least 1");
    Equation eq;
    AdditiveMap d = AdditiveMap::derivation();
    eq.add(d, p1, d, q1);
    eq.add(AdditiveMap::identity(ComplexRational(-static_cast<long long>(p1))), p1 - 1, d,
           q1 + 1);
    return eq;
}

Equation family_affine_pair(unsigned p1, unsigned q1, const ComplexRational& l11,
                            const ComplexRational& m11, const ComplexRational& m21,
                            const ComplexRational& a) {
    require(p1 >= 1, "affine pair: p1 must be at least 1");
    require(!l11.is_zero() && !m11.is_zero() && !m21.is_zero(),
            "affine pair: l11, m11, m21 must be nonzero");
    const ComplexRational p1c(static_cast<long long>(p1));
    const ComplexRational l20 = -(p1c * l11 * m11.pow(q1)) / m21.pow(q1 + 1);

    AdditiveMap f1 = AdditiveMap::derivation(1, l11) + AdditiveMap::identity(a * p1c * l11);
    AdditiveMap g1 = AdditiveMap::derivation(1, m11) + AdditiveMap::identity(a * m11);
    AdditiveMap f2 = AdditiveMap::identity(l20);
    AdditiveMap g2 = AdditiveMap::derivation(1, m21) + AdditiveMap::identity(a * m21);

    Equation eq;
    eq.add(f1, p1, g1, q1);
    eq.add(f2, p1 - 1, g2, q1 + 1);
    return eq;
}

Equation family_degenerate_pair(unsigned p1, unsigned q1, const ComplexRational& l11,
                                const ComplexRational& l10, const ComplexRational& m10,
                                const ComplexRational& m21) {
    require(p1 >= 1, "degenerate pair: p1 must be at least 1");
    require(q1 >= 2, "degenerate pair: q1 must be at least 2");
    require(!l11.is_zero() && !m10.is_zero() && !m21.is_zero(),
            "degenerate pair: l11, m10, m21 must be nonzero");
    const unsigned n = p1 + q1;
    const ComplexRational p1c(static_cast<long long>(p1));
    const ComplexRational l20 = -(p1c * l11 * m10.pow(q1)) / m21;
    const ComplexRational m20 = -(l10 * m10.pow(q1)) / l20;

    Equation eq;
    eq.add(AdditiveMap::derivation(1, l11) + AdditiveMap::identity(l10), p1,
           AdditiveMap::identity(m10), q1);
    eq.add(AdditiveMap::identity(l20), n - 1,
           AdditiveMap::derivation(1, m21) + AdditiveMap::identity(m20), 1);
    return eq;
}

Equation family_scaled_identity_pair(unsigned p1, unsigned q1, unsigned p2, unsigned q2,
                                     const ComplexRational& l11, const ComplexRational& l10,
                                     const ComplexRational& m10, const ComplexRational& m20) {
    require(p1 >= 1 && p2 >= 1, "scaled-identity pair: exponents must be at least 1");
    require(p1 + q1 == p2 + q2, "scaled-identity pair: weights must agree");
    require(p1 != p2, "scaled-identity pair: p1 and p2 must differ");
    require(!m10.is_zero() && !m20.is_zero(),
            "scaled-identity pair: m10 and m20 must be nonzero");
    const ComplexRational p1c(static_cast<long long>(p1));
    const ComplexRational p2c(static_cast<long long>(p2));
    const ComplexRational l21 = -(p1c * l11 * m10.pow(q1)) / (p2c * m20.pow(q2));
    const ComplexRational l20 = -(l10 * m10.pow(q1)) / m20.pow(q2);

    Equation eq;
    eq.add(AdditiveMap::derivation(1, l11) + AdditiveMap::identity(l10), p1,
           AdditiveMap::identity(m10), q1);
    eq.add(AdditiveMap::derivation(1, l21) + AdditiveMap::identity(l20), p2,
           AdditiveMap::identity(m20), q2);
    return eq;
}

Equation family_proportional(const std::vector<unsigned>& ps, const std::vector<unsigned>& qs,
                             const std::vector<ComplexRational>& ls,
                             const std::vector<ComplexRational>& cs) {
    require(ps.size() == qs.size() && ps.size() == ls.size() && ps.size() == cs.size(),
            "proportional family: parameter lists must have equal length");
    Equation eq;
    for (std::size_t i = 0; i < ps.size(); ++i)
        eq.add(AdditiveMap::identity(ls[i]), ps[i], AdditiveMap::identity(cs[i] * ls[i]),
               qs[i]);
    return eq;
}

ComplexRational proportional_residual(const std::vector<unsigned>& qs,
                                      const std::vector<ComplexRational>& ls,
                                      const std::vector<ComplexRational>& cs) {
    require(qs.size() == ls.size() && qs.size() == cs.size(),
            "proportional residual: parameter lists must have equal length");
    ComplexRational r(0);
    for (std::size_t i = 0; i < qs.size(); ++i) r += cs[i].pow(qs[i]) * ls[i].pow(qs[i] + 1);
    return r;
}

Equation family_hom_difference(unsigned N) {
    require(N >= 3, "hom difference family: weight must be at least 3");
    AdditiveMap diff = AdditiveMap::hom(1) - AdditiveMap::hom(2);
    AdditiveMap sum = AdditiveMap::hom(1) + AdditiveMap::hom(2);
    Equation eq;
    eq.add(diff, 2, sum, N - 2);
    eq.add(ComplexRational(-1) * diff, 1, sum, N - 1);
    return eq;
}

Equation family_hom_scaled(unsigned N, const ComplexRational& c, const ComplexRational& a1,
                           const ComplexRational& b1, const ComplexRational& b2) {
    require(N >= 3, "hom scaled family: weight must be at least 3");
    require(!c.is_zero() && !a1.is_zero() && !b1.is_zero() && !b2.is_zero(),
            "hom scaled family: all parameters must be nonzero");
    const ComplexRational a2 = -(a1 * b1.pow(N - 1)) / b2.pow(N - 2);

    AdditiveMap f1 = AdditiveMap::hom(1, a1) + AdditiveMap::hom(2, a1 * c);
    AdditiveMap f2 = AdditiveMap::hom(1, a2) - AdditiveMap::hom(2, a2 * c * c);
    AdditiveMap g1 = AdditiveMap::hom(1, b1) - AdditiveMap::hom(2, b1 * c);
    AdditiveMap g2 = AdditiveMap::hom(1, b2) - AdditiveMap::hom(2, b2 * c);

    Equation eq;
    eq.add(f1, 1, g1, N - 1);
    eq.add(f2, 2, g2, N - 2);
    return eq;
}

Equation family_repeated_exponent(unsigned p, unsigned q) {
    require(p >= 1, "repeated exponent family: p must be at least 1");
    require(q >= 1, "repeated exponent family: q must be at least 1");
    ComplexRational l;
    if (q % 2 == 1)
        l = ComplexRational(-1);
    else if (q % 4 == 2)
        l = ComplexRational::i();
    else
        throw std::invalid_argument(
            "repeated exponent family: no Gaussian-rational l with l^q = -1 when 4 | q");
    AdditiveMap d = AdditiveMap::derivation();
    Equation eq;
    eq.add(d, p, d, q);
    eq.add(d, p, AdditiveMap::derivation(1, l), q);
    return eq;
}

Equation family_second_order(unsigned N) {
    require(N >= 5, "second order family: weight must be at least 5");
    Equation eq;
    eq.add(AdditiveMap::derivation(2), 2, AdditiveMap::identity(), N - 2);
    eq.add(AdditiveMap::identity(ComplexRational(-2)), N - 2, AdditiveMap::derivation(), 2);
    eq.add(AdditiveMap::derivation(2, ComplexRational(-2)), 1, AdditiveMap::identity(), N - 1);
    return eq;
}

ShapeReport classify_shape(const Equation& eq) {
    ShapeReport r;
    for (const auto& t : eq.terms)
        r.max_order = std::max({r.max_order, t.f.max_order(), t.g.max_order()});
    if (r.max_order <= 1) {
        r.shape = SolutionShape::AllOrdersAtMostOne;
        return r;
    }
    for (std::size_t i = 0; i < eq.terms.size(); ++i)
        if (eq.terms[i].f.max_order() == r.max_order && eq.terms[i].g.is_scaled_identity())
            r.witnesses.push_back(i);
    r.shape =
        r.witnesses.empty() ? SolutionShape::Other : SolutionShape::MaxOrderWithLinearG;
    return r;
}

}  // namespace apeq
