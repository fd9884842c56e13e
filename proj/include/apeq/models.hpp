#ifndef APEQ_MODELS_HPP
#define APEQ_MODELS_HPP

#include <ostream>
#include <string>
#include <vector>

#include "apeq/equation.hpp"
#include "apeq/rational.hpp"

namespace apeq {

/// Concrete model 1: the rational function field in one variable t, restricted
/// to its polynomial subring (closed under everything we apply).  d/dt is an
/// honest derivation, so equations built purely from derivation towers can be
/// checked against this model end to end.
struct DensePoly {
    std::vector<ComplexRational> c;  // c[k] is the coefficient of t^k

    static DensePoly zero() { return DensePoly{}; }
    static DensePoly constant(const ComplexRational& v);
    static DensePoly variable();  // t

    void normalize();  // drops trailing zero coefficients
    bool is_zero() const { return c.empty(); }
    std::size_t degree() const { return c.empty() ? 0 : c.size() - 1; }

    DensePoly& operator+=(const DensePoly& o);
    DensePoly& operator-=(const DensePoly& o);
    friend DensePoly operator+(DensePoly a, const DensePoly& b) { return a += b; }
    friend DensePoly operator-(DensePoly a, const DensePoly& b) { return a -= b; }
    friend DensePoly operator*(const DensePoly& a, const DensePoly& b);
    friend bool operator==(const DensePoly&, const DensePoly&) = default;
    DensePoly pow(unsigned e) const;
    DensePoly derivative() const;  // d/dt

    std::string str() const;

    friend std::ostream& operator<<(std::ostream& os, const DensePoly& p) {
        return os << p.str();
    }
};

/// Applies an additive map in the polynomial model.  Only tower 0 exists here
/// (no nontrivial homomorphisms fix the model pointwise enough to be honest),
/// so maps touching hom > 0 are rejected.
DensePoly model_apply(const AdditiveMap& m, const DensePoly& x);

/// Evaluates the equation's left-hand side at the sample element x.
DensePoly model_eval(const Equation& eq, const DensePoly& x);

/// Concrete model 2: the quadratic extension obtained by adjoining a square
/// root of 2 to the Gaussian rationals.  Elements are a + b*r with r^2 = 2.
/// Two honest homomorphisms exist: the identity and the conjugation r -> -r.
/// Every derivation vanishes on this field (it is algebraic over the prime
/// field), so maps with positive tower order are rejected.
struct QuadElem {
    ComplexRational a, b;  // a + b*r

    static QuadElem from_ints(long long ra, long long rb) {
        return QuadElem{ComplexRational(ra), ComplexRational(rb)};
    }

    bool is_zero() const { return a.is_zero() && b.is_zero(); }
    QuadElem conj_root() const { return QuadElem{a, -b}; }  // r -> -r

    QuadElem& operator+=(const QuadElem& o);
    QuadElem& operator-=(const QuadElem& o);
    friend QuadElem operator+(QuadElem x, const QuadElem& y) { return x += y; }
    friend QuadElem operator-(QuadElem x, const QuadElem& y) { return x -= y; }
    friend QuadElem operator*(const QuadElem& x, const QuadElem& y);
    friend QuadElem operator*(const ComplexRational& c, const QuadElem& y);
    friend bool operator==(const QuadElem&, const QuadElem&) = default;
    QuadElem pow(unsigned e) const;

    std::string str() const;

    friend std::ostream& operator<<(std::ostream& os, const QuadElem& q) {
        return os << q.str();
    }
};

/// Hom labels in this model: 0 and 1 both act as the identity (label 1 is the
/// first named homomorphism), label 2 is the conjugation.  Tower order must
/// be 0 throughout.
QuadElem model_apply(const AdditiveMap& m, const QuadElem& x);
QuadElem model_eval(const Equation& eq, const QuadElem& x);

}  // namespace apeq

#endif  // APEQ_MODELS_HPP
