#ifndef APEQ_POLYNOMIAL_HPP
#define APEQ_POLYNOMIAL_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "apeq/rational.hpp"
#include "apeq/symbols.hpp"

namespace apeq {

/// Product of generator powers, e.g. x^3 * d(x)^2.  Factors are kept sorted
/// by generator key with strictly positive exponents; the empty monomial is 1.
struct Monomial {
    std::vector<std::pair<std::uint64_t, std::uint32_t>> factors;

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;

    unsigned total_degree() const {
        unsigned d = 0;
        for (const auto& [k, e] : factors) d += e;
        return d;
    }

    /// Merges another monomial into this one (exponents add).
    void mul(const Monomial& other);

    static Monomial one() { return Monomial{}; }
    static Monomial from_generator(const Generator& g, std::uint32_t exp = 1);
};

std::string to_string(const Monomial& m);

/// Sparse multivariate polynomial in the generators, with Gaussian-rational
/// coefficients.  Expansion of the additive-map equations lives here; an
/// identity holds exactly when the expansion is the zero polynomial, because
/// the generators are algebraically independent.
class Polynomial {
public:
    std::map<Monomial, ComplexRational> terms;

    Polynomial() = default;
    explicit Polynomial(const ComplexRational& c) { add_term(Monomial::one(), c); }
    explicit Polynomial(long long c) { add_term(Monomial::one(), ComplexRational(c)); }

    static Polynomial zero() { return Polynomial(); }
    static Polynomial constant(const ComplexRational& c) { return Polynomial(c); }
    static Polynomial generator(const Generator& g, std::uint32_t exp = 1) {
        Polynomial p;
        p.add_term(Monomial::from_generator(g, exp), ComplexRational(1));
        return p;
    }

    void add_term(const Monomial& m, const ComplexRational& c);

    bool is_zero() const { return terms.empty(); }
    std::size_t size() const { return terms.size(); }

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    Polynomial& operator*=(const ComplexRational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
    friend Polynomial operator*(Polynomial a, const ComplexRational& c) { return a *= c; }
    friend Polynomial operator*(const ComplexRational& c, Polynomial a) { return a *= c; }
    Polynomial operator-() const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    Polynomial pow(unsigned e) const;

    /// Remaps every generator key and merges coinciding factors.  Used for
    /// variable relabeling (e.g. the diagonal substitution x_t -> x) and for
    /// collapse checks that identify whole towers.
    Polynomial map_generators(const std::function<std::uint64_t(std::uint64_t)>& fn) const;

    /// Full numeric evaluation; every generator appearing in the polynomial
    /// must have a value in the assignment.
    ComplexRational evaluate(const std::map<std::uint64_t, ComplexRational>& assignment) const;

    /// All generator keys appearing in the polynomial, sorted.
    std::vector<std::uint64_t> support() const;

    std::string str() const;

    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
        return os << p.str();
    }
};

}  // namespace apeq

#endif  // APEQ_POLYNOMIAL_HPP
