#ifndef APEQ_ADDITIVE_MAP_HPP
#define APEQ_ADDITIVE_MAP_HPP

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "apeq/polynomial.hpp"
#include "apeq/rational.hpp"

namespace apeq {

/// One summand of an additive map: coeff * phi_hom o d_hom^ord, where hom 0
/// is the identity embedding and d_hom is the derivation tied to that tower.
struct MapTerm {
    ComplexRational coeff;
    std::uint16_t hom = 0;
    std::uint32_t ord = 0;
};

/// Finite linear combination of tower maps.  These are the f's and g's of the
/// equations: additive maps built from derivation powers and homomorphisms.
class AdditiveMap {
public:
    AdditiveMap() = default;

    static AdditiveMap zero() { return AdditiveMap(); }
    static AdditiveMap identity(const ComplexRational& c = ComplexRational(1));
    /// c * d^ord on tower hom (ord >= 1).
    static AdditiveMap derivation(std::uint32_t ord = 1,
                                  const ComplexRational& c = ComplexRational(1),
                                  std::uint16_t hom = 0);
    /// c * phi_hom (hom >= 1).
    static AdditiveMap hom(std::uint16_t e, const ComplexRational& c = ComplexRational(1));
    /// c * phi_hom o d_hom^ord.
    static AdditiveMap hom_derivation(std::uint16_t e, std::uint32_t ord,
                                      const ComplexRational& c = ComplexRational(1));

    void add_term(const ComplexRational& c, std::uint16_t hom, std::uint32_t ord);

    const std::vector<MapTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Highest derivation order across all summands (0 for the zero map).
    std::uint32_t max_order() const;
    /// True when the map is c * id for some nonzero c.
    bool is_scaled_identity() const;
    ComplexRational coefficient(std::uint16_t hom, std::uint32_t ord) const;

    AdditiveMap& operator+=(const AdditiveMap& o);
    AdditiveMap& operator-=(const AdditiveMap& o);
    AdditiveMap& operator*=(const ComplexRational& c);
    friend AdditiveMap operator+(AdditiveMap a, const AdditiveMap& b) { return a += b; }
    friend AdditiveMap operator-(AdditiveMap a, const AdditiveMap& b) { return a -= b; }
    friend AdditiveMap operator*(AdditiveMap a, const ComplexRational& c) { return a *= c; }
    friend AdditiveMap operator*(const ComplexRational& c, AdditiveMap a) { return a *= c; }
    friend bool operator==(const AdditiveMap&, const AdditiveMap&);

    /// The map applied to x_var^p, expanded into generators.
    Polynomial apply_power(unsigned p, std::uint16_t var = 0) const;

    /// The map applied to the bare variable x_var.
    Polynomial apply(std::uint16_t var) const;

    /// The map applied to a product of distinct variables (the symmetrized
    /// form needs f_i on x_{s_1} * ... * x_{s_p}).
    Polynomial apply_product(const std::vector<std::uint16_t>& vars) const;

    std::string str() const;

    friend std::ostream& operator<<(std::ostream& os, const AdditiveMap& m) {
        return os << m.str();
    }

private:
    std::vector<MapTerm> terms_;
};

bool operator==(const MapTerm& a, const MapTerm& b);

}  // namespace apeq

#endif  // APEQ_ADDITIVE_MAP_HPP
