#ifndef APEQ_SYMBOLS_HPP
#define APEQ_SYMBOLS_HPP

#include <cstdint>
#include <string>

namespace apeq {

/// One formal, algebraically independent symbol of the expansion algebra.
///
/// Semantics of Generator{var, hom, ord}:
///   hom == 0, ord == 0   ->  x_var                  (the field element itself)
///   hom == 0, ord == j   ->  d^j(x_var)             (j-fold composition of the derivation)
///   hom == e, ord == 0   ->  phi_e(x_var)           (field homomorphism applied to x_var)
///   hom == e, ord == j   ->  phi_e(d_e^j(x_var))    (per-homomorphism derivation tower)
///
/// Distinct generators are treated as algebraically independent over the
/// coefficient field, which is what makes coefficient matching a complete
/// test for identities in this class of maps.
struct Generator {
    std::uint16_t var = 0;
    std::uint16_t hom = 0;
    std::uint32_t ord = 0;

    std::uint64_t key() const {
        return (static_cast<std::uint64_t>(var) << 48) |
               (static_cast<std::uint64_t>(hom) << 32) | ord;
    }

    static Generator from_key(std::uint64_t k) {
        Generator g;
        g.var = static_cast<std::uint16_t>(k >> 48);
        g.hom = static_cast<std::uint16_t>((k >> 32) & 0xffffu);
        g.ord = static_cast<std::uint32_t>(k & 0xffffffffu);
        return g;
    }

    friend bool operator==(const Generator&, const Generator&) = default;
    friend auto operator<=>(const Generator& a, const Generator& b) { return a.key() <=> b.key(); }
};

inline std::string to_string(const Generator& g) {
    std::string base = "x";
    if (g.var != 0) base += std::to_string(g.var);
    if (g.ord > 0) {
        if (g.ord == 1)
            base = "d(" + base + ")";
        else
            base = "d^" + std::to_string(g.ord) + "(" + base + ")";
    }
    if (g.hom != 0) base = "phi" + std::to_string(g.hom) + "(" + base + ")";
    return base;
}

}  // namespace apeq

#endif  // APEQ_SYMBOLS_HPP
