#include "apeq/powerrule.hpp"

#include <stdexcept>

namespace apeq {

BigInt partition_coefficient(unsigned k, unsigned p, const Partition& part) {
    if (part.total != k) throw std::invalid_argument("partition_coefficient: wrong total");
    BigInt denom = 1;
    for (unsigned t = 1; t <= part.mult.size(); ++t) {
        unsigned jt = part.mult[t - 1];
        if (jt == 0) continue;
        BigInt tf = factorial(t);
        for (unsigned r = 0; r < jt; ++r) denom *= tf;
        denom *= factorial(jt);
    }
    return factorial(k) / denom * falling_factorial(p, part.num_parts);
}

Polynomial power_rule_partition(unsigned k, unsigned p, std::uint16_t var, std::uint16_t hom) {
    Polynomial out;
    if (k == 0) {
        out.add_term(Monomial::from_generator(Generator{var, hom, 0}, p), ComplexRational(1));
        return out;
    }
    if (p == 0) return out;  // d^k(1) = 0 for k >= 1
    for (const Partition& part : partitions_bounded(k, p)) {
        BigInt coeff = partition_coefficient(k, p, part);
        if (coeff == 0) continue;
        Monomial m;
        for (unsigned t = 1; t <= part.mult.size(); ++t) {
            unsigned jt = part.mult[t - 1];
            if (jt == 0) continue;
            m.mul(Monomial::from_generator(Generator{var, hom, t}, jt));
        }
        if (p > part.num_parts)
            m.mul(Monomial::from_generator(Generator{var, hom, 0}, p - part.num_parts));
        out.add_term(m, ComplexRational(coeff));
    }
    return out;
}

Polynomial power_rule_compositions(unsigned k, unsigned p, std::uint16_t var, std::uint16_t hom) {
    Polynomial out;
    if (p == 0) {
        if (k == 0) out.add_term(Monomial::one(), ComplexRational(1));
        return out;
    }
    std::vector<unsigned> parts;
    for_each_composition(k, p, [&](const std::vector<unsigned>& l) {
        Monomial m;
        for (unsigned li : l) m.mul(Monomial::from_generator(Generator{var, hom, li}, 1));
        out.add_term(m, ComplexRational(multinomial(k, l)));
    });
    return out;
}

Polynomial formal_derivative(const Polynomial& p) {
    Polynomial out;
    for (const auto& [m, c] : p.terms) {
        for (std::size_t i = 0; i < m.factors.size(); ++i) {
            auto [k, e] = m.factors[i];
            Generator g = Generator::from_key(k);
            Generator dg{g.var, g.hom, g.ord + 1};
            // c * e * g^(e-1) * dg * (other factors)
            Monomial dm;
            for (std::size_t j = 0; j < m.factors.size(); ++j) {
                if (j == i) {
                    if (e > 1) dm.mul(Monomial{{{k, e - 1}}});
                } else {
                    dm.mul(Monomial{{m.factors[j]}});
                }
            }
            dm.mul(Monomial::from_generator(dg, 1));
            out.add_term(dm, c * ComplexRational(static_cast<long long>(e)));
        }
    }
    return out;
}

Polynomial power_rule_leibniz(unsigned k, unsigned p, std::uint16_t var, std::uint16_t hom) {
    Polynomial cur;
    cur.add_term(Monomial::from_generator(Generator{var, hom, 0}, p), ComplexRational(1));
    for (unsigned i = 0; i < k; ++i) cur = formal_derivative(cur);
    return cur;
}

Polynomial power_rule_product(unsigned k, const std::vector<std::uint16_t>& vars,
                              std::uint16_t hom) {
    Polynomial out;
    const unsigned p = static_cast<unsigned>(vars.size());
    if (p == 0) {
        if (k == 0) out.add_term(Monomial::one(), ComplexRational(1));
        return out;
    }
    for_each_composition(k, p, [&](const std::vector<unsigned>& l) {
        Monomial m;
        for (unsigned i = 0; i < p; ++i)
            m.mul(Monomial::from_generator(Generator{vars[i], hom, l[i]}, 1));
        out.add_term(m, ComplexRational(multinomial(k, l)));
    });
    return out;
}

}  // namespace apeq
