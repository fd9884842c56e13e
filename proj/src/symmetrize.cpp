#include "apeq/symmetrize.hpp"

#include <omp.h>

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "apeq/combinatorics.hpp"

namespace apeq {

namespace {

unsigned homogeneous_weight(const Equation& eq) {
    ConditionReport r = check_conditions(eq);
    if (eq.terms.empty() || !r.homogeneous)
        throw std::invalid_argument("symmetrize: equation must be homogeneous");
    return r.weight;
}

/// The summand for one permutation perm of {1..N} (1-based variable labels).
Polynomial permutation_summand(const Equation& eq, const std::vector<std::uint16_t>& perm) {
    Polynomial acc;
    for (const auto& t : eq.terms) {
        std::vector<std::uint16_t> head(perm.begin(), perm.begin() + t.p);
        Polynomial prod = t.f.apply_product(head);
        for (std::size_t j = t.p; j < perm.size(); ++j) prod *= t.g.apply(perm[j]);
        acc += prod;
    }
    return acc;
}

}  // namespace

Polynomial symmetrize_reference(const Equation& eq) {
    const unsigned n = homogeneous_weight(eq);
    std::vector<std::uint16_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::uint16_t{1});
    Polynomial total;
    do {
        total += permutation_summand(eq, perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    total *= ComplexRational(Rational(1) / Rational(factorial(n)));
    return total;
}

Polynomial symmetrize_parallel(const Equation& eq) {
    const unsigned n = homogeneous_weight(eq);
    const long long total_perms = static_cast<long long>(factorial(n));
    Polynomial total;
#pragma omp parallel
    {
        Polynomial local;
        std::vector<unsigned> zero_based;
        std::vector<std::uint16_t> perm(n);
#pragma omp for schedule(static)
        for (long long rank = 0; rank < total_perms; ++rank) {
            unrank_permutation(BigInt(rank), n, zero_based);
            for (unsigned i = 0; i < n; ++i)
                perm[i] = static_cast<std::uint16_t>(zero_based[i] + 1);
            local += permutation_summand(eq, perm);
        }
#pragma omp critical
        total += local;
    }
    total *= ComplexRational(Rational(1) / Rational(factorial(n)));
    return total;
}

Polynomial symmetrize_subsets(const Equation& eq) {
    const unsigned n = homogeneous_weight(eq);
    const Rational nfact(factorial(n));
    Polynomial total;
    for (const auto& t : eq.terms) {
        const ComplexRational weight(Rational(factorial(t.p) * factorial(t.q)) / nfact);
        // Lexicographic p-element subsets of {1..N}.
        std::vector<std::uint16_t> subset(t.p);
        std::iota(subset.begin(), subset.end(), std::uint16_t{1});
        while (true) {
            Polynomial prod = t.f.apply_product(subset);
            std::size_t si = 0;
            for (std::uint16_t v = 1; v <= n; ++v) {
                if (si < subset.size() && subset[si] == v) {
                    ++si;
                    continue;
                }
                prod *= t.g.apply(v);
            }
            total += weight * prod;
            // Advance to the next subset.
            std::size_t k = t.p;
            if (k == 0) break;
            std::size_t i = k;
            while (i > 0 && subset[i - 1] == n - (k - i)) --i;
            if (i == 0) break;
            ++subset[i - 1];
            for (std::size_t j = i; j < k; ++j) subset[j] = subset[j - 1] + 1;
        }
    }
    return total;
}

Polynomial diagonalize(const Polynomial& p, std::uint16_t to_var) {
    return p.map_generators([to_var](std::uint64_t key) {
        Generator g = Generator::from_key(key);
        g.var = to_var;
        return g.key();
    });
}

std::vector<char> batch_verify(const std::vector<Equation>& eqs) {
    std::vector<char> out(eqs.size(), 0);
    for (std::size_t i = 0; i < eqs.size(); ++i) out[i] = eqs[i].verify() ? 1 : 0;
    return out;
}

std::vector<char> batch_verify_parallel(const std::vector<Equation>& eqs) {
    std::vector<char> out(eqs.size(), 0);
    const long long n = static_cast<long long>(eqs.size());
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < n; ++i)
        out[static_cast<std::size_t>(i)] = eqs[static_cast<std::size_t>(i)].verify() ? 1 : 0;
    return out;
}

}  // namespace apeq
