#include "apeq/combinatorics.hpp"

#include <map>
#include <stdexcept>

namespace apeq {

BigInt factorial(unsigned n) {
    BigInt r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (unsigned i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);  // exact: product of j consecutive integers is divisible by j!
    }
    return r;
}

BigInt multinomial(unsigned k, const std::vector<unsigned>& parts) {
    unsigned sum = 0;
    for (unsigned p : parts) sum += p;
    if (sum != k) throw std::invalid_argument("multinomial: parts do not sum to k");
    BigInt r = factorial(k);
    for (unsigned p : parts) r /= factorial(p);
    return r;
}

BigInt falling_factorial(unsigned p, unsigned m) {
    BigInt r = 1;
    for (unsigned i = 0; i < m; ++i) {
        if (i > p) return 0;
        r *= static_cast<int>(p - i);
    }
    return r;
}

BigInt stirling_first_signed(unsigned n, unsigned k) {
    // s(n, k) via the recurrence s(n+1, k) = s(n, k-1) - n * s(n, k).
    if (k > n) return 0;
    std::vector<BigInt> row(n + 1, 0);
    row[0] = 1;  // s(0, 0) = 1
    for (unsigned m = 1; m <= n; ++m) {
        for (unsigned j = m; j >= 1; --j)
            row[j] = row[j - 1] - BigInt(m - 1) * row[j];
        row[0] *= -static_cast<int>(m - 1);
    }
    return row[k];
}

std::vector<Partition> partitions_bounded(unsigned k, unsigned max_parts) {
    std::vector<Partition> out;
    if (k == 0) {
        out.push_back(Partition{std::vector<unsigned>{}, 0, 0});
        return out;
    }
    // Parts chosen in nonincreasing order; counts[] accumulates multiplicities.
    std::vector<unsigned> counts(k, 0);
    std::function<void(unsigned, unsigned, unsigned)> rec =
        [&](unsigned remaining, unsigned largest, unsigned used) {
            if (remaining == 0) {
                Partition p;
                p.mult = counts;
                p.total = k;
                p.num_parts = used;
                out.push_back(std::move(p));
                return;
            }
            if (used == max_parts) return;
            for (unsigned part = std::min(remaining, largest); part >= 1; --part) {
                ++counts[part - 1];
                rec(remaining - part, part, used + 1);
                --counts[part - 1];
            }
        };
    rec(k, k, 0);
    return out;
}

void for_each_composition(unsigned k, unsigned p,
                          const std::function<void(const std::vector<unsigned>&)>& fn) {
    if (p == 0) {
        if (k == 0) {
            std::vector<unsigned> empty;
            fn(empty);
        }
        return;
    }
    std::vector<unsigned> l(p, 0);
    std::function<void(unsigned, unsigned)> rec = [&](unsigned idx, unsigned remaining) {
        if (idx == p - 1) {
            l[idx] = remaining;
            fn(l);
            return;
        }
        for (unsigned v = 0; v <= remaining; ++v) {
            l[idx] = v;
            rec(idx + 1, remaining - v);
        }
    };
    rec(0, k);
}

void unrank_permutation(BigInt rank, unsigned n, std::vector<unsigned>& out) {
    out.resize(n);
    std::vector<unsigned> pool(n);
    for (unsigned i = 0; i < n; ++i) pool[i] = i;
    BigInt f = factorial(n);
    for (unsigned i = 0; i < n; ++i) {
        f /= static_cast<int>(n - i);
        BigInt q = rank / f;
        rank %= f;
        auto idx = static_cast<std::size_t>(q);
        out[i] = pool[idx];
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
    }
}

}  // namespace apeq
