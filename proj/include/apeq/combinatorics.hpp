#ifndef APEQ_COMBINATORICS_HPP
#define APEQ_COMBINATORICS_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "apeq/rational.hpp"

namespace apeq {

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

/// multinomial(k; parts) = k! / (parts[0]! * parts[1]! * ...), requires sum(parts) == k.
BigInt multinomial(unsigned k, const std::vector<unsigned>& parts);

/// falling_factorial(p, m) = p * (p-1) * ... * (p-m+1), with the empty product for m == 0.
BigInt falling_factorial(unsigned p, unsigned m);

/// Signed Stirling numbers of the first kind s(n, k):
/// x(x-1)...(x-n+1) = sum_k s(n,k) x^k.
BigInt stirling_first_signed(unsigned n, unsigned k);

/// A partition of k with parts of size >= 1, stored as multiplicities:
/// mult[t] = number of parts equal to t+1.  sum_t (t+1)*mult[t] == k.
struct Partition {
    std::vector<unsigned> mult;
    unsigned total = 0;       // k
    unsigned num_parts = 0;   // sum of multiplicities
};

/// All partitions of k into at most max_parts parts (k >= 1).
/// For k == 0, returns the single empty partition.
std::vector<Partition> partitions_bounded(unsigned k, unsigned max_parts);

/// Enumerates compositions l_1 + ... + l_p = k with l_i >= 0, in lexicographic
/// order, invoking fn on each.  The vector passed to fn is reused between calls.
void for_each_composition(unsigned k, unsigned p,
                          const std::function<void(const std::vector<unsigned>&)>& fn);

/// Writes the rank-th permutation of {0, 1, ..., n-1} in lexicographic order
/// into out (factorial number system unranking).  rank must be < n!.
void unrank_permutation(BigInt rank, unsigned n, std::vector<unsigned>& out);

}  // namespace apeq

#endif  // APEQ_COMBINATORICS_HPP
