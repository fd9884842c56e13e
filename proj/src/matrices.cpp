#include "apeq/matrices.hpp"

#include <cstddef>

#include "apeq/combinatorics.hpp"

namespace apeq {

ComplexRational determinant(Matrix a) {
    const std::size_t n = a.size();
    ComplexRational det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col].is_zero()) ++pivot;
        if (pivot == n) return ComplexRational(0);
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            det = -det;
        }
        det *= a[col][col];
        ComplexRational inv = ComplexRational(1) / a[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a[r][col].is_zero()) continue;
            ComplexRational factor = a[r][col] * inv;
            for (std::size_t c = col; c < n; ++c) a[r][c] -= factor * a[col][c];
        }
    }
    return det;
}

Matrix power_moment_matrix(const std::vector<unsigned>& ps) {
    const std::size_t n = ps.size();
    Matrix m(n, std::vector<ComplexRational>(n, ComplexRational(0)));
    for (std::size_t t = 0; t < n; ++t)
        for (std::size_t i = 0; i < n; ++i) {
            BigInt v = 1;
            for (std::size_t r = 0; r < t + 1; ++r) v *= ps[i];
            m[t][i] = ComplexRational(v);
        }
    return m;
}

Matrix falling_factorial_matrix(const std::vector<unsigned>& ps) {
    const std::size_t n = ps.size();
    Matrix m(n, std::vector<ComplexRational>(n, ComplexRational(0)));
    for (std::size_t t = 0; t < n; ++t)
        for (std::size_t i = 0; i < n; ++i)
            m[t][i] = ComplexRational(falling_factorial(ps[i], static_cast<unsigned>(t) + 1));
    return m;
}

ComplexRational exponent_determinant_closed_form(const std::vector<unsigned>& ps) {
    BigInt prod = 1;
    for (unsigned p : ps) prod *= p;
    for (std::size_t i = 0; i < ps.size(); ++i)
        for (std::size_t j = i + 1; j < ps.size(); ++j)
            prod *= BigInt(static_cast<long long>(ps[j]) - static_cast<long long>(ps[i]));
    return ComplexRational(prod);
}

}  // namespace apeq
