// Benchmark: serial reference kernels against their OpenMP counterparts.
// Every timed pair also cross-checks that both routes produce identical
// results, so the benchmark doubles as a consistency run.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "apeq/families.hpp"
#include "apeq/powerrule.hpp"
#include "apeq/symmetrize.hpp"

using namespace apeq;

namespace {

double time_ms(const std::function<void()>& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

std::vector<Equation> build_batch(unsigned pmax, unsigned qmax) {
    std::vector<Equation> eqs;
    for (unsigned p = 1; p <= pmax; ++p)
        for (unsigned q = 0; q <= qmax; ++q) eqs.push_back(family_derivation_pair(p, q));
    for (unsigned p = 2; p <= pmax; ++p)
        for (unsigned q = 1; q <= qmax; ++q)
            eqs.push_back(family_affine_pair(p, q, ComplexRational(2), ComplexRational(3),
                                             ComplexRational(1, 1), ComplexRational(1, 2)));
    for (unsigned w = 3; w <= pmax + qmax; ++w)
        eqs.push_back(family_hom_scaled(w, ComplexRational(0, 2), ComplexRational(3),
                                        ComplexRational(1), ComplexRational(2)));
    return eqs;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"serial vs. OpenMP benchmark for the expansion kernels"};
    unsigned weight = 6;
    unsigned pmax = 10, qmax = 10;
    unsigned kmax = 9, power = 7;
    app.add_option("--weight", weight, "symmetrization weight N (N! permutations)")
        ->capture_default_str();
    app.add_option("--pmax", pmax, "largest p in the verification batch")
        ->capture_default_str();
    app.add_option("--qmax", qmax, "largest q in the verification batch")
        ->capture_default_str();
    app.add_option("--kmax", kmax, "largest derivation order in the power-rule table")
        ->capture_default_str();
    app.add_option("--power", power, "exponent p in the power-rule table")
        ->capture_default_str();
    CLI11_PARSE(app, argc, argv);

    std::printf("OpenMP threads: %d\n\n", omp_get_max_threads());

    // --- symmetrization: N! permutation loop, serial vs. parallel vs. subsets
    if (weight < 2) weight = 2;
    Equation eq = family_derivation_pair(weight / 2, weight - weight / 2);
    std::printf("symmetrize %s  (weight %u)\n", eq.str().c_str(), weight);
    Polynomial s_ref, s_par, s_sub;
    double t_ref = time_ms([&] { s_ref = symmetrize_reference(eq); });
    double t_par = time_ms([&] { s_par = symmetrize_parallel(eq); });
    double t_sub = time_ms([&] { s_sub = symmetrize_subsets(eq); });
    std::printf("  reference : %9.2f ms\n", t_ref);
    std::printf("  parallel  : %9.2f ms   speedup %.2fx\n", t_par, t_ref / t_par);
    std::printf("  subsets   : %9.2f ms   speedup %.2fx\n", t_sub, t_ref / t_sub);
    std::printf("  agreement : %s\n\n",
                (s_ref == s_par && s_ref == s_sub) ? "exact" : "MISMATCH");

    // --- batch verification across a family grid
    std::vector<Equation> eqs = build_batch(pmax, qmax);
    std::printf("batch verify: %zu equations\n", eqs.size());
    std::vector<char> r_ser, r_par;
    double t_bser = time_ms([&] { r_ser = batch_verify(eqs); });
    double t_bpar = time_ms([&] { r_par = batch_verify_parallel(eqs); });
    std::size_t solved = 0;
    for (char c : r_ser) solved += c;
    std::printf("  serial    : %9.2f ms\n", t_bser);
    std::printf("  parallel  : %9.2f ms   speedup %.2fx\n", t_bpar, t_bser / t_bpar);
    std::printf("  agreement : %s (%zu/%zu identities)\n\n",
                r_ser == r_par ? "exact" : "MISMATCH", solved, eqs.size());

    // --- power-rule routes
    std::printf("power rule d^k(x^%u), k = 1..%u\n", power, kmax);
    std::printf("  %3s %12s %14s %12s %6s\n", "k", "partition", "compositions", "leibniz",
                "terms");
    for (unsigned k = 1; k <= kmax; ++k) {
        Polynomial a, b, c;
        double ta = time_ms([&] { a = power_rule_partition(k, power); });
        double tb = time_ms([&] { b = power_rule_compositions(k, power); });
        double tc = time_ms([&] { c = power_rule_leibniz(k, power); });
        bool same = a == b && b == c;
        std::printf("  %3u %9.2f ms %11.2f ms %9.2f ms %6zu %s\n", k, ta, tb, tc, a.size(),
                    same ? "" : "MISMATCH");
        if (!same) return 1;
    }
    return 0;
}
