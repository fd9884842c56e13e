#include <doctest.h>

#include <stdexcept>

#include "apeq/families.hpp"
#include "apeq/symmetrize.hpp"

using namespace apeq;

namespace {

std::vector<Equation> homogeneous_samples() {
    std::vector<Equation> eqs;
    eqs.push_back(family_derivation_pair(2, 2));                       // weight 4, solution
    eqs.push_back(family_derivation_pair(3, 2));                       // weight 5, solution
    eqs.push_back(family_hom_difference(5));                           // weight 5, solution
    eqs.push_back(family_second_order(5));                             // weight 5, solution
    Equation non1;                                                     // weight 4, not a solution
    non1.add(AdditiveMap::derivation(), 2, AdditiveMap::derivation(), 2);
    eqs.push_back(non1);
    Equation non2;                                                     // weight 5, not a solution
    non2.add(AdditiveMap::derivation(2), 2, AdditiveMap::identity(), 3);
    non2.add(AdditiveMap::hom(1), 1, AdditiveMap::derivation(), 4);
    eqs.push_back(non2);
    return eqs;
}

}  // namespace

TEST_SUITE("symmetrize") {

TEST_CASE("the three routes agree exactly") {
    for (const Equation& eq : homogeneous_samples()) {
        CAPTURE(eq.str());
        Polynomial ref = symmetrize_reference(eq);
        CHECK(ref == symmetrize_parallel(eq));
        CHECK(ref == symmetrize_subsets(eq));
    }
}

TEST_CASE("diagonal substitution recovers the single-variable expansion") {
    for (const Equation& eq : homogeneous_samples()) {
        CAPTURE(eq.str());
        CHECK(diagonalize(symmetrize_subsets(eq)) == eq.expand());
    }
}

TEST_CASE("solutions symmetrize to zero, non-solutions do not") {
    CHECK(symmetrize_subsets(family_derivation_pair(2, 3)).is_zero());
    CHECK(symmetrize_subsets(family_hom_difference(4)).is_zero());
    Equation non;
    non.add(AdditiveMap::derivation(), 2, AdditiveMap::derivation(), 2);
    CHECK(!symmetrize_subsets(non).is_zero());
}

TEST_CASE("symmetrization splits variables correctly on a known case") {
    // For f(x^2)*g(x)^0 with f = d, N = 2:
    // (1/2)[d(x1 x2) + d(x2 x1)] = x1 d(x2) + d(x1) x2.
    Equation eq;
    eq.add(AdditiveMap::derivation(), 2, AdditiveMap::identity(), 0);
    Polynomial s = symmetrize_reference(eq);
    Polynomial expect =
        Polynomial::generator(Generator{1, 0, 0}) * Polynomial::generator(Generator{2, 0, 1}) +
        Polynomial::generator(Generator{1, 0, 1}) * Polynomial::generator(Generator{2, 0, 0});
    CHECK(s == expect);
}

TEST_CASE("inhomogeneous input is rejected") {
    Equation eq;
    eq.add(AdditiveMap::derivation(), 2, AdditiveMap::derivation(), 3);
    eq.add(AdditiveMap::derivation(), 3, AdditiveMap::derivation(), 5);
    CHECK_THROWS_AS(symmetrize_reference(eq), std::invalid_argument);
    CHECK_THROWS_AS(symmetrize_parallel(eq), std::invalid_argument);
    CHECK_THROWS_AS(symmetrize_subsets(eq), std::invalid_argument);
}

TEST_CASE("batch verification routes agree") {
    std::vector<Equation> eqs;
    for (unsigned p = 1; p <= 6; ++p)
        for (unsigned q = 0; q <= 5; ++q) eqs.push_back(family_derivation_pair(p, q));
    Equation non;
    non.add(AdditiveMap::derivation(), 2, AdditiveMap::derivation(), 2);
    eqs.push_back(non);
    auto serial = batch_verify(eqs);
    auto parallel = batch_verify_parallel(eqs);
    CHECK(serial == parallel);
    CHECK(serial.back() == 0);
    std::size_t solved = 0;
    for (char c : serial) solved += c;
    CHECK(solved == eqs.size() - 1);
}

}  // TEST_SUITE
