#include <doctest.h>

#include <stdexcept>

#include "apeq/families.hpp"
#include "apeq/polynomial.hpp"

using namespace apeq;

namespace {

const ComplexRational k2(2), k3(3), k5(5);
const ComplexRational half = ComplexRational(Rational(1) / Rational(2));
const ComplexRational onei = ComplexRational(1, 1);  // 1 + i

}  // namespace

TEST_SUITE("families") {

TEST_CASE("derivation pair verifies across a grid") {
    for (unsigned p = 1; p <= 7; ++p)
        for (unsigned q = 0; q <= 6; ++q) {
            CAPTURE(p);
            CAPTURE(q);
            CHECK(family_derivation_pair(p, q).verify());
        }
    CHECK_THROWS_AS(family_derivation_pair(0, 3), std::invalid_argument);
}

TEST_CASE("affine pair verifies, including complex parameters") {
    CHECK(family_affine_pair(3, 2, k2, k3, k5, half).verify());
    CHECK(family_affine_pair(2, 4, onei, ComplexRational(0, 1), k2, -half).verify());
    CHECK(family_affine_pair(5, 1, k2, k2, k2, ComplexRational(0)).verify());
}

TEST_CASE("perturbing the solved coefficient breaks the affine pair") {
    Equation eq = family_affine_pair(3, 2, k2, k3, k5, half);
    REQUIRE(eq.verify());
    eq.terms[1].f *= k2;  // destroys the constraint linking the two terms
    CHECK(!eq.verify());
    // A shift mismatch between g1 and g2 also breaks it.
    Equation eq2 = family_affine_pair(3, 2, k2, k3, k5, half);
    eq2.terms[1].g += AdditiveMap::identity(onei);
    CHECK(!eq2.verify());
}

TEST_CASE("degenerate pair verifies and needs its constraints") {
    Equation eq = family_degenerate_pair(2, 3, k2, k3, k5, half);
    CHECK(eq.verify());
    Equation zero_l10 = family_degenerate_pair(2, 3, k2, ComplexRational(0), k5, half);
    CHECK(zero_l10.verify());
    Equation broken = family_degenerate_pair(2, 3, k2, k3, k5, half);
    broken.terms[0].f *= k3;
    CHECK(!broken.verify());
}

TEST_CASE("scaled-identity pair verifies on asymmetric exponents") {
    CHECK(family_scaled_identity_pair(1, 4, 3, 2, k2, k3, k5, half).verify());
    CHECK(family_scaled_identity_pair(2, 5, 6, 1, onei, ComplexRational(-3), k2, k2).verify());
    CHECK_THROWS_AS(family_scaled_identity_pair(2, 3, 2, 3, k2, k3, k5, half),
                    std::invalid_argument);
    CHECK_THROWS_AS(family_scaled_identity_pair(2, 3, 3, 3, k2, k3, k5, half),
                    std::invalid_argument);
}

TEST_CASE("proportional family expands to the residual times x^N") {
    std::vector<unsigned> ps{2, 4}, qs{5, 3};
    std::vector<ComplexRational> ls{k2, k3}, cs{half, onei};
    Equation eq = family_proportional(ps, qs, ls, cs);
    Polynomial expect =
        proportional_residual(qs, ls, cs) * Polynomial::generator(Generator{0, 0, 0}).pow(7);
    CHECK(eq.expand() == expect);
    CHECK(!eq.verify());
}

TEST_CASE("a Gaussian instance makes the proportional residual vanish") {
    // Equal q's: c1 = i, c2 = 1, l1 = l2 = 1 gives i^2 + 1 = 0.
    std::vector<unsigned> qs{2, 2};
    std::vector<ComplexRational> ls{ComplexRational(1), ComplexRational(1)};
    std::vector<ComplexRational> cs{ComplexRational(0, 1), ComplexRational(1)};
    CHECK(proportional_residual(qs, ls, cs).is_zero());
    // Shared weight 5: residual = c1^2 + c2^4 with c1 = 2, c2 = 1+i is
    // 4 + (1+i)^4 = 4 - 4 = 0, so the equation itself is an identity.
    std::vector<unsigned> ps2{3, 1}, qs2{2, 4};
    std::vector<ComplexRational> ls2{ComplexRational(1), ComplexRational(1)};
    std::vector<ComplexRational> cs2{k2, onei};
    CHECK(proportional_residual(qs2, ls2, cs2).is_zero());
    CHECK(family_proportional(ps2, qs2, ls2, cs2).verify());
}

TEST_CASE("hom difference family verifies for all small weights") {
    for (unsigned n = 3; n <= 9; ++n) {
        CAPTURE(n);
        CHECK(family_hom_difference(n).verify());
    }
    CHECK_THROWS_AS(family_hom_difference(2), std::invalid_argument);
}

TEST_CASE("hom scaled family verifies and degenerates to the difference family") {
    CHECK(family_hom_scaled(5, k2, k3, half, onei).verify());
    CHECK(family_hom_scaled(4, ComplexRational(0, 2), k3, ComplexRational(1), k2).verify());
    CHECK(family_hom_scaled(7, onei, onei, onei, onei).verify());
    // c = -1 with unit scalars reproduces the difference family up to term
    // order and overall sign.
    Equation a = family_hom_scaled(4, ComplexRational(-1), ComplexRational(1),
                                   ComplexRational(1), ComplexRational(1));
    Equation b = family_hom_difference(4);
    REQUIRE(a.terms.size() == 2);
    CHECK(a.terms[0].f == ComplexRational(-1) * b.terms[1].f);
    CHECK(a.terms[0].g == b.terms[1].g);
    CHECK(a.terms[1].f == ComplexRational(-1) * b.terms[0].f);
    CHECK(a.terms[1].g == b.terms[0].g);
}

TEST_CASE("breaking the hom scaled constraint yields a non-identity") {
    Equation eq = family_hom_scaled(5, k2, k3, half, onei);
    eq.terms[0].f *= k5;
    CHECK(!eq.verify());
}

TEST_CASE("repeated exponent family exists exactly when a root of -1 does") {
    CHECK(family_repeated_exponent(3, 5).verify());   // l = -1
    CHECK(family_repeated_exponent(2, 2).verify());   // l = i
    CHECK(family_repeated_exponent(4, 6).verify());   // l = i
    CHECK_THROWS_AS(family_repeated_exponent(3, 4), std::invalid_argument);
    CHECK_THROWS_AS(family_repeated_exponent(3, 8), std::invalid_argument);
    CHECK_THROWS_AS(family_repeated_exponent(3, 0), std::invalid_argument);
}

TEST_CASE("second order family verifies and requires weight 5") {
    for (unsigned n = 5; n <= 9; ++n) {
        CAPTURE(n);
        CHECK(family_second_order(n).verify());
    }
    CHECK_THROWS_AS(family_second_order(4), std::invalid_argument);
}

TEST_CASE("shape dichotomy sorts the families correctly") {
    auto shape = [](const Equation& eq) { return classify_shape(eq).shape; };
    CHECK(shape(family_derivation_pair(3, 2)) == SolutionShape::AllOrdersAtMostOne);
    CHECK(shape(family_affine_pair(3, 2, k2, k3, k5, half)) ==
          SolutionShape::AllOrdersAtMostOne);
    CHECK(shape(family_degenerate_pair(2, 3, k2, k3, k5, half)) ==
          SolutionShape::AllOrdersAtMostOne);
    CHECK(shape(family_hom_difference(5)) == SolutionShape::AllOrdersAtMostOne);
    ShapeReport r = classify_shape(family_second_order(6));
    CHECK(r.shape == SolutionShape::MaxOrderWithLinearG);
    CHECK(r.max_order == 2);
    REQUIRE(r.witnesses.size() == 2);
    CHECK(r.witnesses[0] == 0);
    CHECK(r.witnesses[1] == 2);
    // A high-order map whose partner g is not a scaled identity is neither.
    Equation odd;
    odd.add(AdditiveMap::derivation(3), 2, AdditiveMap::derivation(), 2);
    CHECK(classify_shape(odd).shape == SolutionShape::Other);
}

}  // TEST_SUITE
