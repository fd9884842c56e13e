#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "apeq/rational.hpp"

using apeq::ComplexRational;
using apeq::Rational;

TEST_SUITE("rational") {

TEST_CASE("imaginary unit squares to minus one") {
    CHECK(ComplexRational::i() * ComplexRational::i() == ComplexRational(-1));
    CHECK(ComplexRational::i().pow(4) == ComplexRational(1));
}

TEST_CASE("field axioms on sample values") {
    std::vector<ComplexRational> samples = {
        ComplexRational(0),
        ComplexRational(1),
        ComplexRational(-3),
        ComplexRational::i(),
        ComplexRational(Rational(2) / Rational(3)),
        ComplexRational::from_parts(1, 2, -5, 7),
        ComplexRational::from_parts(-4, 1, 3, 2),
    };
    for (const auto& a : samples)
        for (const auto& b : samples) {
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK(a - b == -(b - a));
            for (const auto& c : samples) {
                CHECK((a + b) + c == a + (b + c));
                CHECK((a * b) * c == a * (b * c));
                CHECK(a * (b + c) == a * b + a * c);
            }
            if (!b.is_zero()) CHECK((a / b) * b == a);
        }
}

TEST_CASE("division by zero throws") {
    CHECK_THROWS_AS(ComplexRational(1) / ComplexRational(0), std::domain_error);
}

TEST_CASE("conjugate and norm") {
    ComplexRational z = ComplexRational::from_parts(3, 4, -2, 5);
    CHECK(z.conj().imag() == -z.imag());
    CHECK(ComplexRational(z.norm()) == z * z.conj());
    CHECK(z.norm() >= 0);
}

TEST_CASE("powers by squaring match repeated products") {
    ComplexRational z = ComplexRational::from_parts(1, 2, 1, 3);
    ComplexRational prod(1);
    for (unsigned e = 0; e <= 9; ++e) {
        CHECK(z.pow(e) == prod);
        prod *= z;
    }
}

TEST_CASE("string rendering") {
    CHECK(ComplexRational(0).str() == "0");
    CHECK(ComplexRational(7).str() == "7");
    CHECK(ComplexRational(Rational(-3) / Rational(2)).str() == "-3/2");
    CHECK(ComplexRational::i().str() == "i");
    CHECK((-ComplexRational::i()).str() == "-i");
    CHECK(ComplexRational(2, -3).str() == "2-3i");
    CHECK(ComplexRational::from_parts(1, 2, 5, 7).str() == "1/2+5/7i");
    CHECK(ComplexRational(0, 2).str() == "2i");
}

TEST_CASE("exactness survives deep products") {
    // (1/3 + i/7)^6 * (1/3 + i/7)^-6 style check without pow of inverses:
    ComplexRational z = ComplexRational::from_parts(1, 3, 1, 7);
    ComplexRational w = z.pow(6);
    ComplexRational back = w;
    for (int k = 0; k < 6; ++k) back /= z;
    CHECK(back == ComplexRational(1));
}

}  // TEST_SUITE
