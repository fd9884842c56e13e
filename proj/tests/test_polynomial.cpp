#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "apeq/polynomial.hpp"

using namespace apeq;

namespace {

Polynomial gen(std::uint16_t var, std::uint16_t hom, std::uint32_t ord) {
    return Polynomial::generator(Generator{var, hom, ord});
}

// Small deterministic polynomial zoo for the ring-axiom checks.
std::vector<Polynomial> zoo() {
    Polynomial x = gen(0, 0, 0), dx = gen(0, 0, 1), y = gen(1, 0, 0), px = gen(0, 1, 0);
    return {
        Polynomial::zero(),
        Polynomial(ComplexRational(1)),
        x,
        dx,
        x * x - ComplexRational(2) * dx,
        ComplexRational::i() * y + x * dx,
        px * px * px + ComplexRational(Rational(1) / Rational(3)) * x,
        (x + y).pow(2),
    };
}

}  // namespace

TEST_SUITE("polynomial") {

TEST_CASE("generator key packing round-trips") {
    Generator g{12, 7, 123456};
    CHECK(Generator::from_key(g.key()) == g);
    CHECK(to_string(g) == "phi7(d^123456(x12))");
    CHECK(to_string(Generator{0, 0, 0}) == "x");
    CHECK(to_string(Generator{0, 0, 1}) == "d(x)");
    CHECK(to_string(Generator{3, 0, 2}) == "d^2(x3)");
    CHECK(to_string(Generator{0, 2, 0}) == "phi2(x)");
}

TEST_CASE("ring axioms on the zoo") {
    auto zs = zoo();
    for (const auto& a : zs)
        for (const auto& b : zs) {
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK(a - b == -(b - a));
            CHECK(a + Polynomial::zero() == a);
            CHECK(a * Polynomial(ComplexRational(1)) == a);
            CHECK((a * Polynomial::zero()).is_zero());
        }
    for (const auto& a : zs)
        for (const auto& b : zs)
            for (const auto& c : zs) {
                CHECK((a + b) + c == a + (b + c));
                CHECK((a * b) * c == a * (b * c));
                CHECK(a * (b + c) == a * b + a * c);
            }
}

TEST_CASE("cancellation removes terms exactly") {
    Polynomial x = gen(0, 0, 0), dx = gen(0, 0, 1);
    Polynomial p = x * dx + ComplexRational(3) * x;
    Polynomial q = -(x * dx) + ComplexRational(-3) * x;
    CHECK((p + q).is_zero());
    CHECK(p - p == Polynomial::zero());
}

TEST_CASE("binomial expansion identity") {
    Polynomial x = gen(0, 0, 0), y = gen(1, 0, 0);
    Polynomial lhs = (x + y).pow(5);
    Polynomial rhs;
    const long long binom5[] = {1, 5, 10, 10, 5, 1};
    for (unsigned k = 0; k <= 5; ++k)
        rhs += ComplexRational(binom5[k]) * x.pow(5 - k) * y.pow(k);
    CHECK(lhs == rhs);
    CHECK(lhs.size() == 6);
}

TEST_CASE("pow matches repeated multiplication") {
    Polynomial base = gen(0, 0, 0) + ComplexRational(2) * gen(0, 0, 1);
    Polynomial acc(ComplexRational(1));
    for (unsigned e = 0; e <= 6; ++e) {
        CHECK(base.pow(e) == acc);
        acc *= base;
    }
}

TEST_CASE("map_generators merges colliding factors") {
    Polynomial p = gen(1, 0, 0) * gen(2, 0, 0);  // x1*x2
    Polynomial q = p.map_generators([](std::uint64_t) { return Generator{0, 0, 0}.key(); });
    CHECK(q == gen(0, 0, 0).pow(2));  // x^2
}

TEST_CASE("evaluate is a ring homomorphism on samples") {
    Polynomial x = gen(0, 0, 0), dx = gen(0, 0, 1);
    std::map<std::uint64_t, ComplexRational> env{
        {Generator{0, 0, 0}.key(), ComplexRational(2, 1)},
        {Generator{0, 0, 1}.key(), ComplexRational(Rational(-1) / Rational(3))},
    };
    Polynomial a = x * x + dx, b = x - ComplexRational(4) * dx;
    CHECK((a * b).evaluate(env) == a.evaluate(env) * b.evaluate(env));
    CHECK((a + b).evaluate(env) == a.evaluate(env) + b.evaluate(env));
    CHECK_THROWS_AS(gen(5, 0, 0).evaluate(env), std::invalid_argument);
}

TEST_CASE("support lists generator keys") {
    Polynomial p = gen(0, 0, 0) * gen(0, 0, 2) + gen(1, 3, 0);
    auto s = p.support();
    CHECK(s.size() == 3);
    CHECK(std::find(s.begin(), s.end(), Generator{1, 3, 0}.key()) != s.end());
}

TEST_CASE("string rendering") {
    Polynomial x = gen(0, 0, 0), dx = gen(0, 0, 1);
    CHECK(Polynomial::zero().str() == "0");
    CHECK((x * x).str() == "x^2");
    CHECK((ComplexRational(-1) * x).str() == "-x");
    CHECK((ComplexRational(2) * x * dx - Polynomial(ComplexRational(7))).str() ==
          "-7 + 2*x*d(x)");
    CHECK((ComplexRational(1, 2) * x).str() == "(1+2i)*x");
}

}  // TEST_SUITE
