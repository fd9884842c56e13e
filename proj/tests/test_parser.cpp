#include <doctest.h>

#include "apeq/families.hpp"
#include "apeq/parser.hpp"

using namespace apeq;

TEST_SUITE("parser") {

TEST_CASE("scalars in every supported spelling") {
    CHECK(parse_scalar("3") == ComplexRational(3));
    CHECK(parse_scalar("-3/2") == ComplexRational(Rational(-3) / Rational(2)));
    CHECK(parse_scalar("i") == ComplexRational::i());
    CHECK(parse_scalar("-i") == -ComplexRational::i());
    CHECK(parse_scalar("2i") == ComplexRational(0, 2));
    CHECK(parse_scalar("1+2i") == ComplexRational(1, 2));
    CHECK(parse_scalar("(1/2-5/7i)") == ComplexRational::from_parts(1, 2, -5, 7));
    CHECK_THROWS_AS(parse_scalar("1/0"), ParseError);
    CHECK_THROWS_AS(parse_scalar("2+"), ParseError);
}

TEST_CASE("map expressions") {
    CHECK(parse_map_expr("id") == AdditiveMap::identity());
    CHECK(parse_map_expr("-id") == AdditiveMap::identity(ComplexRational(-1)));
    CHECK(parse_map_expr("D") == AdditiveMap::derivation());
    CHECK(parse_map_expr("D1") == AdditiveMap::derivation());
    CHECK(parse_map_expr("3*D2") == AdditiveMap::derivation(2, ComplexRational(3)));
    CHECK(parse_map_expr("phi2") == AdditiveMap::hom(2));
    CHECK(parse_map_expr("phi2.D3") == AdditiveMap::hom_derivation(2, 3));
    CHECK(parse_map_expr("i*D") == AdditiveMap::derivation(1, ComplexRational::i()));
    CHECK(parse_map_expr("(1+i)*phi1 - 2*id") ==
          AdditiveMap::hom(1, ComplexRational(1, 1)) +
              AdditiveMap::identity(ComplexRational(-2)));
    CHECK(parse_map_expr("D + D - 2*D").is_zero());
    CHECK(parse_map_expr("2*D - 3/2*id + 1/2*id") ==
          AdditiveMap::derivation(1, ComplexRational(2)) +
              AdditiveMap::identity(ComplexRational(-1)));
}

TEST_CASE("map expression errors") {
    CHECK_THROWS_AS(parse_map_expr("frob"), ParseError);
    CHECK_THROWS_AS(parse_map_expr("D0"), ParseError);
    CHECK_THROWS_AS(parse_map_expr("phi0"), ParseError);
    CHECK_THROWS_AS(parse_map_expr("phi"), ParseError);
    CHECK_THROWS_AS(parse_map_expr("2*"), ParseError);
    CHECK_THROWS_AS(parse_map_expr("2 D"), ParseError);
    CHECK_THROWS_AS(parse_map_expr("id id"), ParseError);
}

TEST_CASE("full program parses and the equation matches a constructor") {
    std::string text =
        "# the basic pair at (2, 3)\n"
        "f1 = D\n"
        "g1 = D\n"
        "f2 = -2*id\n"
        "g2 = D\n"
        "eq: f1(x^2)*g1(x)^3 + f2(x)*g2(x)^4 = 0\n";
    Program prog = parse_program(text);
    REQUIRE(prog.has_equation);
    REQUIRE(prog.defs.size() == 4);
    CHECK(prog.equation.expand() == family_derivation_pair(2, 3).expand());
    CHECK(prog.equation.verify());
    CHECK(prog.equation.terms[0].p == 2);
    CHECK(prog.equation.terms[0].q == 3);
    CHECK(prog.equation.terms[1].p == 1);  // f2(x) means p = 1
    CHECK(prog.equation.terms[1].q == 4);
}

TEST_CASE("program-level errors carry line numbers") {
    auto line_of = [](const std::string& text) -> std::size_t {
        try {
            parse_program(text);
        } catch (const ParseError& e) {
            return e.line_no;
        }
        return 0;
    };
    CHECK(line_of("f1 = D\nf1 = id\n") == 2);                         // duplicate
    CHECK(line_of("f1 = D\neq: f1(x^2)*g9(x)^2 = 0\n") == 2);         // undefined
    CHECK(line_of("id = D\n") == 1);                                  // reserved
    CHECK(line_of("f1 = D\neq: f1(x^2)*f1(x)^2 = 1\n") == 2);         // rhs not 0
    CHECK(line_of("f1 = D\ng1 = D\nf2 = id\n"
                  "eq: f1(x^2)*g1(x)^2 - f2(x)*g1(x)^3 = 0\n") == 4); // '-' in eq
    CHECK(line_of("f1 = $\n") == 1);                                  // bad character
    CHECK(line_of("f1 = D\neq: f1(x^2)*f1(x)^2 = 0\n"
                  "eq: f1(x^2)*f1(x)^2 = 0\n") == 3);                 // two eq lines
}

TEST_CASE("format and parse are mutually inverse") {
    std::string text =
        "f1 = 2*D - 3*id\n"
        "g1 = (1+2i)*phi1 + phi2.D2\n"
        "f2 = i*id\n"
        "eq: f1(x^3)*g1(x)^2 + f2(x^2)*f1(x)^3 = 0\n";
    Program p1 = parse_program(text);
    std::string printed = format_program(p1);
    Program p2 = parse_program(printed);
    CHECK(format_program(p2) == printed);
    CHECK(p2.defs == p1.defs);
    CHECK(p2.equation.expand() == p1.equation.expand());
}

TEST_CASE("constructor output formats with synthesized names") {
    Program prog;
    prog.equation = family_hom_difference(4);
    prog.has_equation = true;
    std::string printed = format_program(prog);
    Program reparsed = parse_program(printed);
    CHECK(reparsed.equation.verify());
    CHECK(reparsed.equation.expand() == prog.equation.expand());
    CHECK(printed.find("f1 = ") != std::string::npos);
    CHECK(printed.find("eq: ") != std::string::npos);
}

TEST_CASE("defs without an equation are fine; using one is the caller's call") {
    Program prog = parse_program("f1 = D2 + id\n");
    CHECK(!prog.has_equation);
    REQUIRE(prog.defs.size() == 1);
    CHECK(prog.defs[0].second.max_order() == 2);
}

}  // TEST_SUITE
