#ifndef APEQ_PARSER_HPP
#define APEQ_PARSER_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "apeq/equation.hpp"

namespace apeq {

/// Input format, one statement per line ('#' starts a comment):
///
///   f1 = D - 3*id
///   g1 = (1+2i)*phi1 + phi2.D2
///   eq: f1(x^3)*g1(x)^2 + f2(x^2)*g2(x)^3 = 0
///
/// Map expressions are sums of scaled symbols:
///   id        the identity map
///   D, Dk     the derivation, its k-fold composition
///   phiE      homomorphism number E (E >= 1)
///   phiE.Dk   homomorphism E composed with its tower derivation
/// Scalars are Gaussian rationals: 3, -3/2, i, 2i, (1+2i), (1/2-5i).
///
/// The equation line references previously defined map names.  Terms are
/// joined with '+' only; signs belong in the map definitions, which keeps
/// printing and reparsing the exact inverse of each other.
struct ParseError : std::runtime_error {
    ParseError(std::size_t line, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_no(line) {}
    std::size_t line_no;
};

struct Program {
    std::vector<std::pair<std::string, AdditiveMap>> defs;
    Equation equation;
    bool has_equation = false;

    const AdditiveMap* find(const std::string& name) const;
};

Program parse_program(const std::string& text);

/// Parses a single map expression such as "2*D - (1+i)*phi1".
AdditiveMap parse_map_expr(const std::string& text);

/// Parses a Gaussian-rational scalar such as "-3/2", "2i" or "1/2-5i".
ComplexRational parse_scalar(const std::string& text);

std::string format_map(const AdditiveMap& m);
std::string format_program(const Program& p);

}  // namespace apeq

#endif  // APEQ_PARSER_HPP
