#include "apeq/parser.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace apeq {

namespace {

struct Token {
    enum Kind { Int, Ident, Sym, End } kind = End;
    std::string text;  // digits for Int, name for Ident
    char sym = 0;
};

std::vector<Token> tokenize(const std::string& line, std::size_t line_no) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        char ch = line[i];
        if (std::isspace(static_cast<unsigned char>(ch))) {
            ++i;
        } else if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::size_t j = i;
            while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
            out.push_back(Token{Token::Int, line.substr(i, j - i), 0});
            i = j;
        } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            std::size_t j = i;
            while (j < line.size() && (std::isalnum(static_cast<unsigned char>(line[j])) ||
                                       line[j] == '_'))
                ++j;
            out.push_back(Token{Token::Ident, line.substr(i, j - i), 0});
            i = j;
        } else if (std::string("+-*/()=:^.").find(ch) != std::string::npos) {
            out.push_back(Token{Token::Sym, std::string(1, ch), ch});
            ++i;
        } else {
            throw ParseError(line_no, std::string("unexpected character '") + ch + "'");
        }
    }
    out.push_back(Token{Token::End, "", 0});
    return out;
}

class LineParser {
public:
    LineParser(std::vector<Token> toks, std::size_t line_no)
        : toks_(std::move(toks)), line_(line_no) {}

    const Token& peek() const { return toks_[pos_]; }
    const Token& get() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
    bool at_end() const { return peek().kind == Token::End; }

    bool accept_sym(char c) {
        if (peek().kind == Token::Sym && peek().sym == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect_sym(char c) {
        if (!accept_sym(c))
            throw ParseError(line_, std::string("expected '") + c + "', got " + describe(peek()));
    }

    std::string expect_ident() {
        if (peek().kind != Token::Ident)
            throw ParseError(line_, "expected a name, got " + describe(peek()));
        return get().text;
    }

    unsigned expect_uint() {
        if (peek().kind != Token::Int)
            throw ParseError(line_, "expected a number, got " + describe(peek()));
        return static_cast<unsigned>(std::stoul(get().text));
    }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, msg); }

    std::size_t line() const { return line_; }

    /// number := INT ['/' INT]
    Rational parse_rational() {
        BigInt num(expect_uint());
        if (accept_sym('/')) {
            BigInt den(expect_uint());
            if (den == 0) fail("division by zero in a scalar");
            return Rational(num) / Rational(den);
        }
        return Rational(num);
    }

    /// simple := 'i' | number ['i']
    ComplexRational parse_simple_scalar() {
        if (peek().kind == Token::Ident && peek().text == "i") {
            get();
            return ComplexRational::i();
        }
        Rational r = parse_rational();
        if (peek().kind == Token::Ident && peek().text == "i") {
            get();
            return ComplexRational(Rational(0), r);
        }
        return ComplexRational(r);
    }

    /// complex := ['+'|'-'] simple (('+'|'-') simple)*
    ComplexRational parse_complex() {
        bool neg = false;
        if (accept_sym('-'))
            neg = true;
        else
            accept_sym('+');
        ComplexRational c = parse_simple_scalar();
        if (neg) c = -c;
        while (peek().kind == Token::Sym && (peek().sym == '+' || peek().sym == '-')) {
            bool minus = get().sym == '-';
            ComplexRational part = parse_simple_scalar();
            if (minus)
                c -= part;
            else
                c += part;
        }
        return c;
    }

private:
    static std::string describe(const Token& t) {
        switch (t.kind) {
            case Token::Int: return "number '" + t.text + "'";
            case Token::Ident: return "name '" + t.text + "'";
            case Token::Sym: return "'" + t.text + "'";
            default: return "end of line";
        }
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    std::size_t line_;
};

/// atom := 'id' | 'D'[k] | 'phi'E ['.' 'D'[k]]
std::pair<std::uint16_t, std::uint32_t> parse_atom(LineParser& p) {
    std::string name = p.expect_ident();
    if (name == "id") return {0, 0};
    auto parse_d = [&](const std::string& s) -> std::uint32_t {
        std::uint32_t ord = 1;
        if (s.size() > 1) {
            for (char ch : s.substr(1))
                if (!std::isdigit(static_cast<unsigned char>(ch)))
                    p.fail("unknown map symbol '" + s + "'");
            ord = static_cast<std::uint32_t>(std::stoul(s.substr(1)));
            if (ord == 0) p.fail("'D0' is the identity; write 'id'");
        }
        return ord;
    };
    if (name[0] == 'D') return {0, parse_d(name)};
    if (name.rfind("phi", 0) == 0 && name.size() > 3) {
        for (char ch : name.substr(3))
            if (!std::isdigit(static_cast<unsigned char>(ch)))
                p.fail("unknown map symbol '" + name + "'");
        auto e = static_cast<std::uint16_t>(std::stoul(name.substr(3)));
        if (e == 0) p.fail("homomorphism labels start at 1");
        std::uint32_t ord = 0;
        if (p.accept_sym('.')) {
            std::string d = p.expect_ident();
            if (d.empty() || d[0] != 'D') p.fail("expected a derivation after '.'");
            ord = parse_d(d);
        }
        return {e, ord};
    }
    p.fail("unknown map symbol '" + name + "' (expected id, D, Dk, phiE or phiE.Dk)");
}

/// mapexpr := ['+'|'-'] mterm (('+'|'-') mterm)*
AdditiveMap parse_map_body(LineParser& p) {
    AdditiveMap m;
    bool first = true;
    while (true) {
        bool neg = false;
        if (p.accept_sym('-'))
            neg = true;
        else if (!p.accept_sym('+') && !first)
            break;
        first = false;

        ComplexRational coeff(1);
        if (p.peek().kind == Token::Sym && p.peek().sym == '(') {
            p.expect_sym('(');
            coeff = p.parse_complex();
            p.expect_sym(')');
            p.expect_sym('*');
        } else if (p.peek().kind == Token::Int ||
                   (p.peek().kind == Token::Ident && p.peek().text == "i")) {
            coeff = p.parse_simple_scalar();
            p.expect_sym('*');
        }
        if (neg) coeff = -coeff;
        auto [hom, ord] = parse_atom(p);
        m.add_term(coeff, hom, ord);
        if (p.at_end()) break;
    }
    if (!p.at_end()) p.fail("unexpected trailing input: " + p.peek().text);
    return m;
}

/// eqterm := name '(' 'x' ['^' INT] ')' '*' name '(' 'x' ')' ['^' INT]
void parse_eq_term(LineParser& p, const Program& prog, Equation& eq) {
    std::string fname = p.expect_ident();
    const AdditiveMap* f = prog.find(fname);
    if (!f) p.fail("undefined map '" + fname + "'");
    p.expect_sym('(');
    if (p.expect_ident() != "x") p.fail("maps apply to powers of x");
    unsigned pexp = 1;
    if (p.accept_sym('^')) pexp = p.expect_uint();
    p.expect_sym(')');
    p.expect_sym('*');
    std::string gname = p.expect_ident();
    const AdditiveMap* g = prog.find(gname);
    if (!g) p.fail("undefined map '" + gname + "'");
    p.expect_sym('(');
    if (p.expect_ident() != "x") p.fail("maps apply to powers of x");
    p.expect_sym(')');
    unsigned qexp = 1;
    if (p.accept_sym('^')) qexp = p.expect_uint();
    eq.add(*f, pexp, *g, qexp, fname, gname);
}

}  // namespace

const AdditiveMap* Program::find(const std::string& name) const {
    for (const auto& [n, m] : defs)
        if (n == name) return &m;
    return nullptr;
}

AdditiveMap parse_map_expr(const std::string& text) {
    LineParser p(tokenize(text, 1), 1);
    return parse_map_body(p);
}

ComplexRational parse_scalar(const std::string& text) {
    LineParser p(tokenize(text, 1), 1);
    bool parens = p.accept_sym('(');
    ComplexRational c = p.parse_complex();
    if (parens) p.expect_sym(')');
    if (!p.at_end()) p.fail("unexpected trailing input in scalar");
    return c;
}

Program parse_program(const std::string& text) {
    Program prog;
    std::istringstream in(text);
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = raw.substr(0, raw.find('#'));
        LineParser p(tokenize(line, line_no), line_no);
        if (p.at_end()) continue;

        std::string head = p.expect_ident();
        if (head == "eq") {
            p.expect_sym(':');
            if (prog.has_equation) p.fail("duplicate equation line");
            while (true) {
                parse_eq_term(p, prog, prog.equation);
                if (p.accept_sym('+')) continue;
                if (p.peek().kind == Token::Sym && p.peek().sym == '-')
                    p.fail("terms join with '+'; put signs inside the map definitions");
                break;
            }
            p.expect_sym('=');
            if (p.expect_uint() != 0) p.fail("the right-hand side must be 0");
            if (!p.at_end()) p.fail("unexpected trailing input after '= 0'");
            prog.has_equation = true;
        } else {
            auto all_digits = [](const std::string& s) {
                for (char ch : s)
                    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
                return true;
            };
            bool reserved = head == "id" || head == "x" || head == "i" ||
                            (head[0] == 'D' && all_digits(head.substr(1))) ||
                            (head.rfind("phi", 0) == 0 && all_digits(head.substr(3)));
            if (reserved) p.fail("'" + head + "' is reserved and cannot name a map");
            if (prog.find(head)) p.fail("map '" + head + "' is already defined");
            p.expect_sym('=');
            prog.defs.emplace_back(head, parse_map_body(p));
        }
    }
    return prog;
}

std::string format_map(const AdditiveMap& m) { return m.str(); }

std::string format_program(const Program& p) {
    std::string out;
    std::vector<std::pair<std::string, AdditiveMap>> defs = p.defs;
    Equation eq = p.equation;
    auto ensure_def = [&](std::string& name, const std::string& fallback, const AdditiveMap& m) {
        if (name.empty()) name = fallback;
        for (const auto& [n, existing] : defs) {
            if (n == name) {
                if (!(existing == m))
                    throw std::logic_error("conflicting definitions for map '" + name + "'");
                return;
            }
        }
        defs.emplace_back(name, m);
    };
    for (std::size_t i = 0; i < eq.terms.size(); ++i) {
        ensure_def(eq.terms[i].f_name, "f" + std::to_string(i + 1), eq.terms[i].f);
        ensure_def(eq.terms[i].g_name, "g" + std::to_string(i + 1), eq.terms[i].g);
    }
    for (const auto& [n, m] : defs) out += n + " = " + m.str() + "\n";
    if (p.has_equation || !eq.terms.empty()) {
        out += "eq: ";
        for (std::size_t i = 0; i < eq.terms.size(); ++i) {
            if (i) out += " + ";
            out += eq.terms[i].f_name + "(x^" + std::to_string(eq.terms[i].p) + ")*" +
                   eq.terms[i].g_name + "(x)^" + std::to_string(eq.terms[i].q);
        }
        out += " = 0\n";
    }
    return out;
}

}  // namespace apeq
