#include "apeq/models.hpp"

#include <stdexcept>

namespace apeq {

DensePoly DensePoly::constant(const ComplexRational& v) {
    DensePoly p;
    if (!v.is_zero()) p.c.push_back(v);
    return p;
}

DensePoly DensePoly::variable() {
    DensePoly p;
    p.c = {ComplexRational(0), ComplexRational(1)};
    return p;
}

void DensePoly::normalize() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

DensePoly& DensePoly::operator+=(const DensePoly& o) {
    if (o.c.size() > c.size()) c.resize(o.c.size(), ComplexRational(0));
    for (std::size_t i = 0; i < o.c.size(); ++i) c[i] += o.c[i];
    normalize();
    return *this;
}

DensePoly& DensePoly::operator-=(const DensePoly& o) {
    if (o.c.size() > c.size()) c.resize(o.c.size(), ComplexRational(0));
    for (std::size_t i = 0; i < o.c.size(); ++i) c[i] -= o.c[i];
    normalize();
    return *this;
}

DensePoly operator*(const DensePoly& a, const DensePoly& b) {
    DensePoly out;
    if (a.c.empty() || b.c.empty()) return out;
    out.c.assign(a.c.size() + b.c.size() - 1, ComplexRational(0));
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j) out.c[i + j] += a.c[i] * b.c[j];
    out.normalize();
    return out;
}

DensePoly DensePoly::pow(unsigned e) const {
    DensePoly result = constant(ComplexRational(1));
    DensePoly base = *this;
    while (e > 0) {
        if (e & 1u) result = result * base;
        base = base * base;
        e >>= 1u;
    }
    return result;
}

DensePoly DensePoly::derivative() const {
    DensePoly out;
    if (c.size() <= 1) return out;
    out.c.resize(c.size() - 1);
    for (std::size_t i = 1; i < c.size(); ++i)
        out.c[i - 1] = c[i] * ComplexRational(static_cast<long long>(i));
    out.normalize();
    return out;
}

std::string DensePoly::str() const {
    if (c.empty()) return "0";
    std::string s;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i].is_zero()) continue;
        if (!s.empty()) s += " + ";
        std::string cs = c[i].str();
        bool needs_parens =
            cs.find('+') != std::string::npos || cs.find('-', 1) != std::string::npos;
        if (needs_parens) cs = "(" + cs + ")";
        if (i == 0) {
            s += cs;
        } else {
            std::string t = i == 1 ? "t" : "t^" + std::to_string(i);
            s += cs == "1" ? t : (cs == "-1" ? "-" + t : cs + "*" + t);
        }
    }
    return s;
}

DensePoly model_apply(const AdditiveMap& m, const DensePoly& x) {
    DensePoly out;
    for (const auto& t : m.terms()) {
        if (t.hom != 0)
            throw std::domain_error("polynomial model: no homomorphism with label " +
                                    std::to_string(t.hom));
        DensePoly d = x;
        for (std::uint32_t j = 0; j < t.ord; ++j) d = d.derivative();
        for (auto& coeff : d.c) coeff *= t.coeff;
        d.normalize();
        out += d;
    }
    return out;
}

DensePoly model_eval(const Equation& eq, const DensePoly& x) {
    DensePoly total;
    for (const auto& t : eq.terms)
        total += model_apply(t.f, x.pow(t.p)) * model_apply(t.g, x).pow(t.q);
    return total;
}

QuadElem& QuadElem::operator+=(const QuadElem& o) {
    a += o.a;
    b += o.b;
    return *this;
}

QuadElem& QuadElem::operator-=(const QuadElem& o) {
    a -= o.a;
    b -= o.b;
    return *this;
}

QuadElem operator*(const QuadElem& x, const QuadElem& y) {
    // (a1 + b1 r)(a2 + b2 r) with r^2 = 2
    return QuadElem{x.a * y.a + ComplexRational(2) * x.b * y.b, x.a * y.b + x.b * y.a};
}

QuadElem operator*(const ComplexRational& c, const QuadElem& y) {
    return QuadElem{c * y.a, c * y.b};
}

QuadElem QuadElem::pow(unsigned e) const {
    QuadElem result{ComplexRational(1), ComplexRational(0)};
    QuadElem base = *this;
    while (e > 0) {
        if (e & 1u) result = result * base;
        base = base * base;
        e >>= 1u;
    }
    return result;
}

std::string QuadElem::str() const {
    if (is_zero()) return "0";
    std::string s;
    if (!a.is_zero()) s = a.str();
    if (!b.is_zero()) {
        std::string bs = b.str();
        bool needs_parens =
            bs.find('+') != std::string::npos || bs.find('-', 1) != std::string::npos;
        if (needs_parens) bs = "(" + bs + ")";
        std::string part = bs == "1" ? "r" : (bs == "-1" ? "-r" : bs + "*r");
        if (s.empty()) {
            s = part;
        } else if (part[0] == '-') {
            s += " - " + part.substr(1);
        } else {
            s += " + " + part;
        }
    }
    return s;
}

QuadElem model_apply(const AdditiveMap& m, const QuadElem& x) {
    QuadElem out{ComplexRational(0), ComplexRational(0)};
    for (const auto& t : m.terms()) {
        if (t.ord != 0)
            throw std::domain_error(
                "quadratic model: derivations vanish on an algebraic extension");
        QuadElem v = x;
        if (t.hom == 2)
            v = x.conj_root();
        else if (t.hom > 2)
            throw std::domain_error("quadratic model: no homomorphism with label " +
                                    std::to_string(t.hom));
        out += t.coeff * v;
    }
    return out;
}

QuadElem model_eval(const Equation& eq, const QuadElem& x) {
    QuadElem total{ComplexRational(0), ComplexRational(0)};
    for (const auto& t : eq.terms)
        total += model_apply(t.f, x.pow(t.p)) * model_apply(t.g, x).pow(t.q);
    return total;
}

}  // namespace apeq
