#include "apeq/polynomial.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace apeq {

void Monomial::mul(const Monomial& other) {
    if (other.factors.empty()) return;
    std::vector<std::pair<std::uint64_t, std::uint32_t>> merged;
    merged.reserve(factors.size() + other.factors.size());
    std::size_t i = 0, j = 0;
    while (i < factors.size() && j < other.factors.size()) {
        if (factors[i].first < other.factors[j].first) {
            merged.push_back(factors[i++]);
        } else if (factors[i].first > other.factors[j].first) {
            merged.push_back(other.factors[j++]);
        } else {
            merged.emplace_back(factors[i].first, factors[i].second + other.factors[j].second);
            ++i;
            ++j;
        }
    }
    while (i < factors.size()) merged.push_back(factors[i++]);
    while (j < other.factors.size()) merged.push_back(other.factors[j++]);
    factors = std::move(merged);
}

Monomial Monomial::from_generator(const Generator& g, std::uint32_t exp) {
    Monomial m;
    if (exp > 0) m.factors.emplace_back(g.key(), exp);
    return m;
}

std::string to_string(const Monomial& m) {
    if (m.factors.empty()) return "1";
    std::string s;
    for (const auto& [k, e] : m.factors) {
        if (!s.empty()) s += "*";
        s += to_string(Generator::from_key(k));
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
}

void Polynomial::add_term(const Monomial& m, const ComplexRational& c) {
    if (c.is_zero()) return;
    auto it = terms.find(m);
    if (it == terms.end()) {
        terms.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms) add_term(m, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
    Polynomial out;
    for (const auto& [ma, ca] : terms) {
        for (const auto& [mb, cb] : o.terms) {
            Monomial m = ma;
            m.mul(mb);
            out.add_term(m, ca * cb);
        }
    }
    terms = std::move(out.terms);
    return *this;
}

Polynomial& Polynomial::operator*=(const ComplexRational& c) {
    if (c.is_zero()) {
        terms.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms) coeff *= c;
    return *this;
}

Polynomial Polynomial::operator-() const {
    Polynomial out;
    for (const auto& [m, c] : terms) out.terms.emplace(m, -c);
    return out;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial result(ComplexRational(1));
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1u) result *= base;
        base *= base;
        e >>= 1u;
    }
    return result;
}

Polynomial Polynomial::map_generators(
    const std::function<std::uint64_t(std::uint64_t)>& fn) const {
    Polynomial out;
    for (const auto& [m, c] : terms) {
        Monomial mapped;
        for (const auto& [k, e] : m.factors) {
            Monomial f;
            f.factors.emplace_back(fn(k), e);
            mapped.mul(f);
        }
        out.add_term(mapped, c);
    }
    return out;
}

ComplexRational Polynomial::evaluate(
    const std::map<std::uint64_t, ComplexRational>& assignment) const {
    ComplexRational total(0);
    for (const auto& [m, c] : terms) {
        ComplexRational prod = c;
        for (const auto& [k, e] : m.factors) {
            auto it = assignment.find(k);
            if (it == assignment.end())
                throw std::invalid_argument("evaluate: unassigned generator " +
                                            to_string(Generator::from_key(k)));
            prod *= it->second.pow(e);
        }
        total += prod;
    }
    return total;
}

std::vector<std::uint64_t> Polynomial::support() const {
    std::set<std::uint64_t> keys;
    for (const auto& [m, c] : terms)
        for (const auto& [k, e] : m.factors) keys.insert(k);
    return {keys.begin(), keys.end()};
}

std::string Polynomial::str() const {
    if (terms.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : terms) {
        std::string cs = c.str();
        std::string term;
        if (m.factors.empty()) {
            term = cs;
        } else {
            std::string ms = to_string(m);
            if (cs == "1") {
                term = ms;
            } else if (cs == "-1") {
                term = "-" + ms;
            } else {
                bool needs_parens = cs.find('+') != std::string::npos ||
                                    cs.find('-', 1) != std::string::npos;
                term = (needs_parens ? "(" + cs + ")" : cs) + "*" + ms;
            }
        }
        if (s.empty()) {
            s = term;
        } else if (!term.empty() && term[0] == '-') {
            s += " - " + term.substr(1);
        } else {
            s += " + " + term;
        }
    }
    return s;
}

}  // namespace apeq
