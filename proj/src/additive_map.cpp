#include "apeq/additive_map.hpp"

#include <algorithm>

#include "apeq/powerrule.hpp"

namespace apeq {

bool operator==(const MapTerm& a, const MapTerm& b) {
    return a.coeff == b.coeff && a.hom == b.hom && a.ord == b.ord;
}

AdditiveMap AdditiveMap::identity(const ComplexRational& c) {
    AdditiveMap m;
    m.add_term(c, 0, 0);
    return m;
}

AdditiveMap AdditiveMap::derivation(std::uint32_t ord, const ComplexRational& c,
                                    std::uint16_t hom) {
    AdditiveMap m;
    m.add_term(c, hom, ord);
    return m;
}

AdditiveMap AdditiveMap::hom(std::uint16_t e, const ComplexRational& c) {
    AdditiveMap m;
    m.add_term(c, e, 0);
    return m;
}

AdditiveMap AdditiveMap::hom_derivation(std::uint16_t e, std::uint32_t ord,
                                        const ComplexRational& c) {
    AdditiveMap m;
    m.add_term(c, e, ord);
    return m;
}

void AdditiveMap::add_term(const ComplexRational& c, std::uint16_t hom, std::uint32_t ord) {
    if (c.is_zero()) return;
    auto pos = std::lower_bound(terms_.begin(), terms_.end(), std::make_pair(hom, ord),
                                [](const MapTerm& t, const std::pair<std::uint16_t, std::uint32_t>& k) {
                                    return std::make_pair(t.hom, t.ord) < k;
                                });
    if (pos != terms_.end() && pos->hom == hom && pos->ord == ord) {
        pos->coeff += c;
        if (pos->coeff.is_zero()) terms_.erase(pos);
    } else {
        terms_.insert(pos, MapTerm{c, hom, ord});
    }
}

std::uint32_t AdditiveMap::max_order() const {
    std::uint32_t k = 0;
    for (const auto& t : terms_) k = std::max(k, t.ord);
    return k;
}

bool AdditiveMap::is_scaled_identity() const {
    return terms_.size() == 1 && terms_[0].hom == 0 && terms_[0].ord == 0;
}

ComplexRational AdditiveMap::coefficient(std::uint16_t hom, std::uint32_t ord) const {
    for (const auto& t : terms_)
        if (t.hom == hom && t.ord == ord) return t.coeff;
    return ComplexRational(0);
}

AdditiveMap& AdditiveMap::operator+=(const AdditiveMap& o) {
    for (const auto& t : o.terms_) add_term(t.coeff, t.hom, t.ord);
    return *this;
}

AdditiveMap& AdditiveMap::operator-=(const AdditiveMap& o) {
    for (const auto& t : o.terms_) add_term(-t.coeff, t.hom, t.ord);
    return *this;
}

AdditiveMap& AdditiveMap::operator*=(const ComplexRational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.coeff *= c;
    return *this;
}

bool operator==(const AdditiveMap& a, const AdditiveMap& b) {
    return a.terms() == b.terms();
}

Polynomial AdditiveMap::apply_power(unsigned p, std::uint16_t var) const {
    Polynomial out;
    for (const auto& t : terms_)
        out += t.coeff * power_rule_partition(t.ord, p, var, t.hom);
    return out;
}

Polynomial AdditiveMap::apply(std::uint16_t var) const {
    Polynomial out;
    for (const auto& t : terms_)
        out.add_term(Monomial::from_generator(Generator{var, t.hom, t.ord}, 1), t.coeff);
    return out;
}

Polynomial AdditiveMap::apply_product(const std::vector<std::uint16_t>& vars) const {
    Polynomial out;
    for (const auto& t : terms_)
        out += t.coeff * power_rule_product(t.ord, vars, t.hom);
    return out;
}

std::string AdditiveMap::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& t : terms_) {
        std::string atom;
        if (t.hom == 0 && t.ord == 0) {
            atom = "id";
        } else if (t.hom == 0) {
            atom = t.ord == 1 ? "D" : "D" + std::to_string(t.ord);
        } else {
            atom = "phi" + std::to_string(t.hom);
            if (t.ord > 0) atom += t.ord == 1 ? ".D" : ".D" + std::to_string(t.ord);
        }
        std::string cs = t.coeff.str();
        std::string term;
        if (cs == "1") {
            term = atom;
        } else if (cs == "-1") {
            term = "-" + atom;
        } else {
            bool needs_parens = cs.find('+') != std::string::npos ||
                                cs.find('-', 1) != std::string::npos;
            term = (needs_parens ? "(" + cs + ")" : cs) + "*" + atom;
        }
        if (s.empty()) {
            s = term;
        } else if (term[0] == '-') {
            s += " - " + term.substr(1);
        } else {
            s += " + " + term;
        }
    }
    return s;
}

}  // namespace apeq
