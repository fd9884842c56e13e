#include "apeq/equation.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace apeq {

Equation& Equation::add(AdditiveMap f, unsigned p, AdditiveMap g, unsigned q,
                        std::string f_name, std::string g_name) {
    terms.push_back(EquationTerm{std::move(f), p, std::move(g), q,
                                 std::move(f_name), std::move(g_name)});
    return *this;
}

Polynomial Equation::expand(std::uint16_t var) const {
    Polynomial out;
    for (const auto& t : terms)
        out += t.f.apply_power(t.p, var) * t.g.apply(var).pow(t.q);
    return out;
}

std::string Equation::str() const {
    if (terms.empty()) return "0 = 0";
    std::string s;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const auto& t = terms[i];
        std::string fn = t.f_name.empty() ? "f" + std::to_string(i + 1) : t.f_name;
        std::string gn = t.g_name.empty() ? "g" + std::to_string(i + 1) : t.g_name;
        if (!s.empty()) s += " + ";
        s += fn + "(x^" + std::to_string(t.p) + ")*" + gn + "(x)^" + std::to_string(t.q);
    }
    return s + " = 0";
}

ConditionReport check_conditions(const Equation& eq) {
    ConditionReport r;
    const auto& ts = eq.terms;
    if (ts.empty()) return r;

    r.p_strictly_increasing = true;
    for (std::size_t i = 1; i < ts.size(); ++i)
        if (!(ts[i - 1].p < ts[i].p)) r.p_strictly_increasing = false;

    std::set<unsigned> ps;
    for (const auto& t : ts) ps.insert(t.p);
    r.p_distinct = ps.size() == ts.size();

    r.homogeneous = true;
    r.weight = ts[0].p + ts[0].q;
    for (const auto& t : ts)
        if (t.p + t.q != r.weight) r.homogeneous = false;
    if (!r.homogeneous) r.weight = 0;

    r.cross_distinct = true;
    for (std::size_t i = 0; i < ts.size(); ++i)
        for (std::size_t j = 0; j < ts.size(); ++j)
            if (i != j && ts[i].p == ts[j].q) r.cross_distinct = false;

    std::set<unsigned> all;
    for (const auto& t : ts) {
        all.insert(t.p);
        all.insert(t.q);
    }
    r.all_exponents_distinct = all.size() == 2 * ts.size();
    return r;
}

std::vector<HomogeneousPart> homogenize(const Equation& eq) {
    std::map<unsigned, HomogeneousPart, std::greater<unsigned>> parts;
    for (std::size_t i = 0; i < eq.terms.size(); ++i) {
        unsigned w = eq.terms[i].p + eq.terms[i].q;
        auto& part = parts[w];
        part.weight = w;
        part.term_indices.push_back(i);
        part.sub.terms.push_back(eq.terms[i]);
    }
    std::vector<HomogeneousPart> out;
    out.reserve(parts.size());
    for (auto& [w, part] : parts) out.push_back(std::move(part));
    return out;
}

}  // namespace apeq
