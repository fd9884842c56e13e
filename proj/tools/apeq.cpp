// Command-line front end: parse an equation over additive maps, expand it in
// the free generator algebra, and report identities, structure and families.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "apeq/equation.hpp"
#include "apeq/families.hpp"
#include "apeq/matrices.hpp"
#include "apeq/parser.hpp"
#include "apeq/powerrule.hpp"
#include "apeq/symmetrize.hpp"

using nlohmann::json;

namespace {

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

apeq::Program load_program(const std::string& path) {
    apeq::Program prog = apeq::parse_program(read_input(path));
    if (!prog.has_equation)
        throw apeq::ParseError(0, "input contains no 'eq:' line");
    return prog;
}

json polynomial_to_json(const apeq::Polynomial& p) {
    json terms = json::array();
    for (const auto& [m, c] : p.terms)
        terms.push_back({{"coeff", c.str()}, {"monomial", apeq::to_string(m)}});
    return {{"zero", p.is_zero()}, {"num_terms", p.size()}, {"terms", terms}};
}

void print_polynomial(const apeq::Polynomial& p, bool as_json) {
    if (as_json)
        std::cout << polynomial_to_json(p).dump(2) << "\n";
    else
        std::cout << p.str() << "\n";
}

const char* shape_name(apeq::SolutionShape s) {
    switch (s) {
        case apeq::SolutionShape::AllOrdersAtMostOne: return "all-orders-at-most-one";
        case apeq::SolutionShape::MaxOrderWithLinearG: return "max-order-with-linear-g";
        default: return "other";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Expansion and verification of equations sum_i f_i(x^p_i) * g_i(x)^q_i = 0\n"
                 "over additive maps built from derivation towers and field homomorphisms"};
    app.require_subcommand(1);
    bool as_json = false;

    std::string input = "-";
    auto add_input = [&](CLI::App* sub) {
        sub->add_option("input", input, "input file, or - for stdin")->capture_default_str();
    };

    auto* cmd_verify = app.add_subcommand(
        "verify", "check whether the expansion is identically zero (exit 1 when not)");
    add_input(cmd_verify);

    auto* cmd_expand = app.add_subcommand("expand", "print the expanded left-hand side");
    add_input(cmd_expand);

    auto* cmd_cond = app.add_subcommand(
        "conditions", "report the structural conditions on the exponents");
    add_input(cmd_cond);

    auto* cmd_homog = app.add_subcommand(
        "homogenize", "split the equation into homogeneous weight classes");
    add_input(cmd_homog);

    auto* cmd_symm = app.add_subcommand(
        "symmetrize", "print the multivariate symmetrization (homogeneous equations)");
    add_input(cmd_symm);
    std::string route = "subsets";
    cmd_symm->add_option("--route", route, "reference | parallel | subsets")
        ->check(CLI::IsMember({"reference", "parallel", "subsets"}))
        ->capture_default_str();
    bool check_diag = false;
    cmd_symm->add_flag("--check-diagonal", check_diag,
                       "also confirm the diagonal substitution matches the expansion");

    auto* cmd_classify = app.add_subcommand(
        "classify", "report the order dichotomy of a solution's maps");
    add_input(cmd_classify);

    auto* cmd_power = app.add_subcommand("powerrule", "print the expansion of d^k(x^p)");
    unsigned pr_k = 1, pr_p = 2;
    cmd_power->add_option("-k,--order", pr_k, "derivation order k")->capture_default_str();
    cmd_power->add_option("-p,--power", pr_p, "exponent p")->capture_default_str();
    std::string pr_route = "partition";
    cmd_power->add_option("--route", pr_route, "partition | compositions | leibniz")
        ->check(CLI::IsMember({"partition", "compositions", "leibniz"}))
        ->capture_default_str();

    auto* cmd_det = app.add_subcommand(
        "determinant", "exponent determinants: power-moment and falling-factorial");
    std::vector<unsigned> det_ps;
    cmd_det->add_option("-p,--exponents", det_ps, "exponent list p_1 p_2 ...")->required();

    auto* cmd_family = app.add_subcommand("family", "emit a known solution family");
    cmd_family->require_subcommand(1);
    unsigned fp1 = 2, fq1 = 2, fp2 = 1, fq2 = 3, fw = 5, fp = 2, fq = 3;
    std::string s_l11 = "1", s_l10 = "1", s_m11 = "1", s_m10 = "1", s_m20 = "1", s_m21 = "1",
                s_shift = "0", s_c = "2", s_a1 = "1", s_b1 = "1", s_b2 = "1";
    std::vector<unsigned> prop_ps, prop_qs;
    std::vector<std::string> prop_ls, prop_cs;

    auto* fam_dp = cmd_family->add_subcommand("derivation-pair",
                                              "d(x^p1)*d(x)^q1 - p1*x^(p1-1)*d(x)^(q1+1)");
    fam_dp->add_option("--p1", fp1)->capture_default_str();
    fam_dp->add_option("--q1", fq1)->capture_default_str();

    auto* fam_ap = cmd_family->add_subcommand("affine-pair",
                                              "first-order pair with a common affine shift");
    fam_ap->add_option("--p1", fp1)->capture_default_str();
    fam_ap->add_option("--q1", fq1)->capture_default_str();
    fam_ap->add_option("--l11", s_l11)->capture_default_str();
    fam_ap->add_option("--m11", s_m11)->capture_default_str();
    fam_ap->add_option("--m21", s_m21)->capture_default_str();
    fam_ap->add_option("--shift", s_shift)->capture_default_str();

    auto* fam_dg = cmd_family->add_subcommand("degenerate-pair",
                                              "pair whose partner degenerates to (N-1, 1)");
    fam_dg->add_option("--p1", fp1)->capture_default_str();
    fam_dg->add_option("--q1", fq1)->capture_default_str();
    fam_dg->add_option("--l11", s_l11)->capture_default_str();
    fam_dg->add_option("--l10", s_l10)->capture_default_str();
    fam_dg->add_option("--m10", s_m10)->capture_default_str();
    fam_dg->add_option("--m21", s_m21)->capture_default_str();

    auto* fam_si = cmd_family->add_subcommand("scaled-identity-pair",
                                              "both g's scaled identities");
    fam_si->add_option("--p1", fp1)->capture_default_str();
    fam_si->add_option("--q1", fq1)->capture_default_str();
    fam_si->add_option("--p2", fp2)->capture_default_str();
    fam_si->add_option("--q2", fq2)->capture_default_str();
    fam_si->add_option("--l11", s_l11)->capture_default_str();
    fam_si->add_option("--l10", s_l10)->capture_default_str();
    fam_si->add_option("--m10", s_m10)->capture_default_str();
    fam_si->add_option("--m20", s_m20)->capture_default_str();

    auto* fam_pr = cmd_family->add_subcommand("proportional",
                                              "f_i = l_i*id, g_i = c_i*l_i*id (unchecked)");
    fam_pr->add_option("--p", prop_ps, "exponents p_i")->required();
    fam_pr->add_option("--q", prop_qs, "exponents q_i")->required();
    fam_pr->add_option("--l", prop_ls, "scalars l_i")->required();
    fam_pr->add_option("--c", prop_cs, "scalars c_i")->required();

    auto* fam_hd = cmd_family->add_subcommand("hom-difference",
                                              "two-homomorphism difference family");
    fam_hd->add_option("--weight", fw)->capture_default_str();

    auto* fam_hs = cmd_family->add_subcommand("hom-scaled",
                                              "scaled two-homomorphism family");
    fam_hs->add_option("--weight", fw)->capture_default_str();
    fam_hs->add_option("--c", s_c)->capture_default_str();
    fam_hs->add_option("--a1", s_a1)->capture_default_str();
    fam_hs->add_option("--b1", s_b1)->capture_default_str();
    fam_hs->add_option("--b2", s_b2)->capture_default_str();

    auto* fam_re = cmd_family->add_subcommand("repeated-exponent",
                                              "both terms share (p, q); needs a root of -1");
    fam_re->add_option("--p", fp)->capture_default_str();
    fam_re->add_option("--q", fq)->capture_default_str();

    auto* fam_so = cmd_family->add_subcommand("second-order",
                                              "solution containing d^2, weight >= 5");
    fam_so->add_option("--weight", fw)->capture_default_str();

    for (CLI::App* sub : {cmd_verify, cmd_expand, cmd_cond, cmd_homog, cmd_symm, cmd_classify,
                          cmd_power, cmd_det, fam_dp, fam_ap, fam_dg, fam_si, fam_pr, fam_hd,
                          fam_hs, fam_re, fam_so})
        sub->add_flag("--json", as_json, "emit JSON instead of text");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*cmd_verify) {
            apeq::Program prog = load_program(input);
            apeq::Polynomial lhs = prog.equation.expand();
            if (as_json) {
                std::cout << json{{"identity", lhs.is_zero()},
                                  {"residual", polynomial_to_json(lhs)}}
                                 .dump(2)
                          << "\n";
            } else if (lhs.is_zero()) {
                std::cout << "identity: the expansion is identically zero\n";
            } else {
                std::cout << "not an identity; residual has " << lhs.size()
                          << " term(s):\n" << lhs.str() << "\n";
            }
            return lhs.is_zero() ? 0 : 1;
        }

        if (*cmd_expand) {
            print_polynomial(load_program(input).equation.expand(), as_json);
            return 0;
        }

        if (*cmd_cond) {
            apeq::ConditionReport r = apeq::check_conditions(load_program(input).equation);
            if (as_json) {
                std::cout << json{{"p_strictly_increasing", r.p_strictly_increasing},
                                  {"p_distinct", r.p_distinct},
                                  {"homogeneous", r.homogeneous},
                                  {"weight", r.weight},
                                  {"cross_distinct", r.cross_distinct},
                                  {"all_exponents_distinct", r.all_exponents_distinct}}
                                 .dump(2)
                          << "\n";
            } else {
                std::cout << "p strictly increasing: " << (r.p_strictly_increasing ? "yes" : "no")
                          << "\np pairwise distinct:   " << (r.p_distinct ? "yes" : "no")
                          << "\nhomogeneous:           "
                          << (r.homogeneous ? "yes (weight " + std::to_string(r.weight) + ")"
                                            : "no")
                          << "\np_i != q_j (i != j):   " << (r.cross_distinct ? "yes" : "no")
                          << "\nall 2n exponents distinct: "
                          << (r.all_exponents_distinct ? "yes" : "no") << "\n";
            }
            return 0;
        }

        if (*cmd_homog) {
            apeq::Program prog = load_program(input);
            auto parts = apeq::homogenize(prog.equation);
            if (as_json) {
                json arr = json::array();
                for (const auto& part : parts)
                    arr.push_back({{"weight", part.weight},
                                   {"term_indices", part.term_indices},
                                   {"equation", part.sub.str()},
                                   {"identity", part.sub.verify()}});
                std::cout << arr.dump(2) << "\n";
            } else {
                for (const auto& part : parts) {
                    std::cout << "weight " << part.weight << " (terms";
                    for (std::size_t i : part.term_indices) std::cout << " " << (i + 1);
                    std::cout << "): " << part.sub.str() << "\n";
                }
            }
            return 0;
        }

        if (*cmd_symm) {
            apeq::Program prog = load_program(input);
            apeq::Polynomial s;
            if (route == "reference")
                s = apeq::symmetrize_reference(prog.equation);
            else if (route == "parallel")
                s = apeq::symmetrize_parallel(prog.equation);
            else
                s = apeq::symmetrize_subsets(prog.equation);
            bool diag_ok = true;
            if (check_diag) diag_ok = apeq::diagonalize(s) == prog.equation.expand();
            if (as_json) {
                json out = polynomial_to_json(s);
                if (check_diag) out["diagonal_matches_expansion"] = diag_ok;
                std::cout << out.dump(2) << "\n";
            } else {
                std::cout << s.str() << "\n";
                if (check_diag)
                    std::cout << "diagonal substitution matches expansion: "
                              << (diag_ok ? "yes" : "NO") << "\n";
            }
            return diag_ok ? 0 : 1;
        }

        if (*cmd_classify) {
            apeq::Program prog = load_program(input);
            apeq::ShapeReport r = apeq::classify_shape(prog.equation);
            if (as_json) {
                std::cout << json{{"shape", shape_name(r.shape)},
                                  {"max_order", r.max_order},
                                  {"witness_terms", r.witnesses}}
                                 .dump(2)
                          << "\n";
            } else {
                std::cout << "max tower order: " << r.max_order << "\nshape: "
                          << shape_name(r.shape) << "\n";
                if (!r.witnesses.empty()) {
                    std::cout << "witness term(s):";
                    for (std::size_t i : r.witnesses) std::cout << " " << (i + 1);
                    std::cout << "\n";
                }
            }
            return 0;
        }

        if (*cmd_power) {
            apeq::Polynomial p;
            if (pr_route == "partition")
                p = apeq::power_rule_partition(pr_k, pr_p);
            else if (pr_route == "compositions")
                p = apeq::power_rule_compositions(pr_k, pr_p);
            else
                p = apeq::power_rule_leibniz(pr_k, pr_p);
            if (as_json) {
                json out = polynomial_to_json(p);
                out["k"] = pr_k;
                out["p"] = pr_p;
                out["route"] = pr_route;
                std::cout << out.dump(2) << "\n";
            } else {
                std::cout << "d^" << pr_k << "(x^" << pr_p << ") = " << p.str() << "\n";
            }
            return 0;
        }

        if (*cmd_det) {
            auto mm = apeq::determinant(apeq::power_moment_matrix(det_ps));
            auto ff = apeq::determinant(apeq::falling_factorial_matrix(det_ps));
            auto cf = apeq::exponent_determinant_closed_form(det_ps);
            if (as_json) {
                std::cout << json{{"power_moment", mm.str()},
                                  {"falling_factorial", ff.str()},
                                  {"closed_form", cf.str()},
                                  {"nonsingular", !cf.is_zero()}}
                                 .dump(2)
                          << "\n";
            } else {
                std::cout << "power-moment determinant:      " << mm.str()
                          << "\nfalling-factorial determinant: " << ff.str()
                          << "\nclosed form:                   " << cf.str() << "\n";
            }
            return 0;
        }

        if (*cmd_family) {
            apeq::Equation eq;
            if (*fam_dp) {
                eq = apeq::family_derivation_pair(fp1, fq1);
            } else if (*fam_ap) {
                eq = apeq::family_affine_pair(fp1, fq1, apeq::parse_scalar(s_l11),
                                              apeq::parse_scalar(s_m11),
                                              apeq::parse_scalar(s_m21),
                                              apeq::parse_scalar(s_shift));
            } else if (*fam_dg) {
                eq = apeq::family_degenerate_pair(fp1, fq1, apeq::parse_scalar(s_l11),
                                                  apeq::parse_scalar(s_l10),
                                                  apeq::parse_scalar(s_m10),
                                                  apeq::parse_scalar(s_m21));
            } else if (*fam_si) {
                eq = apeq::family_scaled_identity_pair(
                    fp1, fq1, fp2, fq2, apeq::parse_scalar(s_l11), apeq::parse_scalar(s_l10),
                    apeq::parse_scalar(s_m10), apeq::parse_scalar(s_m20));
            } else if (*fam_pr) {
                std::vector<apeq::ComplexRational> ls, cs;
                for (const auto& s : prop_ls) ls.push_back(apeq::parse_scalar(s));
                for (const auto& s : prop_cs) cs.push_back(apeq::parse_scalar(s));
                eq = apeq::family_proportional(prop_ps, prop_qs, ls, cs);
            } else if (*fam_hd) {
                eq = apeq::family_hom_difference(fw);
            } else if (*fam_hs) {
                eq = apeq::family_hom_scaled(fw, apeq::parse_scalar(s_c),
                                             apeq::parse_scalar(s_a1),
                                             apeq::parse_scalar(s_b1),
                                             apeq::parse_scalar(s_b2));
            } else if (*fam_re) {
                eq = apeq::family_repeated_exponent(fp, fq);
            } else if (*fam_so) {
                eq = apeq::family_second_order(fw);
            }
            apeq::Program prog;
            prog.equation = eq;
            prog.has_equation = true;
            bool identity = eq.verify();
            if (as_json) {
                std::cout << json{{"program", apeq::format_program(prog)},
                                  {"identity", identity}}
                                 .dump(2)
                          << "\n";
            } else {
                std::cout << apeq::format_program(prog);
                std::cout << "# identity: " << (identity ? "yes" : "NO") << "\n";
            }
            return 0;
        }
    } catch (const apeq::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
