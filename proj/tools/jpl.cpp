// jpl: exact q-expansions of Jacobi forms with multiplier systems, Hecke
// operators and arithmetic lifts to paramodular forms, cusp dimension
// counts, paramodular group identities, and the weight-3 genus table.

#include "jpl/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <string>

namespace {

using namespace jpl;

std::string half_str(long two_x) {
    if (two_x % 2 == 0) return std::to_string(two_x / 2);
    return std::to_string(two_x) + "/2";
}

std::string pretty_rational(const BigRational& q) {
    std::string s = q.get_num().get_str();
    if (q.get_den() != 1) s += "/" + q.get_den().get_str();
    return s;
}

std::string coeff_str(const Cyc12& c) {
    if (c.is_rational()) return pretty_rational(c.rational_value());
    std::string s = "(";
    const char* pw[] = {"", "w", "w^2", "w^3"};
    bool first = true;
    for (int i = 0; i < 4; i++) {
        if (c[i] == 0) continue;
        std::string v = pretty_rational(c[i]);
        if (!first && v[0] != '-') s += "+";
        if (i == 0) {
            s += v;
        } else {
            if (v == "1")
                s += pw[i];
            else if (v == "-1")
                s += std::string("-") + pw[i];
            else
                s += v + "*" + pw[i];
        }
        first = false;
    }
    return s + ")";
}

std::string rlaurent_str(const RLaurent& lay) {
    std::string s;
    bool first = true;
    for (const auto& [l2, c] : lay) {
        std::string cs = coeff_str(c);
        bool neg = cs[0] == '-';
        if (first) {
            if (neg) {
                s += "-";
                cs = cs.substr(1);
            }
        } else {
            s += neg ? " - " : " + ";
            if (neg) cs = cs.substr(1);
        }
        first = false;
        std::string mono;
        if (l2 != 0) {
            mono = "r";
            if (l2 != 2) mono += "^{" + half_str(l2) + "}";
        }
        if (mono.empty())
            s += cs;
        else if (cs == "1")
            s += mono;
        else
            s += cs + "*" + mono;
    }
    return s.empty() ? "0" : s;
}

void print_form_text(const JacobiForm& f) {
    ClassifyResult cls = classify(f);
    std::cout << "weight " << half_str(f.weight2) << "  index "
              << half_str(f.index2) << "  v_eta^" << f.etaExp << "  v_H^"
              << f.hExp << "\n";
    std::cout << "classification: " << to_string(cls.cls)
              << " (verified to prec24 " << f.series.prec24 << ")\n";
    for (const auto& [n24, lay] : f.series.t) {
        std::cout << "q^{" << n24 << "/24} * ( " << rlaurent_str(lay) << " )\n";
    }
}

nlohmann::ordered_json form_json(const JacobiForm& f) {
    nlohmann::ordered_json j;
    j["weight2"] = f.weight2;
    j["index2"] = f.index2;
    j["etaExp"] = f.etaExp;
    j["hExp"] = f.hExp;
    j["class"] = to_string(classify(f).cls);
    j["series"] = to_json(f.series);
    return j;
}

int cmd_expand(const std::string& expr, long prec, bool json) {
    JacobiForm f = parse_block(expr, prec);
    if (json)
        std::cout << form_json(f).dump() << "\n";
    else
        print_form_text(f);
    return 0;
}

int cmd_dim(long weight, long index) {
    std::cout << dim_cusp(weight, index) << "\n";
    return 0;
}

int cmd_lift(const std::string& expr, long Q, long cls, long mmax, long prec,
             bool json) {
    JacobiForm seed = parse_block(expr, prec);
    ParamodularForm F = lift(seed, Q, cls, mmax, prec);
    if (json) {
        std::cout << to_json(F).dump() << "\n";
        return 0;
    }
    std::cout << "t = " << F.t << "  weight " << half_str(F.weight2) << "  chi_"
              << F.Q << (F.charSign > 0 ? ",+" : ",-") << "  layers m = "
              << F.classResidue << " mod " << F.Q << ", m <= " << F.mMax << "\n";
    for (const auto& [m, s] : F.fj) {
        std::cout << "fj(" << m << "): prec24 " << s.prec24;
        if (!s.is_zero())
            std::cout << ", first layer q^{" << s.ord24() << "/24} * ( "
                      << rlaurent_str(s.t.begin()->second) << " )";
        std::cout << "\n";
    }
    try {
        SymmetryReport r = maass_symmetry_check(F);
        std::cout << "coefficient symmetry: " << r.violations
                  << " violations over " << r.pairs_checked << " pairs\n";
    } catch (const error& e) {
        std::cout << "coefficient symmetry: " << e.what() << "\n";
    }
    return 0;
}

int cmd_group(long t, bool json) {
    Generators g = generators(t);
    auto [t1, t2] = abelianization(t);
    SuiteReport suite = identity_suite(t);
    if (json) {
        nlohmann::ordered_json j;
        j["t"] = t;
        j["abelianization"] = {t1, t2};
        j["plus_abelianization"] = {2, t2};
        j["characters"] = characters(t).size();
        j["identity_suite"] = nlohmann::ordered_json::array();
        for (const auto& c : suite.checks)
            j["identity_suite"].push_back({{"name", c.name}, {"pass", c.pass}});
        j["generators"] = {{"A", to_json(g.A, "rational")},
                           {"B", to_json(g.B, "rational")},
                           {"C", to_json(g.C, "rational")},
                           {"J_t", to_json(g.Jt, "rational")},
                           {"V_t", to_json(g.Vt, "plus")}};
        std::cout << j.dump() << "\n";
        return suite.all_pass() ? 0 : 1;
    }
    std::cout << "Gamma_" << t << ": abelianization Z/" << t1 << " x Z/" << t2
              << ", plus extension Z/2 x Z/" << t2 << ", " << characters(t).size()
              << " characters\n";
    for (const auto& c : suite.checks)
        std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << "\n";
    return suite.all_pass() ? 0 : 1;
}

int cmd_verify(const std::string& suite, bool json) {
    VerifyReport rep = verify_suite(suite);
    if (json) {
        nlohmann::ordered_json j;
        j["suite"] = suite;
        j["pass"] = rep.all_pass();
        j["checks"] = nlohmann::ordered_json::array();
        for (const auto& c : rep.checks)
            j["checks"].push_back(
                {{"id", c.id}, {"pass", c.pass}, {"detail", c.detail}});
        std::cout << j.dump() << "\n";
    } else {
        for (const auto& c : rep.checks) {
            std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.id;
            if (!c.detail.empty()) std::cout << "  (" << c.detail << ")";
            std::cout << "\n";
        }
        std::cout << (rep.all_pass() ? "all checks passed" : "CHECKS FAILED")
                  << "\n";
    }
    return rep.all_pass() ? 0 : 1;
}

int cmd_genus_table(long prec, bool json) {
    bool all_ok = true;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& entry : genus_manifest()) {
        nlohmann::ordered_json row;
        row["t"] = entry.t;
        row["charOrder"] = entry.charOrder;
        row["forms"] = nlohmann::ordered_json::array();
        for (const auto& src : entry.blockExprs) {
            GenusValidation v =
                validate_genus_expr(entry.t, entry.charOrder, src, prec);
            all_ok = all_ok && v.ok();
            row["forms"].push_back(
                {{"expr", src}, {"ok", v.ok()}, {"status", v.status}});
        }
        rows.push_back(std::move(row));
    }
    nlohmann::ordered_json ann = nlohmann::ordered_json::array();
    for (const auto& a : genus_annotations())
        ann.push_back({{"t", a.t},
                       {"genus", a.genus},
                       {"note", a.genus == 0
                                    ? "no weight-3 cusp form for any character"
                                    : "maximal abelian cover has genus 1"}});
    if (json) {
        nlohmann::ordered_json j;
        j["rows"] = std::move(rows);
        j["annotations"] = std::move(ann);
        j["pass"] = all_ok;
        std::cout << j.dump() << "\n";
    } else {
        for (const auto& row : rows) {
            std::cout << "t = " << row["t"] << "  character order "
                      << row["charOrder"] << "\n";
            for (const auto& f : row["forms"])
                std::cout << "  " << (f["ok"].get<bool>() ? "[OK]  " : "[BAD] ")
                          << f["expr"].get<std::string>() << "  ("
                          << f["status"].get<std::string>() << ")\n";
        }
        for (const auto& a : ann)
            std::cout << "t = " << a["t"] << "  genus " << a["genus"] << "  ["
                      << a["note"].get<std::string>() << "]\n";
    }
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Jacobi-form expansions and paramodular lifts"};
    app.require_subcommand(1);
    app.fallthrough();
    long prec = 96;
    bool json = false;
    app.add_option("--prec", prec, "series precision in 1/24 lattice units");
    app.add_flag("--json", json, "machine-readable output");

    std::string expr;
    auto* c_expand = app.add_subcommand("expand", "expand a theta-block expression");
    c_expand->add_option("expr", expr, "expression")->required();

    long weight = 0, index = 0;
    auto* c_dim = app.add_subcommand("dim", "dim of the Jacobi cusp space");
    c_dim->add_option("--weight", weight, "weight k")->required();
    c_dim->add_option("--index", index, "index m")->required();

    long Q = 1, cls = 1, mmax = 3;
    std::string lift_expr;
    auto* c_lift = app.add_subcommand("lift", "arithmetic lift of a cusp seed");
    c_lift->add_option("expr", lift_expr, "seed expression")->required();
    c_lift->add_option("--Q", Q, "character order parameter (divides 12)")
        ->required();
    c_lift->add_option("--class", cls, "Fourier-Jacobi residue class mod Q");
    c_lift->add_option("--mmax", mmax, "largest Fourier-Jacobi index");

    long t = 1;
    auto* c_group = app.add_subcommand("group", "paramodular group queries");
    c_group->add_option("--t", t, "polarization")->required();

    std::string suite = "all";
    auto* c_verify = app.add_subcommand("verify", "run verification suites");
    c_verify->add_option("--suite", suite,
                         "all|blocks|jacobi|lift|group|dims|genus");

    auto* c_genus = app.add_subcommand("genus-table",
                                       "weight-3 forms for exceptional t");

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (c_expand->parsed()) return cmd_expand(expr, prec, json);
        if (c_dim->parsed()) return cmd_dim(weight, index);
        if (c_lift->parsed()) return cmd_lift(lift_expr, Q, cls, mmax, prec, json);
        if (c_group->parsed()) return cmd_group(t, json);
        if (c_verify->parsed()) return cmd_verify(suite, json);
        if (c_genus->parsed()) return cmd_genus_table(prec, json);
    } catch (const jpl::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const jpl::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
