#pragma once

// The table of weight-3 theta-block seeds for the exceptional polarizations
// t = 1..12, 14, 15, 16, 18, 20, 24, 30, 36, keyed by the order of the lift
// character (2, 3 or 4), together with its validation: each expression must
// parse to weight 3 and index t/Q with the stated multiplier, and be
// cusp-classified to the working precision. Polarizations 1, 2, 4, 5 admit
// no weight-3 cusp form for any character and appear as genus-0 summary
// rows; t = 3 and 7 are the genus-1 cases.

#include "jpl/jacobi.hpp"

#include <string>
#include <vector>

namespace jpl {

struct GenusTableEntry {
    long t;
    int charOrder;  // order of the lift character: Q in {2, 3, 4}
    std::vector<std::string> blockExprs;
};

inline const std::vector<GenusTableEntry>& genus_manifest() {
    static const std::vector<GenusTableEntry> table = {
        // order-2 characters (multiplier v_eta^12 x v_H^t)
        {3, 2, {"eta^3*theta(1)^3"}},
        {6, 2, {"eta^3*theta(1)^2*theta(2)"}},
        {7, 2, {"theta(1)^2*bracket(theta(1),theta(2))"}},
        {9, 2, {"eta^3*theta(1)*theta(2)^2"}},
        {10, 2, {"theta(1)*theta(2)*bracket(theta(1),theta(2))"}},
        {11, 2, {"eta^3*theta(1)^2*theta(3)"}},
        {12, 2, {"eta^3*theta(2)^3", "theta(1)^2*bracket(theta(1),theta(3))"}},
        {14, 2, {"eta^3*theta(1)*theta(2)*theta(3)"}},
        {15, 2,
         {"theta(1)*theta(3)*bracket(theta(1),theta(2))",
          "theta(1)*theta(2)*bracket(theta(1),theta(3))",
          "theta(1)^2*bracket(theta(2),theta(3))",
          "eta^2*theta32(1)*theta(2)^3", "eta^2*theta32(2)*theta(1)^3"}},
        {18, 2,
         {"eta^3*theta(1)^2*theta(4)", "eta*theta32(1)^2*theta(2)^3",
          "theta(2)*theta(3)*bracket(theta(1),theta(2))",
          "theta(2)^2*bracket(theta(1),theta(3))",
          "theta(1)*theta(2)*bracket(theta(2),theta(3))"}},
        {20, 2, {"theta(1)*theta(3)*bracket(theta(1),theta(3))"}},
        {24, 2, {"eta^3*theta(2)^2*theta(4)"}},
        {30, 2,
         {"eta^3*theta(1)*theta(2)*theta(5)",
          "eta^2*theta32(2)*theta(1)^2*theta(4)",
          "eta^2*theta32(3)*theta(1)^3",
          "eta*theta32(1)^2*theta(2)^2*theta(4)",
          "theta(3)*theta(4)*bracket(theta(1),theta(2))",
          "theta(2)*theta(4)*bracket(theta(1),theta(3))",
          "theta(2)*theta(3)*bracket(theta(1),theta(4))",
          "theta(1)*theta(4)*bracket(theta(2),theta(3))",
          "theta(1)*theta(3)*bracket(theta(2),theta(4))"}},
        {36, 2,
         {"eta^3*theta(2)*theta(4)^2", "eta^2*theta32(3)*theta(1)*theta(2)^2",
          "eta^2*theta32(2)*theta(2)^2*theta(4)",
          "theta(1)*theta(5)*bracket(theta(1),theta(3))",
          "theta(1)*theta(3)*bracket(theta(1),theta(5))",
          "theta(1)^2*bracket(theta(3),theta(5))"}},
        // order-4 characters (multiplier v_eta^6 or v_eta^18)
        {8, 4, {"eta^2*bracket(theta(1),theta32(1))"}},
        {16, 4, {"eta^6*theta(3)/theta(1)"}},
        // order-3 characters (multiplier v_eta^8)
        {6, 3, {"eta^5*theta(2)"}},
        {12, 3, {"eta*bracket(theta(1),theta(2))*theta32(1)"}},
        {15, 3, {"eta^3*theta(2)*theta32(1)^2"}},
        {18, 3, {"eta^4*theta(3)*theta32(1)"}},
        {24, 3, {"eta^5*theta(4)"}},
        {30, 3, {"eta^2*bracket(theta(2),theta(4))"}},
        {36, 3, {"eta^5*theta(3)*theta(4)/theta(1)"}},
    };
    return table;
}

struct GenusAnnotation {
    long t;
    int genus;  // known geometric genus of the maximal abelian cover
};

inline const std::vector<GenusAnnotation>& genus_annotations() {
    static const std::vector<GenusAnnotation> rows = {
        {1, 0}, {2, 0}, {4, 0}, {5, 0}, {3, 1}, {7, 1}};
    return rows;
}

struct GenusValidation {
    long t;
    int charOrder;
    std::string expr;
    bool parsed = false;
    bool weight_ok = false;
    bool index_ok = false;
    bool character_ok = false;
    bool cusp_ok = false;
    long prec24 = 0;
    std::string status;

    bool ok() const {
        return parsed && weight_ok && index_ok && character_ok && cusp_ok;
    }
};

inline GenusValidation validate_genus_expr(long t, int Q, const std::string& src,
                                           long prec24) {
    GenusValidation v;
    v.t = t;
    v.charOrder = Q;
    v.expr = src;
    v.prec24 = prec24;
    JacobiForm f;
    try {
        f = parse_block(src, prec24);
    } catch (const error& e) {
        v.status = std::string("parse failed: ") + e.what();
        return v;
    }
    v.parsed = true;
    v.weight_ok = f.weight2 == 6;
    v.index_ok = f.index2 * Q == 2 * t;
    long eta_order = 24 / gcd_ll(mod_ll(f.etaExp, 24) == 0 ? 24 : f.etaExp, 24);
    bool h_ok = mod_ll(f.hExp - 2 * t / Q, 2) == 0;
    v.character_ok = eta_order == Q && h_ok;
    v.cusp_ok = !f.series.is_zero() && classify(f).cls == FormClass::cusp;
    v.status = v.ok() ? "verified to prec24 " + std::to_string(prec24)
                      : "metadata or classification mismatch";
    return v;
}

}  // namespace jpl
