#pragma once

// The arithmetic lifting of Jacobi cusp forms to paramodular forms: the
// Fourier-Jacobi layers fj(m) = m^{2-k} (phi |_k T^{(Q)}_-(m)) for m in an
// arithmetic progression mod Q, triple-indexed coefficient access, the
// characters chi_Q / chi_{Q,+-} on generators, and the V_t coefficient
// symmetry A(n,l,m) = A(m',l,n') in lattice units.

#include "jpl/jacobi.hpp"

#include <json.hpp>

#include <map>
#include <set>
#include <tuple>

namespace jpl {

struct CharacterQ {
    long t, Q;
    int sign;  // value on V_t; 0 when not extended to the plus group
};

struct ParamodularForm {
    long t = 0;
    long weight2 = 0;
    long Q = 1;
    long classResidue = 1;
    long mMax = 0;
    long seedIndex2 = 0;          // 2R, the seed's index
    int charSign = 0;             // (-1)^k from the plus-group extension
    std::map<long, QSeries> fj;   // m -> layer of Jacobi index m R
};

// Lift of a cusp-classified seed. classResidue = 1 is the lifting (1.9);
// other residues coprime to Q give the transported variants.
inline ParamodularForm lift(const JacobiForm& phi, long Q, long classResidue,
                            long mMax, long prec24) {
    if (Q < 1 || 12 % Q != 0) throw error("lift: Q must divide 12");
    if (mod_ll(phi.weight2, 2) != 0) throw error("lift: non-integral weight");
    if (mod_ll(phi.etaExp * Q, 24) != 0)
        throw error("seed multiplier incompatible with Q");
    if ((phi.index2 * Q) % 2 != 0) throw error("lift: t = Q R is not integral");
    long t = phi.index2 * Q / 2;
    if (mod_ll(phi.hExp - 2 * t / Q, 2) != 0)
        throw error("seed multiplier incompatible with Q");
    classResidue = mod_ll(classResidue, Q);
    if (gcd_ll(classResidue == 0 ? Q : classResidue, Q) != 1)
        throw error("lift: class residue not invertible mod Q");

    ParamodularForm F;
    F.t = t;
    F.weight2 = phi.weight2;
    F.Q = Q;
    F.classResidue = classResidue == 0 ? Q : classResidue;  // smallest m > 0
    F.mMax = mMax;
    F.seedIndex2 = phi.index2;
    long k = phi.weight2 / 2;
    F.charSign = k % 2 == 0 ? 1 : -1;

    JacobiForm seed = phi;
    seed.series = seed.series.truncated(prec24);
    for (long m = F.classResidue; m <= mMax; m += Q) {
        JacobiForm tm = hecke_minus(seed, m, Q);
        F.fj.emplace(m, scale(tm.series, Cyc12(rational_pow(m, 2 - k))));
    }
    if (F.fj.empty()) throw error("lift: no Fourier-Jacobi layers below mMax");
    return F;
}

// A(n, l, m): coefficient of q^{n24/24} r^{l2/2} in the layer of index m R.
// Structurally zero off the residue class; out-of-precision access is an
// error, never a silent zero.
inline Cyc12 fourier_coeff(const ParamodularForm& F, long n24, long l2, long m) {
    if (m <= 0 || mod_ll(m - F.classResidue, F.Q) != 0) return Cyc12(0);
    auto it = F.fj.find(m);
    if (it == F.fj.end()) throw error("fourier_coeff: layer beyond mMax");
    return it->second.coeff(n24, l2);  // throws beyond layer precision
}

struct SymmetryReport {
    long pairs_checked = 0;
    long violations = 0;
    bool symmetric() const { return violations == 0; }
};

// Checks A(n,l,m) = A(n',l,m') for the V_t swap: in lattice units the mirror
// of (n24, m) is (n24', m') = (24 m / Q, n24 Q / 24). Only pairs with both
// sides inside the computed window are compared; the required depth is
// mMax * 24 lattice units.
inline SymmetryReport maass_symmetry_check(const ParamodularForm& F) {
    SymmetryReport rep;
    std::set<std::tuple<long, long, long, long, long>> done;
    for (const auto& [m, layer] : F.fj) {
        if ((24 * m) % F.Q != 0) continue;
        long n24_2 = 24 * m / F.Q;
        for (const auto& [n24, lay] : layer.t) {
            if ((n24 * F.Q) % 24 != 0) continue;
            long m2 = n24 * F.Q / 24;
            if (m2 <= 0 || m2 > F.mMax || mod_ll(m2 - F.classResidue, F.Q) != 0)
                continue;
            auto jt = F.fj.find(m2);
            if (jt == F.fj.end() || n24_2 >= jt->second.prec24) continue;
            auto lo = std::make_pair(n24, m), hi = std::make_pair(n24_2, m2);
            if (hi < lo) std::swap(lo, hi);
            for (const auto& [l2, c] : lay) {
                if (!done.emplace(lo.first, lo.second, hi.first, hi.second, l2)
                         .second)
                    continue;
                rep.pairs_checked++;
                if (!(jt->second.coeff(n24_2, l2) == c)) rep.violations++;
            }
        }
    }
    if (rep.pairs_checked == 0)
        throw error("insufficient precision for symmetry check");
    return rep;
}

// Character values chi_Q (and chi_{Q,+-}) on the generator types.
inline Cyc12 character_value_sl2(const CharacterQ& c, const Sl2Matrix& g) {
    return eta_char(g, mod_ll(24 / c.Q, 24));
}
inline Cyc12 character_value_heisenberg(const CharacterQ& c, long lambda, long mu,
                                        long kappa) {
    long e = 2 * c.t / c.Q;
    if (mod_ll(e, 2) == 0) return Cyc12(1);
    return Cyc12(v_H(lambda, mu, kappa));
}
inline Cyc12 character_value_center(const CharacterQ& c, long kappa) {
    // [0,0; kappa/t] -> e^{2 pi i kappa / Q}
    return Cyc12::root_of_unity((12 / c.Q) * kappa);
}
inline Cyc12 character_value_Vt(const CharacterQ& c) {
    if (c.sign == 0) throw error("character not extended to the plus group");
    return Cyc12(c.sign);
}

inline nlohmann::ordered_json to_json(const ParamodularForm& F) {
    nlohmann::ordered_json j;
    j["t"] = F.t;
    j["weight2"] = F.weight2;
    j["Q"] = F.Q;
    j["class"] = F.classResidue;
    j["fj"] = nlohmann::ordered_json::array();
    for (const auto& [m, s] : F.fj) {
        nlohmann::ordered_json layer;
        layer["m"] = m;
        layer["series"] = to_json(s);
        j["fj"].push_back(std::move(layer));
    }
    return j;
}

}  // namespace jpl
