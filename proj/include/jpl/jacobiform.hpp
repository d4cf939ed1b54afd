#pragma once

// JacobiForm: a QSeries together with its grading metadata. True weight is
// weight2/2, true index is index2/2; etaExp mod 24 and hExp mod 2 record the
// multiplier system v_eta^etaExp x v_H^hExp. Under multiplication weights and
// indices add, etaExp adds mod 24, hExp mod 2.

#include "jpl/qseries.hpp"

#include <string>
#include <utility>

namespace jpl {

struct JacobiForm {
    QSeries series;
    long weight2 = 0;
    long index2 = 0;
    int etaExp = 0;  // residue mod 24
    int hExp = 0;    // residue mod 2
    std::string label;

    JacobiForm() = default;
    JacobiForm(QSeries s, long w2, long i2, long eta, long h, std::string lab = {})
        : series(std::move(s)),
          weight2(w2),
          index2(i2),
          etaExp(static_cast<int>(mod_ll(eta, 24))),
          hExp(static_cast<int>(mod_ll(h, 2))),
          label(std::move(lab)) {
        if (index2 < 0) throw error("JacobiForm: negative index");
    }

    static JacobiForm unit(long prec24) {
        return {QSeries::one(prec24), 0, 0, 0, 0, "1"};
    }
};

inline JacobiForm jf_mul(const JacobiForm& a, const JacobiForm& b) {
    return {a.series * b.series, a.weight2 + b.weight2, a.index2 + b.index2,
            a.etaExp + b.etaExp, a.hExp + b.hExp,
            a.label.empty() || b.label.empty() ? "" : a.label + "*" + b.label};
}

inline JacobiForm jf_div(const JacobiForm& a, const JacobiForm& b) {
    if (a.index2 - b.index2 < 0) throw error("JacobiForm division: negative index");
    return {series_div(a.series, b.series), a.weight2 - b.weight2,
            a.index2 - b.index2, a.etaExp - b.etaExp, a.hExp - b.hExp,
            a.label.empty() || b.label.empty() ? "" : a.label + "/" + b.label};
}

inline JacobiForm jf_pow(const JacobiForm& a, long e) {
    if (e < 0) {
        JacobiForm p = jf_pow(a, -e);
        JacobiForm one = JacobiForm::unit(p.series.prec24 - p.series.ord24());
        return jf_div(one, p);
    }
    return {pow(a.series, e), a.weight2 * e, a.index2 * e, a.etaExp * e,
            a.hExp * e, ""};
}

inline JacobiForm jf_add(const JacobiForm& a, const JacobiForm& b) {
    if (a.weight2 != b.weight2 || a.index2 != b.index2 || a.etaExp != b.etaExp ||
        a.hExp != b.hExp)
        throw error("JacobiForm addition: mismatched grading");
    return {a.series + b.series, a.weight2, a.index2, a.etaExp, a.hExp, ""};
}

inline JacobiForm jf_scale(const JacobiForm& a, const Cyc12& s) {
    return {scale(a.series, s), a.weight2, a.index2, a.etaExp, a.hExp, a.label};
}

// phi(tau, z) -> phi(tau, s z): index scales by s^2, v_H exponent by s.
inline JacobiForm jf_zscale(const JacobiForm& a, long s) {
    return {z_scale(a.series, s), a.weight2, a.index2 * s * s, a.etaExp,
            a.hExp * s, ""};
}

// Eichler-Zagier bracket [phi1, phi2] = m2 D(phi1) phi2 - m1 phi1 D(phi2)
// with D = (1/2 pi i) d/dz and m_i the true indices. Weight k1+k2+1, index
// m1+m2, multipliers multiply; the output is a cusp form.
inline JacobiForm bracket(const JacobiForm& a, const JacobiForm& b) {
    BigRational m1 = make_rational(a.index2, 2), m2 = make_rational(b.index2, 2);
    QSeries s = m2 * (z_derivative(a.series) * b.series) -
                m1 * (a.series * z_derivative(b.series));
    return {std::move(s), a.weight2 + b.weight2 + 2, a.index2 + b.index2,
            a.etaExp + b.etaExp, a.hExp + b.hExp, ""};
}

}  // namespace jpl
