#pragma once

// Truncated bivariate formal series. A QSeries is a sparse map from n24
// (true q-exponent n24/24) to a Laurent polynomial in r (RLaurent: sparse map
// from l2, true r-exponent l2/2, to Cyc12). prec24 marks the first unknown
// q-exponent; stored terms always satisfy n24 < prec24. Precision propagation
// is pessimistic and comparisons beyond the common precision are errors.

#include "jpl/cyc12.hpp"
#include "jpl/rational.hpp"

#include <json.hpp>

#include <map>
#include <sstream>
#include <string>

namespace jpl {

using RLaurent = std::map<long, Cyc12>;

inline void rl_add_term(RLaurent& p, long l2, const Cyc12& c) {
    if (c.is_zero()) return;
    auto it = p.find(l2);
    if (it == p.end()) {
        p.emplace(l2, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) p.erase(it);
    }
}

inline RLaurent rl_add(const RLaurent& a, const RLaurent& b) {
    RLaurent r = a;
    for (const auto& [l, c] : b) rl_add_term(r, l, c);
    return r;
}

inline RLaurent rl_neg(const RLaurent& a) {
    RLaurent r;
    for (const auto& [l, c] : a) r.emplace(l, -c);
    return r;
}

inline RLaurent rl_mul(const RLaurent& a, const RLaurent& b) {
    RLaurent r;
    for (const auto& [la, ca] : a)
        for (const auto& [lb, cb] : b) rl_add_term(r, la + lb, ca * cb);
    return r;
}

inline RLaurent rl_scale(const RLaurent& a, const Cyc12& s) {
    RLaurent r;
    if (s.is_zero()) return r;
    for (const auto& [l, c] : a) rl_add_term(r, l, c * s);
    return r;
}

// Exact Laurent-polynomial division; throws if the quotient is not a
// Laurent polynomial.
inline RLaurent rl_div(const RLaurent& a, const RLaurent& b) {
    if (b.empty()) throw error("RLaurent division by zero");
    RLaurent rem = a, q;
    const auto& [lb, cb] = *b.begin();
    long bmax = b.rbegin()->first;
    while (!rem.empty()) {
        long la = rem.begin()->first;
        long shift = la - lb;
        // An exact quotient has top exponent rem_max - bmax at every step.
        if (shift > rem.rbegin()->first - bmax)
            throw error("quotient not a Laurent-polynomial series");
        Cyc12 c = rem.begin()->second / cb;
        // q += c x^shift; rem -= c x^shift * b
        rl_add_term(q, shift, c);
        for (const auto& [l, cc] : b) rl_add_term(rem, l + shift, -(c * cc));
    }
    return q;
}

inline bool rl_symmetric(const RLaurent& a) {
    for (const auto& [l, c] : a) {
        auto it = a.find(-l);
        if (it == a.end() || !(it->second == c)) return false;
    }
    return true;
}

struct QSeries {
    std::map<long, RLaurent> t;  // n24 -> layer
    long prec24 = 0;

    QSeries() = default;
    explicit QSeries(long prec) : prec24(prec) {}

    static QSeries one(long prec) {
        QSeries s(prec);
        if (prec > 0) s.t[0] = RLaurent{{0, Cyc12(1)}};
        return s;
    }
    static QSeries zero(long prec) { return QSeries(prec); }

    bool is_zero() const { return t.empty(); }

    // Least stored exponent; by convention prec24 for the zero series.
    long ord24() const { return t.empty() ? prec24 : t.begin()->first; }

    void add_term(long n24, long l2, const Cyc12& c) {
        if (n24 >= prec24 || c.is_zero()) return;
        rl_add_term(t[n24], l2, c);
        if (t[n24].empty()) t.erase(n24);
    }

    Cyc12 coeff(long n24, long l2) const {
        if (n24 >= prec24) throw error("QSeries coefficient beyond precision");
        auto it = t.find(n24);
        if (it == t.end()) return Cyc12(0);
        auto jt = it->second.find(l2);
        return jt == it->second.end() ? Cyc12(0) : jt->second;
    }

    RLaurent layer(long n24) const {
        if (n24 >= prec24) throw error("QSeries layer beyond precision");
        auto it = t.find(n24);
        return it == t.end() ? RLaurent{} : it->second;
    }

    QSeries truncated(long prec) const {
        QSeries r(std::min(prec, prec24));
        for (const auto& [n, lay] : t) {
            if (n >= r.prec24) break;
            r.t.emplace(n, lay);
        }
        return r;
    }
};

inline QSeries operator+(const QSeries& a, const QSeries& b) {
    QSeries r(std::min(a.prec24, b.prec24));
    for (const auto& [n, lay] : a.t)
        if (n < r.prec24) r.t[n] = lay;
    for (const auto& [n, lay] : b.t) {
        if (n >= r.prec24) continue;
        RLaurent s = rl_add(r.t.count(n) ? r.t[n] : RLaurent{}, lay);
        if (s.empty())
            r.t.erase(n);
        else
            r.t[n] = std::move(s);
    }
    return r;
}

inline QSeries operator-(const QSeries& a) {
    QSeries r(a.prec24);
    for (const auto& [n, lay] : a.t) r.t[n] = rl_neg(lay);
    return r;
}

inline QSeries operator-(const QSeries& a, const QSeries& b) { return a + (-b); }

inline QSeries operator*(const QSeries& a, const QSeries& b) {
    long prec = std::min(a.prec24 + b.ord24(), b.prec24 + a.ord24());
    QSeries r(prec);
    for (const auto& [na, la] : a.t) {
        for (const auto& [nb, lb] : b.t) {
            long n = na + nb;
            if (n >= prec) break;  // b.t ascending in nb
            RLaurent prod = rl_mul(la, lb);
            RLaurent& dst = r.t[n];
            for (const auto& [l, c] : prod) rl_add_term(dst, l, c);
        }
    }
    for (auto it = r.t.begin(); it != r.t.end();)
        it = it->second.empty() ? r.t.erase(it) : std::next(it);
    return r;
}

inline QSeries scale(const QSeries& a, const Cyc12& s) {
    QSeries r(a.prec24);
    if (s.is_zero()) return r;
    for (const auto& [n, lay] : a.t) r.t[n] = rl_scale(lay, s);
    return r;
}

inline QSeries operator*(const Cyc12& s, const QSeries& a) { return scale(a, s); }
inline QSeries operator*(const BigRational& s, const QSeries& a) {
    return scale(a, Cyc12(s));
}

// Shift by q^{s24} r^{l2}; precision shifts along with the exponents.
inline QSeries monomial_shift(const QSeries& a, long s24, long l2) {
    QSeries r(a.prec24 + s24);
    for (const auto& [n, lay] : a.t) {
        RLaurent moved;
        for (const auto& [l, c] : lay) moved.emplace(l + l2, c);
        r.t.emplace(n + s24, std::move(moved));
    }
    return r;
}

// Exact series division: a = q*b to the deducible precision.
inline QSeries series_div(const QSeries& a, const QSeries& b) {
    if (b.is_zero()) throw error("series division by zero");
    long ob = b.ord24();
    const RLaurent& blead = b.t.begin()->second;
    long prec = std::min(a.prec24 - ob, b.prec24 + a.ord24() - 2 * ob);
    QSeries q(prec);
    QSeries rem = a;
    while (!rem.is_zero()) {
        long nq = rem.ord24() - ob;
        if (nq >= prec) break;
        RLaurent qlay = rl_div(rem.t.begin()->second, blead);
        q.t.emplace(nq, qlay);
        // rem -= qlay q^{nq} * b
        for (const auto& [nb, lb] : b.t) {
            long n = nq + nb;
            if (n >= rem.prec24) break;
            RLaurent prod = rl_mul(qlay, lb);
            auto it = rem.t.find(n);
            if (it == rem.t.end()) it = rem.t.emplace(n, RLaurent{}).first;
            for (const auto& [l, c] : prod) rl_add_term(it->second, l, -c);
            if (it->second.empty()) rem.t.erase(it);
        }
    }
    return q;
}

inline QSeries pow(const QSeries& a, long e) {
    if (e < 0) {
        // Routed through exact division.
        return series_div(QSeries::one(a.prec24 - (e + 1) * a.ord24()), pow(a, -e));
    }
    long prec = e == 0 ? a.prec24 : a.prec24 + (e - 1) * a.ord24();
    QSeries r = QSeries::one(prec);
    for (long i = 0; i < e; i++) r = r * a;
    r.prec24 = std::min(r.prec24, prec);
    return r;
}

// phi(tau, z) -> phi(tau, s z): r-exponents scale by s.
inline QSeries z_scale(const QSeries& a, long s) {
    QSeries r(a.prec24);
    for (const auto& [n, lay] : a.t) {
        RLaurent out;
        for (const auto& [l, c] : lay) out.emplace(l * s, c);
        r.t.emplace(n, std::move(out));
    }
    return r;
}

// (1/2 pi i) d/dz: term c q^n r^l -> l c q^n r^l (l = l2/2, exact).
inline QSeries z_derivative(const QSeries& a) {
    QSeries r(a.prec24);
    for (const auto& [n, lay] : a.t) {
        RLaurent out;
        for (const auto& [l, c] : lay) {
            Cyc12 v = make_rational(l, 2) * c;
            if (!v.is_zero()) out.emplace(l, v);
        }
        if (!out.empty()) r.t.emplace(n, std::move(out));
    }
    return r;
}

// Equality of all coefficients with n24 < upto; requires both operands to
// be known that far.
inline bool equal_at(const QSeries& a, const QSeries& b, long upto) {
    if (upto > a.prec24 || upto > b.prec24)
        throw error("QSeries comparison beyond known precision");
    auto scan = [upto](const QSeries& x, const QSeries& y) {
        for (const auto& [n, lay] : x.t) {
            if (n >= upto) break;
            for (const auto& [l, c] : lay)
                if (!(y.coeff(n, l) == c)) return false;
        }
        return true;
    };
    return scan(a, b) && scan(b, a);
}

inline bool equal_to_common_prec(const QSeries& a, const QSeries& b) {
    return equal_at(a, b, std::min(a.prec24, b.prec24));
}

// r -> 1 specialization: sums each q-layer (e.g. phi(tau, 0)).
inline QSeries collapse_r(const QSeries& a) {
    QSeries r(a.prec24);
    for (const auto& [n, lay] : a.t) {
        Cyc12 s(0);
        for (const auto& [l, c] : lay) s += c;
        if (!s.is_zero()) r.t[n] = RLaurent{{0, s}};
    }
    return r;
}

// Canonical JSON: terms ascending by n24 then l2, rationals as "p/q".
inline nlohmann::ordered_json to_json(const QSeries& s) {
    nlohmann::ordered_json j;
    j["prec24"] = s.prec24;
    j["terms"] = nlohmann::ordered_json::array();
    for (const auto& [n, lay] : s.t) {
        nlohmann::ordered_json term;
        term["n24"] = n;
        term["coeffs"] = nlohmann::ordered_json::array();
        for (const auto& [l, c] : lay) {
            nlohmann::ordered_json ce;
            ce["l2"] = l;
            ce["c"] = {rational_str(c[0]), rational_str(c[1]), rational_str(c[2]),
                       rational_str(c[3])};
            term["coeffs"].push_back(std::move(ce));
        }
        j["terms"].push_back(std::move(term));
    }
    return j;
}

}  // namespace jpl
