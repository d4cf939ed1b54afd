#pragma once

// Operators on Jacobi forms: the index-raising Hecke operators T^{(Q)}_-(m),
// cusp/holomorphic/weak classification by the norm 4Rn - l^2, q-orders and
// the vanishing-order bound, the weak-form decomposition over the
// phi_{-2,1}/phi_{0,1} polynomial algebra, the cusp dimension formula, and
// the theta-product cuspidality conditions.

#include "jpl/blocks.hpp"
#include "jpl/linalg.hpp"
#include "jpl/sl2.hpp"

#include <optional>
#include <tuple>
#include <vector>

namespace jpl {

// --------------------------------------------------------------------------
// Hecke operators T^{(Q)}_-(m)

inline BigRational rational_pow(long base, long e) {
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(base),
                  static_cast<unsigned long>(e < 0 ? -e : e));
    return e >= 0 ? BigRational(p) : make_rational(1, p);
}

// phi |_k T^{(Q)}_-(m): each source term f(n,l) contributes, for every
// factorization a d = m with d | nQ, the value m^{2k-3} d^{1-k} v_eta^{24/Q}
// (sigma_a) f(n,l) at (q^{na/d}, r^{la}). The b-summation has been carried
// out analytically (divisibility filter, factor d).
inline JacobiForm hecke_minus(const JacobiForm& phi, long m, long Q) {
    if (m < 1) throw error("hecke_minus: m must be positive");
    if (Q < 1 || 12 % Q != 0) throw error("hecke_minus: Q must divide 12");
    if (mod_ll(phi.weight2, 2) != 0)
        throw error("hecke_minus: non-integral weight");
    if (gcd_ll(m, Q) != 1) throw error("hecke_minus: gcd(m,Q) != 1");
    long k = phi.weight2 / 2;
    long prec_src = phi.series.prec24;
    long prec_res = (prec_src - 1) / m + 1;
    QSeries out(prec_res);
    for (long a = 1; a <= m; a++) {
        if (m % a) continue;
        long d = m / a;
        Cyc12 va = eta_char(hecke_sigma(a, Q), mod_ll(24 / Q, 24));
        Cyc12 c = Cyc12(rational_pow(m, 2 * k - 3) * rational_pow(d, 1 - k)) * va;
        for (const auto& [n24, lay] : phi.series.t) {
            // The b-summation telescopes to d exactly when d | nQ (for d = 1
            // it is the single term b = 0, so it always contributes).
            if (d > 1 && (n24 * Q) % (24 * d) != 0) continue;
            long n_out = n24 * a / d;
            if (n_out >= prec_res) continue;
            for (const auto& [l2, f] : lay) out.add_term(n_out, l2 * a, c * f);
        }
    }
    return {std::move(out), phi.weight2, phi.index2 * m, phi.etaExp, phi.hExp, ""};
}

// --------------------------------------------------------------------------
// Classification

enum class FormClass { cusp, holomorphic, weak, none };

inline const char* to_string(FormClass c) {
    switch (c) {
        case FormClass::cusp: return "cusp";
        case FormClass::holomorphic: return "holomorphic";
        case FormClass::weak: return "weak";
        default: return "none";
    }
}

struct NormEntry {
    long n24, l2;
    long long normScaled;  // 24 (4Rn - l^2) = 2 index2 n24 - 6 l2^2
};

struct ClassifyResult {
    FormClass cls = FormClass::cusp;
    long prec24 = 0;  // classification certified up to this precision only
    std::vector<NormEntry> profile;
};

inline ClassifyResult classify(const JacobiForm& phi) {
    ClassifyResult r;
    r.prec24 = phi.series.prec24;
    bool all_pos = true, all_nonneg = true, q_nonneg = true;
    for (const auto& [n24, lay] : phi.series.t) {
        for (const auto& [l2, c] : lay) {
            (void)c;
            long long norm = 2LL * phi.index2 * n24 - 6LL * l2 * l2;
            r.profile.push_back({n24, l2, norm});
            if (norm <= 0) all_pos = false;
            if (norm < 0) all_nonneg = false;
            if (n24 < 0) q_nonneg = false;
        }
    }
    r.cls = all_pos         ? FormClass::cusp
            : all_nonneg    ? FormClass::holomorphic
            : q_nonneg      ? FormClass::weak
                            : FormClass::none;
    return r;
}

// --------------------------------------------------------------------------
// q-order and the vanishing bound

inline BigRational q_order(const JacobiForm& phi) {
    if (phi.series.is_zero()) throw error("q_order of the zero series");
    return make_rational(phi.series.ord24(), 24);
}

// Bound for a non-zero cusp form of weight 2k and integral index m:
// ord_q <= min((3k-3+m)/9, (k+m)/6).
inline BigRational qorder_bound(long k, long m) {
    BigRational b1 = make_rational(3 * k - 3 + m, 9);
    BigRational b2 = make_rational(k + m, 6);
    return b1 < b2 ? b1 : b2;
}

// --------------------------------------------------------------------------
// Weak-form structure: phi = sum_i f_{w+2i} phi_{-2,1}^i phi_{0,1}^{t-i}
// with f homogeneous polynomials in E4, E6.

struct WeakMonomial {
    long alpha, beta;  // E4^alpha E6^beta
    Cyc12 coeff;
};

struct WeakDecomposition {
    long weight2 = 0;  // weight2 of the decomposed form
    long index = 0;    // integral index t
    std::map<long, std::vector<WeakMonomial>> f;  // i -> f_{w+2i}
};

namespace detail {

struct WeakBasisElem {
    long i, alpha, beta;
    QSeries series;
};

// All E4^a E6^b phi_{-2,1}^i phi_{0,1}^{t-i} of total weight w = weight2/2.
inline std::vector<WeakBasisElem> weak_basis(long weight2, long t, long prec24) {
    if (mod_ll(weight2, 4) != 0) throw error("weak basis needs even weight");
    long w = weight2 / 2;
    std::vector<WeakBasisElem> basis;
    JacobiForm e4 = build_E4(prec24), e6 = build_E6(prec24);
    JacobiForm pm = build_phim21(prec24), p0 = build_phi01(prec24);
    for (long i = 0; i <= t; i++) {
        long fw = w + 2 * i;
        if (fw < 0 || mod_ll(fw, 2) != 0) continue;
        QSeries mix = (pow(pm.series, i) * pow(p0.series, t - i)).truncated(prec24);
        for (long beta = 0; 6 * beta <= fw; beta++) {
            if ((fw - 6 * beta) % 4) continue;
            long alpha = (fw - 6 * beta) / 4;
            QSeries s =
                (pow(e4.series, alpha) * pow(e6.series, beta) * mix).truncated(prec24);
            basis.push_back({i, alpha, beta, std::move(s)});
        }
    }
    return basis;
}

}  // namespace detail

// Exact solve of the representation; throws when the input is not a weak
// Jacobi form of the stated weight and index.
inline WeakDecomposition decompose_weak(const JacobiForm& phi) {
    if (mod_ll(phi.weight2, 4) != 0)
        throw error("decompose_weak: weight must be an even integer");
    if (mod_ll(phi.index2, 2) != 0)
        throw error("decompose_weak: index must be integral");
    if (phi.series.ord24() < 0)
        throw error("decompose_weak: form is not weak (negative q-order)");
    long t = phi.index2 / 2;
    auto basis = detail::weak_basis(phi.weight2, t, phi.series.prec24);
    long need = 24 * (static_cast<long>(basis.size()) + 8);
    if (phi.series.prec24 < need)
        throw error("decompose_weak: insufficient precision (need prec24 >= " +
                    std::to_string(need) + ")");

    // Assemble the coefficient system over the union of supports.
    std::map<std::pair<long, long>, size_t> row_of;
    auto row_index = [&row_of](long n, long l) {
        return row_of.emplace(std::make_pair(n, l), row_of.size()).first->second;
    };
    long upto = phi.series.prec24;
    for (const auto& e : basis) {
        upto = std::min(upto, e.series.prec24);
    }
    for (const auto& e : basis)
        for (const auto& [n, lay] : e.series.t) {
            if (n >= upto) continue;
            for (const auto& [l, c] : lay) {
                (void)c;
                row_index(n, l);
            }
        }
    for (const auto& [n, lay] : phi.series.t) {
        if (n >= upto) continue;
        for (const auto& [l, c] : lay) {
            (void)c;
            row_index(n, l);
        }
    }
    std::vector<std::vector<Cyc12>> a(row_of.size(),
                                      std::vector<Cyc12>(basis.size(), Cyc12(0)));
    std::vector<Cyc12> b(row_of.size(), Cyc12(0));
    for (size_t j = 0; j < basis.size(); j++)
        for (const auto& [n, lay] : basis[j].series.t) {
            if (n >= upto) continue;
            for (const auto& [l, c] : lay) a[row_of.at({n, l})][j] = c;
        }
    for (const auto& [n, lay] : phi.series.t) {
        if (n >= upto) continue;
        for (const auto& [l, c] : lay) b[row_of.at({n, l})] = c;
    }
    auto sol = solve_linear(std::move(a), std::move(b));
    if (!sol)
        throw error("not a weak Jacobi form of stated weight/index");

    WeakDecomposition d;
    d.weight2 = phi.weight2;
    d.index = t;
    for (size_t j = 0; j < basis.size(); j++) {
        if (sol->x[j].is_zero()) continue;
        d.f[basis[j].i].push_back({basis[j].alpha, basis[j].beta, sol->x[j]});
    }
    return d;
}

// Reassemble a decomposition; used for the full-precision residual check.
inline JacobiForm recombine_weak(const WeakDecomposition& d, long prec24) {
    JacobiForm e4 = build_E4(prec24), e6 = build_E6(prec24);
    JacobiForm pm = build_phim21(prec24), p0 = build_phi01(prec24);
    QSeries acc(prec24);
    for (const auto& [i, monos] : d.f) {
        QSeries mix = (pow(pm.series, i) * pow(p0.series, d.index - i)).truncated(prec24);
        for (const auto& mo : monos) {
            QSeries s = (pow(e4.series, mo.alpha) * pow(e6.series, mo.beta) * mix)
                            .truncated(prec24);
            acc = acc + scale(s, mo.coeff);
        }
    }
    return {std::move(acc), d.weight2, 2 * d.index, 0, 0, ""};
}

// --------------------------------------------------------------------------
// The q^0 part of a weight-0 weak form of index t != 0 is never constant.

inline std::pair<bool, RLaurent> q0_nonconstant(const JacobiForm& phi) {
    if (phi.weight2 != 0) throw error("q0_nonconstant: weight must be 0");
    if (phi.index2 == 0) throw error("q0_nonconstant: index must be nonzero");
    if (phi.series.is_zero() || phi.series.ord24() != 0)
        throw error("q0_nonconstant: ord_q != 0");
    RLaurent q0 = phi.series.layer(0);
    bool nonconstant = false;
    for (const auto& [l, c] : q0) {
        (void)c;
        if (l != 0) nonconstant = true;
    }
    return {nonconstant, q0};
}

// --------------------------------------------------------------------------
// dim J^c_{k,m}, evaluated literally (partial terms may be negative).

inline long brace12(long m) {
    long f = m >= 0 ? m / 12 : -((-m + 11) / 12);
    return mod_ll(m, 12) == 2 ? f - 1 : f;
}

inline long dim_cusp(long k, long m) {
    if (k < 1 || m < 1) throw error("dim_cusp: k, m must be positive");
    long s = 0;
    if (k % 2 == 0) {
        for (long j = 0; j <= m; j++) s += brace12(k + 2 * j) - (j * j) / (4 * m);
    } else {
        for (long j = 1; j <= m - 1; j++)
            s += brace12(k + 2 * j - 1) - (j * j) / (4 * m);
    }
    return s;
}

// --------------------------------------------------------------------------
// Cuspidality conditions for the theta-product families.

enum class CuspFamily {
    theta_pair,    // theta_a theta_b
    quint_pair,    // (theta32)_a (theta32)_b
    theta_triple,  // theta_a theta_b theta_c
    quint_triple,
    theta_quad,  // theta_a theta_b theta_c theta_d
    quint_quad,
    mixed_pair,  // theta_a (theta32)_b
};

inline bool cusp_product_predicate(CuspFamily fam, const std::vector<long>& p) {
    for (long x : p)
        if (x <= 0) throw error("cusp predicate: parameters must be positive");
    auto gcd_all = [&p]() {
        long g = 0;
        for (long x : p) g = gcd_ll(g, x);
        return g;
    };
    auto prod_over_gcd_pow = [&]() {
        long g = gcd_all();
        long long prod = 1;
        for (long x : p) prod *= x / g;
        return prod;
    };
    switch (fam) {
        case CuspFamily::theta_pair:
        case CuspFamily::theta_triple:
        case CuspFamily::theta_quad:
            if (p.size() != (fam == CuspFamily::theta_pair    ? 2u
                             : fam == CuspFamily::theta_triple ? 3u
                                                                  : 4u))
                throw error("cusp predicate: wrong parameter count");
            return prod_over_gcd_pow() % 2 == 0;
        case CuspFamily::quint_pair:
        case CuspFamily::quint_triple:
        case CuspFamily::quint_quad:
            if (p.size() != (fam == CuspFamily::quint_pair    ? 2u
                             : fam == CuspFamily::quint_triple ? 3u
                                                                  : 4u))
                throw error("cusp predicate: wrong parameter count");
            return gcd_ll(prod_over_gcd_pow() % 6, 6) != 1;
        case CuspFamily::mixed_pair: {
            if (p.size() != 2) throw error("cusp predicate: wrong parameter count");
            long g = gcd_ll(p[0], p[1]);
            long a = p[0] / g, b = p[1] / g;
            return gcd_ll(a, 3) == 1 || a % 2 == 0 || gcd_ll(b, 6) != 1;
        }
    }
    throw error("cusp predicate: unknown family");
}

// --------------------------------------------------------------------------
// The unique weak phi_{0,5} whose q^0 term is r + c + r^{-1} (coefficient of
// r normalized to 1); for index 5 every structure coefficient is an
// Eisenstein series, so a 5x5 exact solve on the q^0 layer determines it.

inline JacobiForm build_phi05_uncached(long prec24) {
    JacobiForm pm = build_phim21(prec24), p0 = build_phi01(prec24);
    JacobiForm e4 = build_E4(prec24), e6 = build_E6(prec24);
    std::vector<long> is = {0, 2, 3, 4, 5};
    std::vector<QSeries> basis;
    for (long i : is) {
        QSeries f;
        switch (i) {
            case 0: f = QSeries::one(prec24); break;
            case 2: f = e4.series; break;
            case 3: f = e6.series; break;
            case 4: f = pow(e4.series, 2); break;
            default: f = e4.series * e6.series; break;
        }
        basis.push_back((f * pow(pm.series, i) * pow(p0.series, 5 - i)).truncated(prec24));
    }
    // Impose: coeff of r^j in the q^0 layer is 0 for j = 2..5 and 1 for j=1.
    std::vector<std::vector<Cyc12>> a;
    std::vector<Cyc12> b;
    for (long j = 5; j >= 1; j--) {
        std::vector<Cyc12> row;
        for (const auto& s : basis) {
            RLaurent lay = s.layer(0);
            auto it = lay.find(2 * j);
            row.push_back(it == lay.end() ? Cyc12(0) : it->second);
        }
        a.push_back(std::move(row));
        b.push_back(Cyc12(j == 1 ? 1 : 0));
    }
    auto sol = solve_linear(std::move(a), std::move(b));
    if (!sol || !sol->unique) throw error("phi_{0,5} solve failed");
    QSeries acc(prec24);
    for (size_t j = 0; j < basis.size(); j++) acc = acc + scale(basis[j], sol->x[j]);
    return {std::move(acc), 0, 10, 0, 0, "phi(0,5)"};
}

inline JacobiForm build_phi05(long prec24) {
    if (prec24 < 48) throw error("phi(0,5): need prec24 >= 48");
    return detail::cached("phi(0,5)", prec24, &build_phi05_uncached);
}

}  // namespace jpl
