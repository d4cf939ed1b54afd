#pragma once

// Test-only oracles, kept independent of the library's computation paths.
//
// The Hecke oracle evaluates phi((a tau + b Q)/d, a z) literally, term by
// term, summing over b mod d. The roots of unity e^{2 pi i n b Q / d} that
// appear live in Q(zeta_{24 d}); everything is embedded into the single
// cyclotomic field Q(zeta_1440) = Q[x]/Phi_1440(x) (1440 = lcm of 24 d for
// d <= 6 and 12), represented exactly with rational coefficients. Every
// contribution is a rational multiple of a power of x, so the oracle only
// ever adds scaled x-powers; no ring multiplication is involved.

#include "jpl/jacobi.hpp"

#include <map>
#include <utility>
#include <vector>

namespace oracle {

using jpl::BigInt;
using jpl::BigRational;
using jpl::Cyc12;
using jpl::JacobiForm;

using Poly = std::vector<BigInt>;  // integer polynomial, ascending degree

inline Poly poly_trim(Poly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

// Exact division of integer polynomials (remainder must vanish).
inline Poly poly_divexact(Poly num, const Poly& den) {
    Poly q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, BigInt(0));
    while (num.size() >= den.size() && !num.empty()) {
        BigInt c = num.back() / den.back();
        size_t shift = num.size() - den.size();
        q[shift] = c;
        for (size_t i = 0; i < den.size(); i++) num[shift + i] -= c * den[i];
        num = poly_trim(std::move(num));
    }
    if (!num.empty()) throw jpl::error("poly_divexact: nonzero remainder");
    return q;
}

inline const Poly& cyclotomic(long n) {
    static std::map<long, Poly> memo;
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    Poly p(n + 1, BigInt(0));  // x^n - 1
    p[0] = -1;
    p[n] = 1;
    for (long d = 1; d < n; d++) {
        if (n % d) continue;
        p = poly_divexact(std::move(p), cyclotomic(d));
    }
    return memo.emplace(n, poly_trim(std::move(p))).first->second;
}

// Elements of Q[x]/Phi_N(x), N = 1440.
class CycBig {
  public:
    static constexpr long N = 1440;

    static size_t dim() { return cyclotomic(N).size() - 1; }

    CycBig() : c_(dim(), BigRational(0)) {}

    // x^e reduced mod Phi_N; x has multiplicative order N in the quotient.
    static const CycBig& x_power(long e) {
        static const std::vector<CycBig> table = [] {
            const Poly& phi = cyclotomic(N);
            size_t d = phi.size() - 1;
            std::vector<CycBig> t(N);
            t[0].c_[0] = 1;
            for (long i = 1; i < N; i++) {
                CycBig& cur = t[i];
                const CycBig& prev = t[i - 1];
                for (size_t j = d - 1; j > 0; j--) cur.c_[j] = prev.c_[j - 1];
                cur.c_[0] = 0;
                BigRational lead = prev.c_[d - 1];
                if (lead != 0)
                    for (size_t j = 0; j < d; j++)
                        cur.c_[j] -= lead * BigRational(phi[j]);
            }
            return t;
        }();
        return table[jpl::mod_ll(e, N)];
    }

    // e^{2 pi i num/den} for den | N.
    static const CycBig& root(long num, long den) {
        if (N % den) throw jpl::error("oracle root: denominator does not divide N");
        return x_power(jpl::mod_ll(num, den) * (N / den));
    }

    void add_scaled_power(long e, const BigRational& s) {
        if (s == 0) return;
        const CycBig& p = x_power(e);
        for (size_t j = 0; j < c_.size(); j++) c_[j] += s * p.c_[j];
    }

    // v in Q(zeta_12), zeta_12 = x^{N/12}: adds s * v * x^e.
    void add_scaled_cyc12_power(const Cyc12& v, long e, const BigRational& s) {
        for (int j = 0; j < 4; j++) {
            if (v[j] == 0) continue;
            add_scaled_power(e + j * (N / 12), s * v[j]);
        }
    }

    static CycBig embed(const Cyc12& v) {
        CycBig r;
        r.add_scaled_cyc12_power(v, 0, BigRational(1));
        return r;
    }

    bool is_zero() const {
        for (const auto& v : c_)
            if (v != 0) return false;
        return true;
    }

    friend bool operator==(const CycBig& a, const CycBig& b) { return a.c_ == b.c_; }

  private:
    std::vector<BigRational> c_;
};

// Literal-substitution Hecke action
//   m^{2k-3} sum_{ad=m} d^{-k} v_eta^{24/Q}(sigma_a) sum_{b mod d}
//   phi((a tau + b Q)/d, a z),
// with coefficients keyed by (n in 1/(24 m) lattice units, l2). Entries off
// the 1/24 lattice must have cancelled to zero; the caller asserts that.
inline std::map<std::pair<long, long>, CycBig> hecke_substitution(
    const JacobiForm& phi, long m, long Q) {
    if (phi.weight2 % 2) throw jpl::error("oracle: non-integral weight");
    long k = phi.weight2 / 2;
    std::map<std::pair<long, long>, CycBig> acc;
    for (long a = 1; a <= m; a++) {
        if (m % a) continue;
        long d = m / a;
        Cyc12 v = jpl::eta_char(jpl::hecke_sigma(a, Q), jpl::mod_ll(24 / Q, 24));
        BigRational s = jpl::rational_pow(m, 2 * k - 3) * jpl::rational_pow(d, -k);
        for (long b = 0; b < d; b++) {
            for (const auto& [n24, lay] : phi.series.t) {
                // e^{2 pi i n b Q / d}, n = n24/24, as x-power num/(24d)
                long num = jpl::mod_ll(n24 * b * Q, 24 * d);
                long e = num * (CycBig::N / (24 * d));
                for (const auto& [l2, c] : lay) {
                    // q-exponent n a / d = n24 a^2 in 1/(24 m) units
                    acc[{n24 * a * a, l2 * a}].add_scaled_cyc12_power(
                        c * Cyc12(s), e, BigRational(1));
                }
            }
        }
    }
    return acc;
}

struct OracleComparison {
    long keys_checked = 0;
    long mismatches = 0;
    bool full_match = true;
    // every mismatching key traces to a contribution whose b-sum does not
    // telescope (possible only when the seed character does not match Q)
    bool mismatches_all_nontelescoping = true;
};

// Compares hecke_minus against the substitution oracle on the full window
// where the implementation claims coefficients.
inline OracleComparison compare_hecke_oracle(const JacobiForm& phi, long m,
                                             long Q) {
    JacobiForm impl = jpl::hecke_minus(phi, m, Q);
    auto sub = hecke_substitution(phi, m, Q);
    long prec_res = impl.series.prec24;

    auto tainted = [&](long n24m, long l2) {
        for (long a = 1; a <= m; a++) {
            if (m % a) continue;
            long d = m / a;
            if (d < 2) continue;
            if (n24m % (a * a) || l2 % a) continue;
            long n24 = n24m / (a * a);
            auto it = phi.series.t.find(n24);
            if (it == phi.series.t.end() || !it->second.count(l2 / a)) continue;
            if ((n24 * Q) % 24 != 0) return true;
        }
        return false;
    };

    OracleComparison r;
    for (const auto& [key, val] : sub) {
        auto [n24m, l2] = key;
        if (n24m >= m * prec_res) continue;
        r.keys_checked++;
        bool ok;
        if (n24m % m)
            ok = val.is_zero();
        else
            ok = val == CycBig::embed(impl.series.coeff(n24m / m, l2));
        if (!ok) {
            r.mismatches++;
            r.full_match = false;
            if (!tainted(n24m, l2)) r.mismatches_all_nontelescoping = false;
        }
    }
    // every implementation coefficient must appear in the oracle
    for (const auto& [n24, lay] : impl.series.t)
        for (const auto& [l2, c] : lay) {
            auto it = sub.find({n24 * m, l2});
            if (it == sub.end()) {
                r.full_match = false;
                r.mismatches++;
                if (!tainted(n24 * m, l2)) r.mismatches_all_nontelescoping = false;
            }
        }
    return r;
}

inline bool hecke_matches_oracle(const JacobiForm& phi, long m, long Q) {
    return compare_hecke_oracle(phi, m, Q).full_match;
}

}  // namespace oracle
