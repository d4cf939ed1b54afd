#pragma once

// SL2(Z) machinery: generator-word decomposition, the additive invariant
// w(g) in Z/12 of the eta multiplier system (v_eta^2(g) = e^{2 pi i w/12}),
// scalar character values eta_char(g,d) = v_eta^d(g) for even d, and the
// deterministic lift SL2(Z/N) -> SL2(Z).

#include "jpl/cyc12.hpp"
#include "jpl/rational.hpp"

#include <utility>
#include <vector>

namespace jpl {

struct Sl2Matrix {
    BigInt a, b, c, d;

    Sl2Matrix(BigInt a_, BigInt b_, BigInt c_, BigInt d_)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
        if (a * d - b * c != 1) throw error("Sl2Matrix: determinant != 1");
    }

    static Sl2Matrix identity() { return {1, 0, 0, 1}; }
    static Sl2Matrix T() { return {1, 1, 0, 1}; }
    static Sl2Matrix S() { return {0, -1, 1, 0}; }

    Sl2Matrix inverse() const { return {d, -b, -c, a}; }

    friend Sl2Matrix operator*(const Sl2Matrix& x, const Sl2Matrix& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }
    friend bool operator==(const Sl2Matrix& x, const Sl2Matrix& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
    }
    friend bool operator!=(const Sl2Matrix& x, const Sl2Matrix& y) { return !(x == y); }
};

// A word over {T, S} with integer exponents; ('T', k) stands for T^k.
using Sl2Word = std::vector<std::pair<char, long long>>;

inline Sl2Matrix evaluate_word(const Sl2Word& w) {
    Sl2Matrix g = Sl2Matrix::identity();
    for (const auto& [gen, e] : w) {
        Sl2Matrix base = (gen == 'T') ? Sl2Matrix::T() : Sl2Matrix::S();
        if (e < 0) base = base.inverse();
        long long n = e < 0 ? -e : e;
        for (long long i = 0; i < n; i++) g = g * base;
    }
    return g;
}

// Euclidean factorization of g into T and S powers; the returned word
// multiplies back to g exactly.
inline Sl2Word sl2_decompose(const Sl2Matrix& g) {
    Sl2Word word;
    Sl2Matrix r = g;
    // Invariant: g = evaluate(word) * r.
    while (r.c != 0) {
        BigInt q = floor_div(r.a, r.c);
        // T^{-q} * r has top-left a - q c in [0, |c|).
        // Record g = word * T^q * S * (S^{-1} T^{-q} r).
        if (q != 0) word.emplace_back('T', q.get_si());
        word.emplace_back('S', 1);
        // r <- S^{-1} T^{-q} r
        BigInt na = r.a - q * r.c, nb = r.b - q * r.d;
        r = Sl2Matrix(r.c, r.d, -na, -nb);
    }
    // Now r = (a b; 0 a^{-1}) with a = +-1.
    if (r.a == 1) {
        if (r.b != 0) word.emplace_back('T', r.b.get_si());
    } else {
        // r = -T^{-b}; S^2 = -I.
        word.emplace_back('S', 2);
        if (r.b != 0) word.emplace_back('T', BigInt(-r.b).get_si());
    }
    return word;
}

// w(T) = 1, w(S) = 9; additive on products mod 12. This is the image of g
// in the abelianization SL2(Z) -> Z/12, normalized so that
// v_eta^2(g) = e^{2 pi i w(g)/12}.
inline int eta_weight(const Sl2Matrix& g) {
    long long w = 0;
    for (const auto& [gen, e] : sl2_decompose(g)) w += (gen == 'T' ? 1 : 9) * e;
    return static_cast<int>(mod_ll(w, 12));
}

// v_eta^d(g) = e^{2 pi i d w(g)/24} for even d in [0, 24). Odd powers of
// v_eta are half-integral-weight multipliers, not scalar characters.
inline Cyc12 eta_char(const Sl2Matrix& g, long long d) {
    if (mod_ll(d, 2) != 0)
        throw error("half-integral multiplier not supported as scalar character");
    d = mod_ll(d, 24);
    return Cyc12::root_of_unity((d / 2) * eta_weight(g));
}

// (-1)^{lambda+mu+lambda mu+kappa}, the binary character of the integral
// Heisenberg group.
inline int v_H(long lambda, long mu, long kappa) {
    return mod_ll(lambda + mu + lambda * mu + kappa, 2) == 0 ? 1 : -1;
}

// Extended gcd: returns g = gcd(a,b) and x,y with a x + b y = g.
inline BigInt ext_gcd(const BigInt& a, const BigInt& b, BigInt& x, BigInt& y) {
    BigInt g;
    mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(),
               b.get_mpz_t());
    return g;
}

// Deterministic lift of (a b; c d) in SL2(Z/N) to SL2(Z).
inline Sl2Matrix sl2_lift_mod(const BigInt& a, const BigInt& b, const BigInt& c,
                              const BigInt& d, const BigInt& N) {
    if (N <= 0) throw error("sl2_lift_mod: modulus must be positive");
    BigInt det1 = a * d - b * c - 1;
    BigInt rem;
    mpz_fdiv_r(rem.get_mpz_t(), det1.get_mpz_t(), N.get_mpz_t());
    if (rem != 0) throw error("sl2_lift_mod: determinant != 1 mod N");
    if (N == 1) return Sl2Matrix::identity();

    BigInt c0 = c % N, d0 = d % N;
    if (c0 < 0) c0 += N;
    if (d0 < 0) d0 += N;
    BigInt cc, dd;
    if (c0 == 0 && d0 == 0) throw error("sl2_lift_mod: bottom row is zero mod N");
    if (c0 == 0 && d0 == 1) {
        cc = 0;  // upper-triangular lift; keeps identity -> identity
        dd = 1;
    } else if (c0 == 0) {
        cc = N;  // gcd(N, d0) = 1 since a d = 1 mod N
        dd = d0;
    } else {
        cc = c0;
        dd = d0;
        while (gcd(cc, dd) != 1) dd += N;  // terminates: gcd(c0, d0, N) = 1
    }
    // Row completion: x dd - y cc = 1.
    BigInt x, y;
    ext_gcd(dd, cc, x, y);  // dd x + cc y = 1
    y = -y;                 // x dd - y cc = 1
    // Fix the top row mod N by left multiplication with T^k.
    BigInt u, v;
    ext_gcd(cc, dd, u, v);  // u cc + v dd = 1
    BigInt a0 = a % N, b0 = b % N;
    if (a0 < 0) a0 += N;
    if (b0 < 0) b0 += N;
    BigInt k = (u * (a0 - x) + v * (b0 - y)) % N;
    if (k < 0) k += N;
    return {x + k * cc, y + k * dd, cc, dd};
}

// sigma_a = some SL2(Z) matrix congruent to diag(a^{-1}, a) mod Q; the
// v_eta twist in the Hecke operators is evaluated on it.
inline Sl2Matrix hecke_sigma(long a, long Q) {
    if (Q == 1) return Sl2Matrix::identity();
    BigInt aQ(static_cast<long>(mod_ll(a, Q)));
    BigInt NQ(Q);
    if (gcd(aQ, NQ) != 1) throw error("hecke_sigma: gcd(a,Q) != 1");
    BigInt x, y;
    ext_gcd(aQ, NQ, x, y);  // x a = 1 mod Q
    BigInt ainv = x % NQ;
    if (ainv < 0) ainv += NQ;
    return sl2_lift_mod(ainv, 0, 0, aQ, NQ);
}

}  // namespace jpl
