#pragma once

// Exact scalar arithmetic: arbitrary-precision integers/rationals (GMP),
// Kronecker symbols (-4/m), (12/n), and Dedekind sums.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace jpl {

using BigInt = mpz_class;
using BigRational = mpq_class;

struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

inline BigRational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw error("rational with zero denominator");
    BigRational r(num);
    r /= BigRational(den);
    return r;  // mpq division canonicalizes
}

inline long long mod_ll(long long a, long long m) {
    long long r = a % m;
    return r < 0 ? r + m : r;
}

// (-4/m): +1 for m = 1 mod 4, -1 for m = 3 mod 4, 0 for even m.
inline int kronecker_minus4(long long m) {
    if (m % 2 == 0) return 0;
    return mod_ll(m, 4) == 1 ? 1 : -1;
}

// (12/n): +1 for n = +-1 mod 12, -1 for n = +-5 mod 12, 0 if gcd(n,12) != 1.
inline int kronecker_12(long long n) {
    long long r = mod_ll(n, 12);
    if (r == 1 || r == 11) return 1;
    if (r == 5 || r == 7) return -1;
    return 0;
}

inline BigInt gcd(const BigInt& a, const BigInt& b) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline long long gcd_ll(long long a, long long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        long long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Floor division for mpz (GMP mpz_fdiv_q).
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// Sawtooth ((x)) = x - floor(x) - 1/2 for x not integral, 0 otherwise.
inline BigRational sawtooth(const BigRational& x) {
    if (x.get_den() == 1) return BigRational(0);
    BigInt fl = floor_div(x.get_num(), x.get_den());
    return x - BigRational(fl) - make_rational(1, 2);
}

inline std::string rational_str(const BigRational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Dedekind sum s(d,c) = sum_{k=1}^{c-1} ((k/c)) ((kd/c)); requires gcd(d,c)=1.
inline BigRational dedekind_sum(const BigInt& d, const BigInt& c) {
    if (c <= 0) throw error("dedekind_sum: c must be positive");
    if (gcd(d, c) != 1) throw error("dedekind_sum: gcd(d,c) != 1");
    BigRational s(0);
    for (BigInt k = 1; k < c; ++k) {
        s += sawtooth(make_rational(k, c)) * sawtooth(make_rational(k * d, c));
    }
    return s;
}

}  // namespace jpl
