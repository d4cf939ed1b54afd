#pragma once

// The cyclotomic ring Q(zeta_12), zeta a primitive 12th root of unity.
// Elements are stored on the power basis 1, z, z^2, z^3 with the reduction
// z^4 = z^2 - 1 (minimal polynomial x^4 - x^2 + 1). All multiplier-system
// and character values in this library live here: e^{2 pi i k/Q} for Q | 12.

#include "jpl/rational.hpp"

#include <array>
#include <ostream>

namespace jpl {

class Cyc12 {
  public:
    Cyc12() : c_{} {}
    Cyc12(const BigRational& r) : c_{} { c_[0] = r; }             // NOLINT: implicit
    Cyc12(long n) : c_{} { c_[0] = BigRational(n); }              // NOLINT
    Cyc12(int n) : c_{} { c_[0] = BigRational(static_cast<long>(n)); }  // NOLINT
    Cyc12(const BigRational& c0, const BigRational& c1, const BigRational& c2,
          const BigRational& c3)
        : c_{c0, c1, c2, c3} {}

    static Cyc12 zeta() { return Cyc12(0, 1, 0, 0); }

    // zeta^k for any integer k (zeta^12 = 1, zeta^6 = -1).
    static Cyc12 root_of_unity(long long k) {
        k = mod_ll(k, 12);
        bool neg = k >= 6;
        if (neg) k -= 6;
        Cyc12 r;
        switch (k) {
            case 0: r = Cyc12(1); break;
            case 1: r = zeta(); break;
            case 2: r = Cyc12(0, 0, 1, 0); break;
            case 3: r = Cyc12(0, 0, 0, 1); break;
            case 4: r = Cyc12(-1, 0, 1, 0); break;   // z^4 = z^2 - 1
            default: r = Cyc12(0, -1, 0, 1); break;  // z^5 = z^3 - z
        }
        if (neg)
            for (auto& x : r.c_) x = -x;
        return r;
    }

    const BigRational& operator[](int i) const { return c_[i]; }

    bool is_zero() const {
        return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0;
    }
    bool is_rational() const { return c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }
    const BigRational& rational_value() const {
        if (!is_rational()) throw error("Cyc12 value is not rational");
        return c_[0];
    }

    friend bool operator==(const Cyc12& a, const Cyc12& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Cyc12& a, const Cyc12& b) { return !(a == b); }

    Cyc12 operator-() const {
        Cyc12 r;
        for (int i = 0; i < 4; i++) r.c_[i] = -c_[i];
        return r;
    }
    friend Cyc12 operator+(const Cyc12& a, const Cyc12& b) {
        Cyc12 r;
        for (int i = 0; i < 4; i++) r.c_[i] = a.c_[i] + b.c_[i];
        return r;
    }
    friend Cyc12 operator-(const Cyc12& a, const Cyc12& b) { return a + (-b); }
    friend Cyc12 operator*(const Cyc12& a, const Cyc12& b) {
        // Convolve to degree 6, then fold z^4 = z^2-1, z^5 = z^3-z, z^6 = -1.
        std::array<BigRational, 7> p{};
        for (int i = 0; i < 4; i++) {
            if (a.c_[i] == 0) continue;
            for (int j = 0; j < 4; j++) p[i + j] += a.c_[i] * b.c_[j];
        }
        Cyc12 r(p[0], p[1], p[2], p[3]);
        r.c_[2] += p[4];
        r.c_[0] -= p[4];
        r.c_[3] += p[5];
        r.c_[1] -= p[5];
        r.c_[0] -= p[6];
        return r;
    }
    Cyc12& operator+=(const Cyc12& o) { return *this = *this + o; }
    Cyc12& operator-=(const Cyc12& o) { return *this = *this - o; }
    Cyc12& operator*=(const Cyc12& o) { return *this = *this * o; }

    friend Cyc12 operator*(const BigRational& s, const Cyc12& a) {
        Cyc12 r;
        for (int i = 0; i < 4; i++) r.c_[i] = s * a.c_[i];
        return r;
    }

    // Galois conjugates of Q(zeta_12)/Q: zeta -> zeta^k, k in {5,7,11}.
    Cyc12 conjugate(int k) const {
        Cyc12 z = root_of_unity(k);
        Cyc12 r(c_[0]);
        Cyc12 zp(1);
        for (int i = 1; i < 4; i++) {
            zp *= z;
            r += c_[i] * zp;
        }
        return r;
    }

    friend Cyc12 operator*(const Cyc12& a, const BigRational& s) { return s * a; }

    Cyc12 inverse() const {
        if (is_zero()) throw error("Cyc12 division by zero");
        Cyc12 m = conjugate(5) * conjugate(7) * conjugate(11);
        Cyc12 n = *this * m;  // field norm, a rational
        const BigRational& nr = n.rational_value();
        BigRational inv = 1 / nr;
        return inv * m;
    }
    friend Cyc12 operator/(const Cyc12& a, const Cyc12& b) { return a * b.inverse(); }

    Cyc12 pow(long long e) const {
        if (e < 0) return inverse().pow(-e);
        Cyc12 r(1), base = *this;
        while (e) {
            if (e & 1) r *= base;
            base *= base;
            e >>= 1;
        }
        return r;
    }

    friend std::ostream& operator<<(std::ostream& os, const Cyc12& a);

  private:
    std::array<BigRational, 4> c_;
};

inline std::ostream& operator<<(std::ostream& os, const Cyc12& a) {
    if (a.is_rational()) return os << a[0];
    os << "(" << a[0];
    const char* pw[] = {"", "*w", "*w^2", "*w^3"};
    for (int i = 1; i < 4; i++) {
        if (a[i] == 0) continue;
        os << (a[i] > 0 ? "+" : "") << a[i] << pw[i];
    }
    return os << ")";
}

}  // namespace jpl
