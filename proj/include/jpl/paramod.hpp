#pragma once

// The paramodular group layer: exact 4x4 symplectic matrices in the three
// realizations (integral Sp(W_t, Z), the rational conjugate Gamma_t, and the
// degree-2 extension Gamma_t^+ whose extra coset carries a 1/sqrt(t) factor),
// generators, the commutator-subgroup identities, the abelianization
// Z/t1 x Z/t2, the character lattice chi_{a,b}, the matrix-level chi_{t1},
// and finite-abelian subgroup enumeration.

#include "jpl/cyc12.hpp"
#include "jpl/sl2.hpp"

#include <json.hpp>

#include <array>
#include <set>
#include <string>
#include <vector>

namespace jpl {

// --------------------------------------------------------------------------
// Exact 4x4 matrices

struct Mat4 {
    std::array<std::array<BigRational, 4>, 4> a{};

    static Mat4 identity() {
        Mat4 m;
        for (int i = 0; i < 4; i++) m.a[i][i] = 1;
        return m;
    }
    static Mat4 from_int(std::initializer_list<long> rows) {
        Mat4 m;
        auto it = rows.begin();
        for (int i = 0; i < 4; i++)
            for (int j = 0; j < 4; j++) m.a[i][j] = BigRational(*it++);
        return m;
    }

    BigRational& operator()(int i, int j) { return a[i][j]; }
    const BigRational& operator()(int i, int j) const { return a[i][j]; }

    friend Mat4 operator*(const Mat4& x, const Mat4& y) {
        Mat4 r;
        for (int i = 0; i < 4; i++)
            for (int k = 0; k < 4; k++) {
                if (x.a[i][k] == 0) continue;
                for (int j = 0; j < 4; j++) r.a[i][j] += x.a[i][k] * y.a[k][j];
            }
        return r;
    }
    friend Mat4 operator*(const BigRational& s, const Mat4& x) {
        Mat4 r;
        for (int i = 0; i < 4; i++)
            for (int j = 0; j < 4; j++) r.a[i][j] = s * x.a[i][j];
        return r;
    }
    friend bool operator==(const Mat4& x, const Mat4& y) { return x.a == y.a; }
    friend bool operator!=(const Mat4& x, const Mat4& y) { return !(x == y); }

    Mat4 transpose() const {
        Mat4 r;
        for (int i = 0; i < 4; i++)
            for (int j = 0; j < 4; j++) r.a[i][j] = a[j][i];
        return r;
    }

    bool integral() const {
        for (const auto& row : a)
            for (const auto& v : row)
                if (v.get_den() != 1) return false;
        return true;
    }

    // Gauss-Jordan inverse; throws on singular input.
    Mat4 inverse() const {
        std::array<std::array<BigRational, 8>, 4> w{};
        for (int i = 0; i < 4; i++) {
            for (int j = 0; j < 4; j++) w[i][j] = a[i][j];
            w[i][4 + i] = 1;
        }
        for (int c = 0; c < 4; c++) {
            int p = c;
            while (p < 4 && w[p][c] == 0) p++;
            if (p == 4) throw error("Mat4: singular matrix");
            std::swap(w[p], w[c]);
            BigRational inv = 1 / w[c][c];
            for (int j = 0; j < 8; j++) w[c][j] *= inv;
            for (int r = 0; r < 4; r++) {
                if (r == c || w[r][c] == 0) continue;
                BigRational f = w[r][c];
                for (int j = 0; j < 8; j++) w[r][j] -= f * w[c][j];
            }
        }
        Mat4 res;
        for (int i = 0; i < 4; i++)
            for (int j = 0; j < 4; j++) res.a[i][j] = w[i][4 + j];
        return res;
    }

    Mat4 pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        Mat4 r = identity(), b = *this;
        while (e) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }
};

// Element of Gamma_t^+ = Gamma_t u Gamma_t V_t: value is m / sqrt(t) when
// sqrtT is set, else m. Products track the flag parity exactly.
struct SpMatrix {
    Mat4 m;
    long t = 1;
    bool sqrtT = false;

    friend SpMatrix operator*(const SpMatrix& x, const SpMatrix& y) {
        if (x.t != y.t) throw error("SpMatrix: mixed polarizations");
        SpMatrix r{x.m * y.m, x.t, x.sqrtT != y.sqrtT};
        if (x.sqrtT && y.sqrtT) r.m = make_rational(1, x.t) * r.m;
        return r;
    }
    friend bool operator==(const SpMatrix& x, const SpMatrix& y) {
        return x.t == y.t && x.sqrtT == y.sqrtT && x.m == y.m;
    }
    SpMatrix inverse() const {
        SpMatrix r{m.inverse(), t, sqrtT};
        if (sqrtT) r.m = BigRational(t) * r.m;
        return r;
    }
    SpMatrix pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        SpMatrix r{Mat4::identity(), t, false};
        SpMatrix b = *this;
        while (e) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }
};

// The standard symplectic form J = (0 I; -I 0).
inline const Mat4& form_standard() {
    static const Mat4 j = Mat4::from_int(
        {0, 0, 1, 0, 0, 0, 0, 1, -1, 0, 0, 0, 0, -1, 0, 0});
    return j;
}

// Gram matrix of W_t: (0 K; -K 0) with K = diag(1, t).
inline Mat4 form_wt(long t) {
    Mat4 j;
    j(0, 2) = 1;
    j(1, 3) = t;
    j(2, 0) = -1;
    j(3, 1) = -t;
    return j;
}

inline bool preserves_form(const Mat4& g, const Mat4& form) {
    return g.transpose() * form * g == form;
}

// diag(1,1,1,t) conjugation between the realizations.
inline Mat4 tilde_to_rational(const Mat4& g, long t) {
    Mat4 r = g;
    for (int j = 0; j < 4; j++) r(3, j) *= t;
    for (int i = 0; i < 4; i++) r(i, 3) /= t;
    return r;
}
inline Mat4 rational_to_tilde(const Mat4& g, long t) {
    Mat4 r = g;
    for (int j = 0; j < 4; j++) r(3, j) /= t;
    for (int i = 0; i < 4; i++) r(i, 3) *= t;
    return r;
}

enum class ParamodGroup { tilde, gamma_t, gamma_t_plus };

inline bool is_tilde_member(const Mat4& g, long t) {
    if (!g.integral()) return false;
    if (!preserves_form(g, form_wt(t))) return false;
    // the congruences g12 = g14 = g32 = g34 = 0 mod t follow; re-checked
    for (int i : {0, 2})
        for (int j : {1, 3})
            if (g(i, j).get_num() % t != 0) return false;
    return true;
}

inline bool is_gamma_member(const Mat4& g, long t) {
    if (!preserves_form(g, form_standard())) return false;
    auto divisible = [t](const BigRational& v, long mult) {
        // v must be an integer multiple of mult (mult = 1 or t) or, for
        // mult = -1, an integral multiple of 1/t.
        if (mult == -1) {
            BigRational w = v * t;
            return w.get_den() == 1;
        }
        if (v.get_den() != 1) return false;
        return mult == 1 || v.get_num() % mult == 0;
    };
    static const long pattern[4][4] = {{1, 0, 1, 1},   // 0 marks the t* slots
                                       {1, 1, 1, -1},  // -1 marks t^{-1}*
                                       {1, 0, 1, 1},
                                       {0, 0, 0, 1}};
    for (int i = 0; i < 4; i++)
        for (int j = 0; j < 4; j++) {
            long mult = pattern[i][j] == 0 ? t : pattern[i][j];
            if (!divisible(g(i, j), mult)) return false;
        }
    return true;
}

inline SpMatrix involution_vt(long t);

inline bool membership(const SpMatrix& g, long t, ParamodGroup grp) {
    switch (grp) {
        case ParamodGroup::tilde:
            return !g.sqrtT && is_tilde_member(g.m, t);
        case ParamodGroup::gamma_t:
            return !g.sqrtT && is_gamma_member(g.m, t);
        case ParamodGroup::gamma_t_plus: {
            if (!g.sqrtT) return is_gamma_member(g.m, t);
            SpMatrix h = g * involution_vt(t);  // flag cancels
            return is_gamma_member(h.m, t);
        }
    }
    return false;
}

// --------------------------------------------------------------------------
// Generators (rational realization; V_t in the plus realization)

inline SpMatrix i_infinity(const Sl2Matrix& g, long t) {
    Mat4 m = Mat4::identity();
    m(0, 0) = g.a;
    m(0, 2) = g.b;
    m(2, 0) = g.c;
    m(2, 2) = g.d;
    return {m, t, false};
}

inline SpMatrix j_infinity(const Sl2Matrix& g, long t) {
    Mat4 m = Mat4::identity();
    m(1, 1) = g.a;
    m(1, 3) = make_rational(g.b, t);
    m(3, 1) = BigRational(g.c) * t;
    m(3, 3) = g.d;
    return {m, t, false};
}

// [lambda, mu; kappa] with the (2,4) entry kappa/t: the Heisenberg copy
// inside Gamma_t (integral kappa gives H(Z) via kappa_over_t = t kappa).
inline SpMatrix heisenberg(long lambda, long mu, const BigRational& kappa_over_t,
                           long t) {
    Mat4 m = Mat4::identity();
    m(0, 3) = mu;
    m(1, 0) = lambda;
    m(1, 2) = mu;
    m(1, 3) = kappa_over_t;
    m(2, 3) = -lambda;
    return {m, t, false};
}

inline SpMatrix heisenberg_integral(long lambda, long mu, long kappa, long t) {
    return heisenberg(lambda, mu, BigRational(kappa), t);
}

// center element [0,0; kappa/t]
inline SpMatrix center_element(long kappa, long t) {
    return heisenberg(0, 0, make_rational(kappa, t), t);
}

inline SpMatrix involution_vt(long t) {
    Mat4 m;
    m(0, 1) = t;
    m(1, 0) = 1;
    m(2, 3) = 1;
    m(3, 2) = t;
    return {m, t, true};
}

struct Generators {
    SpMatrix A, B, C, L, M, X, Jt, Vt;
};

inline Generators generators(long t) {
    if (t < 1) throw error("generators: t must be positive");
    Generators g{
        i_infinity(Sl2Matrix::T(), t),
        j_infinity(Sl2Matrix::T(), t),
        {Mat4::from_int({1, 0, 0, 0, 1, 1, 0, 0, 0, 0, 1, -1, 0, 0, 0, 1}), t,
         false},
        {Mat4::from_int({1, 0, -1, 0, 0, 1, 0, 1, 0, 0, 1, 0, 0, 0, 0, 1}), t,
         false},
        i_infinity(Sl2Matrix(1, 0, -1, 1), t),
        {Mat4::from_int({0, 0, 1, 1, -1, 1, 1, 1, -1, 0, 2, 1, 0, 0, 0, 1}), t,
         false},
        {Mat4::identity(), t, false},
        involution_vt(t)};
    Mat4 jt;
    jt(0, 2) = 1;
    jt(1, 3) = make_rational(1, t);
    jt(2, 0) = -1;
    jt(3, 1) = -t;
    g.Jt = {jt, t, false};
    return g;
}

// --------------------------------------------------------------------------
// The commutator-subgroup identity suite

struct SuiteCheck {
    std::string name;
    bool pass;
};

struct SuiteReport {
    std::vector<SuiteCheck> checks;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    void add(std::string name, bool pass) {
        checks.push_back({std::move(name), pass});
    }
};

namespace detail {

// (V 0; 0 tV^{-1}) and (I S; 0 I) as exact block matrices.
inline Mat4 block_gl(const std::array<std::array<BigRational, 2>, 2>& v) {
    // top-left V, bottom-right (V^T)^{-1}
    BigRational det = v[0][0] * v[1][1] - v[0][1] * v[1][0];
    Mat4 m;
    m(0, 0) = v[0][0];
    m(0, 1) = v[0][1];
    m(1, 0) = v[1][0];
    m(1, 1) = v[1][1];
    // (V^T)^{-1} = (1/det) (d -c; -b a)^T adjusted
    m(2, 2) = v[1][1] / det;
    m(2, 3) = -v[1][0] / det;
    m(3, 2) = -v[0][1] / det;
    m(3, 3) = v[0][0] / det;
    return m;
}

inline Mat4 block_translation(const std::array<std::array<BigRational, 2>, 2>& s) {
    Mat4 m = Mat4::identity();
    m(0, 2) = s[0][0];
    m(0, 3) = s[0][1];
    m(1, 2) = s[1][0];
    m(1, 3) = s[1][1];
    return m;
}

using M2 = std::array<std::array<BigRational, 2>, 2>;

inline M2 w_of(const M2& v, const M2& s) {
    // V S V^T - S
    M2 vs{}, vst{}, r{};
    for (int i = 0; i < 2; i++)
        for (int j = 0; j < 2; j++)
            for (int k = 0; k < 2; k++) vs[i][j] += v[i][k] * s[k][j];
    for (int i = 0; i < 2; i++)
        for (int j = 0; j < 2; j++)
            for (int k = 0; k < 2; k++) vst[i][j] += vs[i][k] * v[j][k];
    for (int i = 0; i < 2; i++)
        for (int j = 0; j < 2; j++) r[i][j] = vst[i][j] - s[i][j];
    return r;
}

}  // namespace detail

inline SuiteReport identity_suite(long t) {
    SuiteReport rep;
    Generators g = generators(t);

    // Step 1: the block-product identity and the three displayed W cases.
    {
        using detail::M2;
        auto s_of = [t](long m, long n, long k) {
            return M2{{{BigRational(m), BigRational(n)},
                       {BigRational(n), make_rational(k, t)}}};
        };
        const M2 v1{{{BigRational(1), BigRational(t)},
                     {BigRational(0), BigRational(1)}}};
        const M2 v2{{{BigRational(1), BigRational(0)},
                     {BigRational(0), BigRational(-1)}}};
        const M2 v3{{{BigRational(1), BigRational(0)},
                     {BigRational(1), BigRational(-1)}}};
        bool product_ok = true, w1_ok = true, w2_ok = true, w3_ok = true;
        for (long m = -3; m <= 3; m++)
            for (long n = -3; n <= 3; n++)
                for (long k = -3; k <= 3; k++) {
                    M2 s = s_of(m, n, k);
                    for (const M2& v : {v1, v2, v3}) {
                        Mat4 lhs = detail::block_gl(v) * detail::block_translation(s);
                        M2 vinv{{{v[1][1], -v[0][1] * 1}, {-v[1][0], v[0][0]}}};
                        BigRational det =
                            v[0][0] * v[1][1] - v[0][1] * v[1][0];
                        for (auto& row : vinv)
                            for (auto& x : row) x /= det;
                        M2 negs = s;
                        for (auto& row : negs)
                            for (auto& x : row) x = -x;
                        lhs = lhs * detail::block_gl(vinv) *
                              detail::block_translation(negs);
                        Mat4 rhs = detail::block_translation(detail::w_of(v, s));
                        if (lhs != rhs) product_ok = false;
                    }
                    // displayed W for case (1): (2tn+tk, k; k, 0)
                    M2 w1 = detail::w_of(v1, s);
                    if (!(w1[0][0] == 2 * t * n + t * k && w1[0][1] == k &&
                          w1[1][0] == k && w1[1][1] == 0))
                        w1_ok = false;
                    // case (2): (0, -2n; -2n, 0)
                    M2 w2 = detail::w_of(v2, s);
                    if (!(w2[0][0] == 0 && w2[0][1] == -2 * n &&
                          w2[1][0] == -2 * n && w2[1][1] == 0))
                        w2_ok = false;
                    // case (3): the displayed family (0, m; m, m+2n) equals
                    // W(v3; m+2n, 0, 0) + W(v2; *, n, *)
                    M2 w3a = detail::w_of(v3, s_of(m + 2 * n, 0, 0));
                    M2 w3b = detail::w_of(v2, s_of(0, n, 0));
                    if (!(w3a[0][0] + w3b[0][0] == 0 &&
                          w3a[0][1] + w3b[0][1] == m &&
                          w3a[1][0] + w3b[1][0] == m &&
                          w3a[1][1] + w3b[1][1] == m + 2 * n))
                        w3_ok = false;
                }
        rep.add("step1.block_product", product_ok);
        rep.add("step1.W_case1", w1_ok);
        rep.add("step1.W_case2", w2_ok);
        rep.add("step1.W_case3", w3_ok);
    }

    // Step 2: C = L A X A^{-1} X^{-1} M and the parabolic reduction display.
    {
        SpMatrix c2 = g.L * g.A * g.X * g.A.inverse() * g.X.inverse() * g.M;
        rep.add("step2.C_identity", c2 == g.C);

        bool red_ok = true;
        for (long r = -3; r <= 3; r++)
            for (long k = -3; k <= 3; k++) {
                SpMatrix gg = heisenberg(r, k, BigRational(0), t);
                SpMatrix lhs = gg * g.C.pow(-r) * g.B.pow(-r * k * t) *
                               g.A.pow(k * t);
                Mat4 want = Mat4::identity();
                want(0, 2) = t * k;
                want(0, 3) = k;
                want(1, 2) = k;
                if (lhs.m != want || lhs.sqrtT) red_ok = false;
            }
        rep.add("step2.parabolic_reduction", red_ok);
    }

    // Step 3: B = V_t A V_t^{-1}.
    rep.add("step3.B_conjugate", g.Vt * g.A * g.Vt.inverse() == g.B);

    // Step 4: A^t B^{-t} display.
    {
        Mat4 want = Mat4::identity();
        want(0, 2) = t;
        want(1, 3) = -1;
        rep.add("step4.AtB-t", (g.A.pow(t) * g.B.pow(-t)).m == want);
    }

    // Generator memberships.
    {
        bool mem = true;
        for (const SpMatrix* x : {&g.A, &g.B, &g.C, &g.L, &g.M, &g.X, &g.Jt})
            mem = mem && membership(*x, t, ParamodGroup::gamma_t);
        mem = mem && membership(heisenberg_integral(1, 1, 1, t), t,
                                ParamodGroup::gamma_t);
        mem = mem && membership(center_element(1, t), t, ParamodGroup::gamma_t);
        rep.add("membership.generators", mem);
        rep.add("membership.Vt",
                membership(g.Vt, t, ParamodGroup::gamma_t_plus) &&
                    (t == 1 || !membership(g.Vt, t, ParamodGroup::gamma_t)));
    }
    return rep;
}

// --------------------------------------------------------------------------
// Abelianization and the character lattice

inline std::pair<long, long> abelianization(long t) {
    return {gcd_ll(t, 12), gcd_ll(2 * t, 12)};
}
inline std::pair<long, long> plus_abelianization(long t) {
    return {2, gcd_ll(2 * t, 12)};
}

// chi_{a,b}(A) = e^{2 pi i a/t2}, chi_{a,b}(B) = e^{2 pi i b/t2}; valid iff
// (t2/t1) | (a-b), which is forced by A^{t1} B^{-t1} lying in the commutator.
struct CharacterAB {
    long t, t1, t2, a, b;
};

inline CharacterAB character_ab(long t, long a, long b) {
    auto [t1, t2] = abelianization(t);
    if (a < 1 || a > t2 || b < 1 || b > t2)
        throw error("character_ab: a, b out of range");
    if (mod_ll(a - b, t2 / t1) != 0)
        throw error("character_ab: (t2/t1) does not divide a-b");
    return {t, t1, t2, a, b};
}

inline std::vector<CharacterAB> characters(long t) {
    auto [t1, t2] = abelianization(t);
    std::vector<CharacterAB> out;
    for (long a = 1; a <= t2; a++)
        for (long b = 1; b <= t2; b++)
            if (mod_ll(a - b, t2 / t1) == 0) out.push_back({t, t1, t2, a, b});
    return out;
}

using ABWord = std::vector<std::pair<char, long>>;  // ('A'|'B', exponent)

inline Cyc12 char_eval(const CharacterAB& chi, const ABWord& word) {
    long ea = 0, eb = 0;
    for (const auto& [gen, e] : word) {
        if (gen == 'A')
            ea += e;
        else if (gen == 'B')
            eb += e;
        else
            throw error("char_eval: word letters must be A or B");
    }
    return Cyc12::root_of_unity((12 / chi.t2) * (chi.a * ea + chi.b * eb));
}

inline long character_order(const CharacterAB& chi) {
    return chi.t2 / gcd_ll(gcd_ll(chi.a, chi.b), chi.t2);
}

// chi_Q = chi_{a,a} iff a Q = t2.
inline CharacterAB chi_q_as_ab(long t, long Q) {
    auto [t1, t2] = abelianization(t);
    (void)t1;
    if (Q < 1 || t2 % Q != 0)
        throw error("chi_q_as_ab: Q does not divide t2");
    return character_ab(t, t2 / Q, t2 / Q);
}

// chi_{a,a,+-} of the plus group: fixed by the value on A (= value on B,
// since B = V_t A V_t^{-1}) and the sign on V_t.
struct CharacterABPlus {
    long t, t2, a;
    int sign;
};

inline std::vector<CharacterABPlus> characters_plus(long t) {
    auto [t1, t2] = abelianization(t);
    (void)t1;
    std::vector<CharacterABPlus> out;
    for (long a = 1; a <= t2; a++)
        for (int sign : {1, -1}) out.push_back({t, t2, a, sign});
    return out;
}

// Words over {A, B, V} with integer exponents.
inline Cyc12 char_eval_plus(const CharacterABPlus& chi, const ABWord& word) {
    long eab = 0, ev = 0;
    for (const auto& [gen, e] : word) {
        if (gen == 'A' || gen == 'B')
            eab += e;
        else if (gen == 'V')
            ev += e;
        else
            throw error("char_eval_plus: word letters must be A, B or V");
    }
    Cyc12 v = Cyc12::root_of_unity((12 / chi.t2) * chi.a * eab);
    return mod_ll(ev, 2) && chi.sign < 0 ? -v : v;
}

// --------------------------------------------------------------------------
// chi_{t1} at matrix level (tilde realization)

inline Cyc12 chi_t1_matrix(const SpMatrix& g, long t) {
    if (g.sqrtT || !is_tilde_member(g.m, t))
        throw error("chi_t1_matrix: not a member of the integral group");
    auto [t1, t2] = abelianization(t);
    (void)t2;
    BigInt a = g.m(0, 0).get_num(), b = g.m(0, 2).get_num();
    BigInt c = g.m(2, 0).get_num(), d = g.m(2, 2).get_num();
    BigInt det1 = a * d - b * c - 1, rem;
    BigInt tt(t);
    mpz_fdiv_r(rem.get_mpz_t(), det1.get_mpz_t(), tt.get_mpz_t());
    if (rem != 0) throw error("chi_t1_matrix: corner not in SL2(Z/t)");
    if (t1 == 1) return Cyc12(1);
    Sl2Matrix lifted = sl2_lift_mod(a, b, c, d, tt);
    return eta_char(lifted, mod_ll(24 / t1, 24));
}

// chi'_{t1}(g) = chi_{t1}(V_t g V_t^{-1})
inline Cyc12 chi_t1_prime_matrix(const SpMatrix& g, long t) {
    SpMatrix grat{tilde_to_rational(g.m, t), t, g.sqrtT};
    SpMatrix conj = involution_vt(t) * grat * involution_vt(t).inverse();
    SpMatrix gtil{rational_to_tilde(conj.m, t), t, conj.sqrtT};
    return chi_t1_matrix(gtil, t);
}

// --------------------------------------------------------------------------
// The quotient G_t = Gamma_t / Gamma_t' with generators A, B: pairs (x, y)
// in Z/t2 x Z/t2 modulo (t1, -t1), canonical form x in [0, t1).

struct GtQuotient {
    long t, t1, t2;

    explicit GtQuotient(long t_) : t(t_) {
        auto [u, v] = abelianization(t_);
        t1 = u;
        t2 = v;
    }

    std::pair<long, long> canon(long x, long y) const {
        x = mod_ll(x, t2);
        y = mod_ll(y, t2);
        long j = (x - mod_ll(x, t1)) / t1;
        return {mod_ll(x, t1), mod_ll(y + j * t1, t2)};
    }
    std::pair<long, long> add(std::pair<long, long> p,
                              std::pair<long, long> q) const {
        return canon(p.first + q.first, p.second + q.second);
    }
    std::vector<std::pair<long, long>> elements() const {
        std::vector<std::pair<long, long>> out;
        for (long x = 0; x < t1; x++)
            for (long y = 0; y < t2; y++) out.emplace_back(x, y);
        return out;
    }
    // subgroup generated by a set of elements
    std::set<std::pair<long, long>> closure(
        std::vector<std::pair<long, long>> seed) const {
        std::set<std::pair<long, long>> s{{0, 0}};
        for (auto& e : seed) e = canon(e.first, e.second);
        bool grew = true;
        while (grew) {
            grew = false;
            std::vector<std::pair<long, long>> cur(s.begin(), s.end());
            for (const auto& x : cur)
                for (const auto& gsd : seed) {
                    auto y = add(x, gsd);
                    if (s.insert(y).second) grew = true;
                }
        }
        return s;
    }
    std::set<std::pair<long, long>> kernel(const CharacterAB& chi) const {
        std::set<std::pair<long, long>> s;
        for (const auto& [x, y] : elements())
            if (mod_ll(chi.a * x + chi.b * y, t2) == 0) s.emplace(x, y);
        return s;
    }
    // all subgroups (every subgroup of a rank-2 abelian group is generated
    // by at most two elements)
    std::vector<std::set<std::pair<long, long>>> subgroups() const {
        std::set<std::set<std::pair<long, long>>> seen;
        auto elems = elements();
        for (const auto& g1 : elems)
            for (const auto& g2 : elems) seen.insert(closure({g1, g2}));
        return {seen.begin(), seen.end()};
    }
};

// --------------------------------------------------------------------------
// Plain subgroup lattice of Z/u x Z/v

struct AbelianSubgroup {
    long u, v;
    std::set<std::pair<long, long>> elems;
    long d1 = 1, d2 = 1;  // invariant factors, d1 | d2

    bool contains(const AbelianSubgroup& o) const {
        for (const auto& e : o.elems)
            if (!elems.count(e)) return false;
        return true;
    }
    friend bool operator==(const AbelianSubgroup& a, const AbelianSubgroup& b) {
        return a.u == b.u && a.v == b.v && a.elems == b.elems;
    }
};

namespace detail {

inline long element_order(std::pair<long, long> g, long u, long v) {
    long ox = g.first == 0 ? 1 : u / gcd_ll(g.first, u);
    long oy = g.second == 0 ? 1 : v / gcd_ll(g.second, v);
    return ox / gcd_ll(ox, oy) * oy;  // lcm
}

inline AbelianSubgroup make_subgroup(long u, long v,
                                     std::set<std::pair<long, long>> elems) {
    AbelianSubgroup s{u, v, std::move(elems), 1, 1};
    long expo = 1;
    for (const auto& e : s.elems) {
        long o = element_order(e, u, v);
        expo = expo / gcd_ll(expo, o) * o;
    }
    s.d2 = expo;
    s.d1 = static_cast<long>(s.elems.size()) / expo;
    return s;
}

}  // namespace detail

inline std::vector<AbelianSubgroup> subgroup_lattice(long u, long v) {
    if (u > 12 || v > 12) throw error("subgroup_lattice: u, v <= 12");
    std::set<std::set<std::pair<long, long>>> seen;
    auto add = [&](std::pair<long, long> g1, std::pair<long, long> g2) {
        std::set<std::pair<long, long>> s{{0, 0}};
        bool grew = true;
        while (grew) {
            grew = false;
            std::vector<std::pair<long, long>> cur(s.begin(), s.end());
            for (const auto& x : cur)
                for (const auto& g : {g1, g2}) {
                    auto y = std::make_pair(mod_ll(x.first + g.first, u),
                                            mod_ll(x.second + g.second, v));
                    if (s.insert(y).second) grew = true;
                }
        }
        seen.insert(std::move(s));
    };
    for (long x1 = 0; x1 < u; x1++)
        for (long y1 = 0; y1 < v; y1++)
            for (long x2 = 0; x2 < u; x2++)
                for (long y2 = 0; y2 < v; y2++) add({x1, y1}, {x2, y2});
    std::vector<AbelianSubgroup> out;
    out.reserve(seen.size());
    for (auto& s : seen) out.push_back(detail::make_subgroup(u, v, s));
    return out;
}

// Full character table of Gamma_t with kernels in the abelianization.
struct KernelTableRow {
    CharacterAB chi;
    long order;
    std::set<std::pair<long, long>> kernel;
};

inline std::vector<KernelTableRow> kernel_table(long t) {
    GtQuotient G(t);
    std::vector<KernelTableRow> rows;
    for (const auto& chi : characters(t))
        rows.push_back({chi, character_order(chi), G.kernel(chi)});
    return rows;
}

// --------------------------------------------------------------------------
// JSON rendering

inline nlohmann::ordered_json to_json(const SpMatrix& g, const char* realization) {
    nlohmann::ordered_json j;
    j["realization"] = realization;
    j["sqrt_t"] = g.sqrtT;
    j["m"] = nlohmann::ordered_json::array();
    for (int i = 0; i < 4; i++)
        for (int k = 0; k < 4; k++) j["m"].push_back(rational_str(g.m(i, k)));
    return j;
}

}  // namespace jpl
