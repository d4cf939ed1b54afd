#pragma once

// Constructors for the named Jacobi forms (eta, theta, theta_{3/2}, scaled
// copies, E4, E6, Delta, phi_{-2,1}, phi_{0,1}, phi_{12,1}, phi_{10,1},
// e_{4,1}) and the theta-block expression parser. Metadata (weight, index,
// multiplier exponents) is computed alongside the expansions.

#include "jpl/jacobiform.hpp"

#include <cctype>
#include <map>
#include <mutex>
#include <string>
#include <string_view>

namespace jpl {

// eta = q^{1/24} prod (1-q^n) expanded by the pentagonal-number sum
// sum_k (-1)^k q^{(6k+1)^2/24}.
inline JacobiForm build_eta_uncached(long prec24) {
    QSeries s(prec24);
    for (long k = 0;; k++) {
        long e = (6 * k + 1) * (6 * k + 1);
        long f = (6 * (-k - 1) + 1) * (6 * (-k - 1) + 1);
        bool any = false;
        if (e < prec24) {
            s.add_term(e, 0, Cyc12(k % 2 ? -1 : 1));
            any = true;
        }
        if (f < prec24) {
            s.add_term(f, 0, Cyc12((k + 1) % 2 ? -1 : 1));
            any = true;
        }
        if (!any) break;
    }
    return {std::move(s), 1, 0, 1, 0, "eta"};
}

// theta(tau,z) = sum_m (-4/m) q^{m^2/8} r^{m/2}, weight 1/2, index 1/2,
// multiplier v_eta^3 x v_H.
inline JacobiForm build_theta_uncached(long prec24) {
    QSeries s(prec24);
    for (long m = 1; 3 * m * m < prec24; m += 2) {
        s.add_term(3 * m * m, m, Cyc12(kronecker_minus4(m)));
        s.add_term(3 * m * m, -m, Cyc12(kronecker_minus4(-m)));
    }
    return {std::move(s), 1, 1, 3, 1, "theta"};
}

// Triple-product form -q^{1/8} r^{-1/2} prod (1-q^{n-1}r)(1-q^n r^{-1})(1-q^n).
inline JacobiForm build_theta_product(long prec24) {
    QSeries p = QSeries::one(prec24);
    auto factor = [prec24](long n24, long l2) {
        QSeries f = QSeries::one(prec24);
        f.add_term(n24, l2, Cyc12(-1));
        return f;
    };
    for (long n = 1; 24 * (n - 1) < prec24; n++) {
        p = p * factor(24 * (n - 1), 2);
        if (24 * n < prec24) {
            p = p * factor(24 * n, -2);
            p = p * factor(24 * n, 0);
        }
    }
    p = monomial_shift(scale(p, Cyc12(-1)), 3, -1);
    p = p.truncated(prec24);
    return {std::move(p), 1, 1, 3, 1, "theta(product)"};
}

// theta_{3/2}(tau,z) = sum_n (12/n) q^{n^2/24} r^{n/2}, weight 1/2, index
// 3/2, multiplier v_eta x v_H.
inline JacobiForm build_theta32_uncached(long prec24) {
    QSeries s(prec24);
    for (long n = 1; n * n < prec24; n++) {
        s.add_term(n * n, n, Cyc12(kronecker_12(n)));
        s.add_term(n * n, -n, Cyc12(kronecker_12(-n)));
    }
    return {std::move(s), 1, 3, 1, 1, "theta32"};
}

inline BigInt sigma_power(long n, int k) {
    BigInt s = 0;
    for (long d = 1; d <= n; d++) {
        if (n % d) continue;
        BigInt p;
        mpz_ui_pow_ui(p.get_mpz_t(), d, k);
        s += p;
    }
    return s;
}

inline JacobiForm build_E4_uncached(long prec24) {
    QSeries s(prec24);
    s.add_term(0, 0, Cyc12(1));
    for (long n = 1; 24 * n < prec24; n++)
        s.add_term(24 * n, 0, Cyc12(BigRational(240 * sigma_power(n, 3))));
    return {std::move(s), 8, 0, 0, 0, "E4"};
}

inline JacobiForm build_E6_uncached(long prec24) {
    QSeries s(prec24);
    s.add_term(0, 0, Cyc12(1));
    for (long n = 1; 24 * n < prec24; n++)
        s.add_term(24 * n, 0, Cyc12(BigRational(-504 * sigma_power(n, 5))));
    return {std::move(s), 12, 0, 0, 0, "E6"};
}

namespace detail {

// Builders may call each other, so the lock is never held across a build.
inline JacobiForm cached(const std::string& name, long prec24,
                         JacobiForm (*builder)(long)) {
    static std::map<std::pair<std::string, long>, JacobiForm> cache;
    static std::mutex mu;
    auto key = std::make_pair(name, prec24);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    JacobiForm built = builder(prec24);
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(std::move(key), std::move(built)).first->second;
}

}  // namespace detail

inline JacobiForm build_eta(long prec24) {
    if (prec24 <= 0) throw error("build_eta: prec24 must be positive");
    return detail::cached("eta", prec24, &build_eta_uncached);
}
inline JacobiForm build_theta(long prec24) {
    if (prec24 <= 0) throw error("build_theta: prec24 must be positive");
    return detail::cached("theta", prec24, &build_theta_uncached);
}
inline JacobiForm build_theta32(long prec24) {
    if (prec24 <= 0) throw error("build_theta32: prec24 must be positive");
    return detail::cached("theta32", prec24, &build_theta32_uncached);
}
inline JacobiForm build_E4(long prec24) {
    return detail::cached("E4", prec24, &build_E4_uncached);
}
inline JacobiForm build_E6(long prec24) {
    return detail::cached("E6", prec24, &build_E6_uncached);
}

inline JacobiForm build_theta_scaled(long a, long prec24) {
    if (a <= 0) throw error("theta(a): a must be positive");
    JacobiForm f = jf_zscale(build_theta(prec24), a);
    f.label = "theta(" + std::to_string(a) + ")";
    return f;
}
inline JacobiForm build_theta32_scaled(long a, long prec24) {
    if (a <= 0) throw error("theta32(a): a must be positive");
    JacobiForm f = jf_zscale(build_theta32(prec24), a);
    f.label = "theta32(" + std::to_string(a) + ")";
    return f;
}

inline JacobiForm build_delta_uncached(long prec24) {
    JacobiForm d = jf_pow(build_eta(prec24), 24);
    d.series = d.series.truncated(prec24);
    d.label = "Delta";
    return d;
}
inline JacobiForm build_delta(long prec24) {
    return detail::cached("Delta", prec24, &build_delta_uncached);
}

// phi_{-2,1} = (theta/eta^3)^2, the weight -2 index 1 weak generator.
inline JacobiForm build_phim21_uncached(long prec24) {
    long pad = prec24 + 24;
    JacobiForm eta3 = jf_pow(build_eta(pad), 3);
    JacobiForm q = jf_div(build_theta(pad), eta3);
    JacobiForm f = jf_pow(q, 2);
    f.series = f.series.truncated(prec24);
    f.label = "phi(-2,1)";
    return f;
}
inline JacobiForm build_phim21(long prec24) {
    if (prec24 < 48) throw error("phi(-2,1): need prec24 >= 48");
    return detail::cached("phi(-2,1)", prec24, &build_phim21_uncached);
}

// phi_{0,1} = 4 sum_{i=2,3,4} (theta_i(tau,z)/theta_i(tau,0))^2 built from
// the classical theta constants.
inline JacobiForm build_phi01_uncached(long prec24) {
    long pad = prec24 + 48;
    QSeries th2(pad), th2c(pad), th3(pad), th3c(pad), th4(pad), th4c(pad);
    for (long n = 0; 3 * (2 * n + 1) * (2 * n + 1) < pad; n++) {
        long e = 3 * (2 * n + 1) * (2 * n + 1);
        th2.add_term(e, 2 * n + 1, Cyc12(1));
        th2.add_term(e, -(2 * n + 1), Cyc12(1));
        th2c.add_term(e, 0, Cyc12(2));
    }
    th3.add_term(0, 0, Cyc12(1));
    th3c.add_term(0, 0, Cyc12(1));
    th4.add_term(0, 0, Cyc12(1));
    th4c.add_term(0, 0, Cyc12(1));
    for (long n = 1; 12 * n * n < pad; n++) {
        long e = 12 * n * n;
        int sg = n % 2 ? -1 : 1;
        th3.add_term(e, 2 * n, Cyc12(1));
        th3.add_term(e, -2 * n, Cyc12(1));
        th3c.add_term(e, 0, Cyc12(2));
        th4.add_term(e, 2 * n, Cyc12(sg));
        th4.add_term(e, -2 * n, Cyc12(sg));
        th4c.add_term(e, 0, Cyc12(2 * sg));
    }
    QSeries s = pow(series_div(th2, th2c), 2) + pow(series_div(th3, th3c), 2) +
                pow(series_div(th4, th4c), 2);
    s = scale(s, Cyc12(4)).truncated(prec24);
    return {std::move(s), 0, 2, 0, 0, "phi(0,1)"};
}
inline JacobiForm build_phi01(long prec24) {
    if (prec24 < 48) throw error("phi(0,1): need prec24 >= 48");
    return detail::cached("phi(0,1)", prec24, &build_phi01_uncached);
}

// phi_{12,1} = Delta * phi_{0,1}, the index 1 cusp form of weight 12.
inline JacobiForm build_phi121_uncached(long prec24) {
    JacobiForm f = jf_mul(build_delta(prec24 + 24), build_phi01(prec24));
    f.series = f.series.truncated(prec24);
    f.label = "phi(12,1)";
    return f;
}
inline JacobiForm build_phi121(long prec24) {
    if (prec24 < 48) throw error("phi(12,1): need prec24 >= 48");
    return detail::cached("phi(12,1)", prec24, &build_phi121_uncached);
}

// phi_{10,1} = eta^18 theta^2, the first Jacobi cusp form of index 1.
inline JacobiForm build_phi101_uncached(long prec24) {
    JacobiForm f = jf_mul(jf_pow(build_eta(prec24), 18),
                          jf_pow(build_theta(prec24), 2));
    f.series = f.series.truncated(prec24);
    f.label = "phi(10,1)";
    return f;
}
inline JacobiForm build_phi101(long prec24) {
    return detail::cached("phi(10,1)", prec24, &build_phi101_uncached);
}

// e_{4,1} = (E4 phi_{0,1} - E6 phi_{-2,1}) / 12; the scalars are fixed by
// matching the q^0 terms (a(r+10+1/r) + b(r-2+1/r) = 1).
inline JacobiForm build_e41_uncached(long prec24) {
    JacobiForm a = jf_mul(build_E4(prec24), build_phi01(prec24));
    JacobiForm b = jf_mul(build_E6(prec24), build_phim21(prec24));
    JacobiForm f = jf_scale(jf_add(a, jf_scale(b, Cyc12(-1))),
                            Cyc12(make_rational(1, 12)));
    f.label = "e(4,1)";
    return f;
}
inline JacobiForm build_e41(long prec24) {
    if (prec24 < 48) throw error("e(4,1): need prec24 >= 48");
    return detail::cached("e(4,1)", prec24, &build_e41_uncached);
}

// ---------------------------------------------------------------------------
// Theta-block expression parser.
// expr := term (('*'|'/') term)* ; term := atom ('^' nonneg-int)?
// atom := 'eta' | 'theta' '(' posint ')' | 'theta32' '(' posint ')' | 'E4'
//       | 'E6' | 'Delta' | 'phi' '(' int ',' posint ')' | 'e' '(' 4 ',' 1 ')'
//       | 'bracket' '(' expr ',' expr ')' | '(' expr ')'

struct parse_error : error {
    parse_error(const std::string& msg, size_t pos)
        : error(msg + " at position " + std::to_string(pos)), position(pos) {}
    size_t position;
};

namespace detail {

class BlockParser {
  public:
    BlockParser(std::string_view src, long prec24) : src_(src), prec_(prec24) {}

    JacobiForm parse() {
        JacobiForm f = expr();
        skip_ws();
        if (pos_ != src_.size()) throw parse_error("unexpected trailing input", pos_);
        return f;
    }

  private:
    std::string_view src_;
    long prec_;
    size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
            pos_++;
    }
    bool eat(char c) {
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == c) {
            pos_++;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c))
            throw parse_error(std::string("expected '") + c + "'", pos_);
    }
    long integer(bool allow_neg) {
        skip_ws();
        size_t start = pos_;
        bool neg = false;
        if (allow_neg && pos_ < src_.size() && src_[pos_] == '-') {
            neg = true;
            pos_++;
        }
        long v = 0;
        bool any = false;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
            v = v * 10 + (src_[pos_] - '0');
            pos_++;
            any = true;
        }
        if (!any) throw parse_error("expected integer", start);
        return neg ? -v : v;
    }
    std::string ident() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_]))))
            pos_++;
        if (pos_ == start) throw parse_error("expected name", start);
        return std::string(src_.substr(start, pos_ - start));
    }

    JacobiForm expr() {
        JacobiForm f = term();
        for (;;) {
            skip_ws();
            if (eat('*')) {
                f = jf_mul(f, term());
            } else if (eat('/')) {
                JacobiForm d = term();
                f = jf_div(f, d);
            } else {
                break;
            }
        }
        return f;
    }

    JacobiForm term() {
        JacobiForm f = atom();
        skip_ws();
        if (eat('^')) {
            long e = integer(false);
            f = jf_pow(f, e);
        }
        return f;
    }

    JacobiForm atom() {
        skip_ws();
        if (eat('(')) {
            JacobiForm f = expr();
            expect(')');
            return f;
        }
        size_t start = pos_;
        std::string name = ident();
        if (name == "eta") return build_eta(prec_);
        if (name == "theta" || name == "theta32") {
            expect('(');
            long a = integer(false);
            expect(')');
            if (a <= 0) throw parse_error("theta argument must be positive", start);
            return name == "theta" ? build_theta_scaled(a, prec_)
                                   : build_theta32_scaled(a, prec_);
        }
        if (name == "E4") return build_E4(prec_);
        if (name == "E6") return build_E6(prec_);
        if (name == "Delta") return build_delta(prec_);
        if (name == "phi") {
            expect('(');
            long k = integer(true);
            expect(',');
            long m = integer(false);
            expect(')');
            if (m == 1 && k == -2) return build_phim21(prec_);
            if (m == 1 && k == 0) return build_phi01(prec_);
            if (m == 1 && k == 12) return build_phi121(prec_);
            if (m == 1 && k == 10) return build_phi101(prec_);
            throw parse_error("unknown block phi(" + std::to_string(k) + "," +
                                  std::to_string(m) + ")",
                              start);
        }
        if (name == "e") {
            expect('(');
            long k = integer(false);
            expect(',');
            long m = integer(false);
            expect(')');
            if (k != 4 || m != 1)
                throw parse_error("unknown block e(k,m)", start);
            return build_e41(prec_);
        }
        if (name == "bracket") {
            expect('(');
            JacobiForm a = expr();
            expect(',');
            JacobiForm b = expr();
            expect(')');
            return bracket(a, b);
        }
        throw parse_error("unknown block '" + name + "'", start);
    }
};

}  // namespace detail

inline JacobiForm parse_block(std::string_view src, long prec24) {
    JacobiForm f = detail::BlockParser(src, prec24).parse();
    f.label = std::string(src);
    return f;
}

}  // namespace jpl
