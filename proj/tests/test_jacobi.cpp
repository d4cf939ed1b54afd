#include "jpl/jacobi.hpp"

#include "oracles.hpp"

#include <catch_amalgamated.hpp>

using namespace jpl;

namespace {

RLaurent make_layer(std::initializer_list<std::pair<long, long>> cs) {
    RLaurent r;
    for (auto [l, c] : cs) rl_add_term(r, l, Cyc12(c));
    return r;
}

}  // namespace

TEST_CASE("jf_mul metadata additivity") {
    long prec = 96;
    JacobiForm et = parse_block("eta*theta(1)", prec);
    JacobiForm sq = jf_mul(et, et);
    CHECK(sq.weight2 == 4);
    CHECK(sq.index2 == 2);
    CHECK(sq.etaExp == 8);
    CHECK(sq.hExp == 0);

    JacobiForm cube = jf_pow(parse_block("eta^3*theta(1)^3", prec), 2);
    CHECK(cube.weight2 == 12);  // weight 6
    CHECK(cube.index2 == 6);    // index 3

    JacobiForm unit = JacobiForm::unit(prec);
    JacobiForm same = jf_mul(et, unit);
    CHECK(equal_to_common_prec(same.series, et.series));
    CHECK(same.weight2 == et.weight2);
}

TEST_CASE("bracket basics") {
    long prec = 96;
    JacobiForm th = build_theta(prec);
    CHECK(bracket(th, th).series.is_zero());

    // 2 eta^{-4} [theta, theta_{3/2}] has q^0 layer r + 4 + r^{-1}; the
    // bracket normalization is pinned by the explicit double-sum expansion.
    JacobiForm br = bracket(th, build_theta32(prec));
    CHECK(br.weight2 == 4);
    CHECK(br.index2 == 4);
    CHECK(br.etaExp == 4);
    CHECK(br.hExp == 0);
    QSeries etam4 = pow(build_eta(prec).series, -4);
    QSeries disp = scale(etam4 * br.series, Cyc12(2));
    CHECK(disp.layer(0) == make_layer({{2, 1}, {0, 4}, {-2, 1}}));
}

TEST_CASE("bracket matches the double-sum expansion") {
    long prec = 96;
    for (auto [a, b] : {std::pair<long, long>{1, 2}, {1, 3}, {2, 3}}) {
        JacobiForm lhs = jf_scale(
            bracket(build_theta_scaled(a, prec), build_theta_scaled(b, prec)),
            Cyc12(make_rational(4, a * b)));
        QSeries rhs(prec);
        for (long m = -20; m <= 20; m++)
            for (long n = -20; n <= 20; n++) {
                long n24 = 3 * (m * m + n * n);
                if (n24 >= prec) continue;
                long coeff = (b * m - a * n) * kronecker_minus4(m) * kronecker_minus4(n);
                rhs.add_term(n24, a * m + b * n, Cyc12(coeff));
            }
        CHECK(equal_at(lhs.series, rhs, prec));
    }
}

TEST_CASE("hecke T_-(1) is the identity") {
    long prec = 168;
    for (const char* src : {"e(4,1)", "eta*theta(1)"}) {
        JacobiForm f = parse_block(src, prec);
        JacobiForm t = hecke_minus(f, 1, 1);
        CHECK(equal_at(t.series, f.series, prec));
        CHECK(t.index2 == f.index2);
    }
}

TEST_CASE("hecke examples") {
    long prec = 168;
    JacobiForm e41 = build_e41(prec);
    JacobiForm t2 = hecke_minus(e41, 2, 1);
    CHECK(t2.series.coeff(0, 0) == Cyc12(36));
    CHECK(hecke_minus(e41, 3, 1).index2 == 6);  // index 3

    CHECK_THROWS_AS(hecke_minus(parse_block("eta", prec), 2, 1), error);
    CHECK_THROWS_AS(hecke_minus(e41, 2, 2), error);  // gcd(m,Q) != 1
}

TEST_CASE("hecke agrees with the substitution oracle") {
    long prec = 96;
    JacobiForm e41 = build_e41(prec);
    JacobiForm etheta = parse_block("eta*theta(1)", prec);
    // matched seed character (integral exponents): exact agreement
    for (long m : {2, 3, 4}) CHECK(oracle::hecke_matches_oracle(e41, m, 1));
    CHECK(oracle::hecke_matches_oracle(e41, 3, 2));
    // eta*theta carries v_eta^4, matched by Q = 6 and 12
    CHECK(oracle::hecke_matches_oracle(etheta, 5, 6));
    CHECK(oracle::hecke_matches_oracle(etheta, 5, 12));
    // mismatched Q: agreement on all telescoping contributions; every
    // discrepancy traces to a non-telescoping b-sum
    for (long m : {2, 3}) {
        auto r = oracle::compare_hecke_oracle(etheta, m, 1);
        CHECK(r.mismatches_all_nontelescoping);
        CHECK(r.keys_checked > r.mismatches);
    }
}

TEST_CASE("classification") {
    long prec = 96;
    auto th = classify(build_theta(prec));
    CHECK(th.cls == FormClass::holomorphic);
    for (const auto& e : th.profile) CHECK(e.normScaled == 0);

    auto et = classify(parse_block("eta*theta(1)", prec));
    CHECK(et.cls == FormClass::cusp);
    CHECK(et.prec24 >= prec);

    auto pm = classify(build_phim21(prec));
    CHECK(pm.cls == FormClass::weak);
    bool has_negative = false;
    for (const auto& e : pm.profile)
        if (e.n24 == 0 && e.l2 == 2) {
            CHECK(e.normScaled == -24);
            has_negative = true;
        }
    CHECK(has_negative);
}

TEST_CASE("q-order and the vanishing bound") {
    long prec = 168;
    CHECK(q_order(build_delta(prec)) == 1);
    CHECK(qorder_bound(3, 3) == 1);
    CHECK(qorder_bound(3, 5) == make_rational(11, 9));

    // equality case Delta phi_{-2,1}^3 = eta^6 theta^6
    JacobiForm f = jf_mul(build_delta(prec), jf_pow(build_phim21(prec), 3));
    JacobiForm g = parse_block("eta^6*theta(1)^6", prec);
    CHECK(equal_to_common_prec(f.series, g.series));
    CHECK(q_order(f) == qorder_bound(3, 3));

    CHECK_THROWS_AS(q_order(JacobiForm(QSeries(24), 0, 0, 0, 0)), error);
}

TEST_CASE("dim_cusp values") {
    CHECK(dim_cusp(6, 5) == 1);
    CHECK(dim_cusp(3, 8) == 0);
    CHECK(dim_cusp(3, 16) == 0);
    CHECK(dim_cusp(12, 1) == 1);
    CHECK(dim_cusp(6, 3) == 1);
    CHECK(dim_cusp(6, 6) == 1);
    CHECK(dim_cusp(8, 3) == 1);
    CHECK(dim_cusp(3, 13) == 1);
    CHECK(dim_cusp(6, 2) == 0);
    CHECK(dim_cusp(4, 1) == 0);
    CHECK(dim_cusp(7, 3) == 0);
    for (long m = 1; m <= 12; m++) CHECK(dim_cusp(3, m) == 0);
}

TEST_CASE("cusp conditions for scaled theta products") {
    CHECK(cusp_product_predicate(CuspFamily::theta_pair, {1, 2}));
    CHECK_FALSE(cusp_product_predicate(CuspFamily::theta_pair, {1, 1}));
    CHECK(cusp_product_predicate(CuspFamily::theta_triple, {1, 1, 2}));
    CHECK_FALSE(cusp_product_predicate(CuspFamily::quint_pair, {1, 1}));
    CHECK(cusp_product_predicate(CuspFamily::quint_pair, {1, 2}));
    CHECK(cusp_product_predicate(CuspFamily::quint_pair, {1, 3}));
    CHECK(cusp_product_predicate(CuspFamily::mixed_pair, {1, 1}));
    CHECK(cusp_product_predicate(CuspFamily::theta_quad, {1, 1, 2, 2}));
    CHECK_THROWS_AS(cusp_product_predicate(CuspFamily::theta_pair, {0, 1}), error);

    // predicate true -> computed product is cusp to precision (sampled)
    long prec = 96;
    for (long a = 1; a <= 3; a++)
        for (long b = a; b <= 4; b++) {
            bool cusp = cusp_product_predicate(CuspFamily::theta_pair, {a, b});
            JacobiForm f = jf_mul(build_theta_scaled(a, prec),
                                  build_theta_scaled(b, prec));
            if (cusp) CHECK(classify(f).cls == FormClass::cusp);
        }
    // and the (1,1) counterexample really is holomorphic non-cusp
    JacobiForm sq = jf_pow(build_theta(prec), 2);
    CHECK(classify(sq).cls == FormClass::holomorphic);
}

TEST_CASE("decompose_weak on phi_{0,1}") {
    JacobiForm p0 = build_phi01(24 * 9);
    WeakDecomposition d = decompose_weak(p0);
    REQUIRE(d.f.size() == 1);
    REQUIRE(d.f.count(0) == 1);
    REQUIRE(d.f.at(0).size() == 1);
    CHECK(d.f.at(0)[0].alpha == 0);
    CHECK(d.f.at(0)[0].beta == 0);
    CHECK(d.f.at(0)[0].coeff == Cyc12(1));
}

TEST_CASE("decompose_weak recombination is exact") {
    long prec = 24 * 11;
    JacobiForm f = jf_mul(build_phim21(prec), build_phi01(prec));
    WeakDecomposition d = decompose_weak(f);
    // weight -2, index 2: the only admissible coefficient weight is 0, at
    // i = 1 (the i != 1 exclusion of the weight-0 structure comes from the
    // vanishing of weight-2 forms, which does not apply here).
    REQUIRE(d.f.size() == 1);
    CHECK(d.f.count(1) == 1);
    JacobiForm r = recombine_weak(d, prec);
    CHECK(equal_to_common_prec(r.series, f.series));

    JacobiForm p2 = jf_pow(build_phi01(24 * 12), 2);
    WeakDecomposition d2 = decompose_weak(p2);
    JacobiForm r2 = recombine_weak(d2, 24 * 12);
    CHECK(equal_to_common_prec(r2.series, p2.series));

    // perturbing a coefficient breaks membership in the stated space
    JacobiForm bogus = build_phi01(24 * 9);
    bogus.series.add_term(24, 8, Cyc12(1));  // stray q r^4 term
    CHECK_THROWS_AS(decompose_weak(bogus), error);
}

TEST_CASE("phi_{0,5} facts") {
    long prec = 24 * 7;
    JacobiForm p = build_phi05(prec);
    QSeries five = scale(p.series, Cyc12(5));
    CHECK(five.layer(0) == make_layer({{2, 5}, {0, 2}, {-2, 5}}));
    CHECK(five.coeff(24, 10) == Cyc12(-1));  // q^1 r^5 of 5 phi_{0,5}

    auto [nonconst, q0] = q0_nonconstant(p);
    CHECK(nonconst);
    CHECK(q0.at(2) == Cyc12(1));
    CHECK(q0.at(0) == Cyc12(make_rational(2, 5)));

    auto [nc01, q001] = q0_nonconstant(build_phi01(96));
    CHECK(nc01);
    CHECK(q001 == make_layer({{2, 1}, {0, 10}, {-2, 1}}));

    CHECK_THROWS_AS(q0_nonconstant(JacobiForm::unit(96)), error);
}

TEST_CASE("non-holomorphy witness eta^48 phi_{-2,1}^9 phi_{0,5}") {
    long prec = 24 * 6;
    JacobiForm f = jf_mul(jf_mul(jf_pow(build_eta(24 * 8), 48),
                                 jf_pow(build_phim21(prec), 9)),
                          build_phi05(prec));
    CHECK(f.index2 == 28);  // index 14
    Cyc12 c = f.series.coeff(72, 28);
    CHECK(!c.is_zero());
    long long norm = 2LL * f.index2 * 72 - 6LL * 28 * 28;
    CHECK(norm < 0);
    CHECK(classify(f).cls == FormClass::weak);
}

TEST_CASE("bracket output is cusp on sampled inputs") {
    long prec = 120;
    // integral-index pairs
    JacobiForm e41 = build_e41(prec), p121 = build_phi121(prec);
    JacobiForm p101 = build_phi101(prec);
    CHECK(classify(bracket(e41, p121)).cls == FormClass::cusp);
    CHECK(classify(bracket(e41, p101)).cls == FormClass::cusp);
    CHECK(classify(bracket(p101, p121)).cls == FormClass::cusp);
    // half-integral pairs from the theta family
    for (auto [a, b] : {std::pair<long, long>{1, 2}, {1, 3}, {2, 3}})
        CHECK(classify(bracket(build_theta_scaled(a, prec),
                               build_theta_scaled(b, prec)))
                  .cls == FormClass::cusp);
    CHECK(classify(bracket(build_theta(prec), build_theta32(prec))).cls ==
          FormClass::cusp);
}

TEST_CASE("auxiliary index-1 forms of weight 3") {
    // phi_{3,1} = phi_{12,1}/eta^18 is holomorphic with nonzero value at z=0
    long prec = 240;
    JacobiForm phi31 = jf_div(build_phi121(prec), jf_pow(build_eta(prec), 18));
    CHECK(phi31.weight2 == 6);
    CHECK(phi31.index2 == 2);
    CHECK(phi31.etaExp == 6);
    CHECK(classify(phi31).cls == FormClass::holomorphic);
    // collapsing r -> 1 gives 12 eta^6, in particular nonzero
    QSeries collapsed = collapse_r(phi31.series);
    QSeries twelve_eta6 = scale(pow(build_eta(prec).series, 6), Cyc12(12));
    CHECK(equal_at(collapsed, twelve_eta6,
                   std::min(collapsed.prec24, twelve_eta6.prec24)));

    // eta^6 theta^4 phi_{3,1} is a cusp form of weight 8 and index 3 with
    // trivial character, matching dim J^c_{8,3} = 1
    JacobiForm f = jf_mul(parse_block("eta^6*theta(1)^4", prec), phi31);
    CHECK(f.weight2 == 16);
    CHECK(f.index2 == 6);
    CHECK(f.etaExp == 0);
    CHECK(classify(f).cls == FormClass::cusp);
    CHECK(dim_cusp(8, 3) == 1);
}
