#include "jpl/blocks.hpp"
#include "jpl/qseries.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace jpl;

namespace {

QSeries random_series(std::mt19937& rng, long prec) {
    std::uniform_int_distribution<long> n(0, prec - 1), l(-4, 4), c(-3, 3);
    QSeries s(prec);
    int terms = static_cast<int>(rng() % 8);
    for (int i = 0; i < terms; i++) s.add_term(n(rng), l(rng), Cyc12(c(rng)));
    return s;
}

RLaurent make_layer(std::initializer_list<std::pair<long, long>> cs) {
    RLaurent r;
    for (auto [l, c] : cs) rl_add_term(r, l, Cyc12(c));
    return r;
}

}  // namespace

TEST_CASE("half-integral r arithmetic") {
    // (r^{1/2} - r^{-1/2})^2 = r - 2 + r^{-1}
    QSeries a(24);
    a.add_term(0, 1, Cyc12(1));
    a.add_term(0, -1, Cyc12(-1));
    QSeries sq = a * a;
    CHECK(sq.layer(0) == make_layer({{2, 1}, {0, -2}, {-2, 1}}));
}

TEST_CASE("ring axioms on random series") {
    std::mt19937 rng(3);
    for (int i = 0; i < 40; i++) {
        QSeries a = random_series(rng, 48), b = random_series(rng, 48),
                c = random_series(rng, 48);
        QSeries lhs = (a * b) * c, rhs = a * (b * c);
        CHECK(equal_at(lhs, rhs, std::min(lhs.prec24, rhs.prec24)));
        QSeries d1 = a * (b + c), d2 = a * b + a * c;
        CHECK(equal_at(d1, d2, std::min(d1.prec24, d2.prec24)));
        CHECK(equal_to_common_prec(a + b, b + a));
    }
}

TEST_CASE("precision propagation") {
    QSeries a(48), b(24);
    a.add_term(0, 0, Cyc12(1));
    b.add_term(12, 0, Cyc12(1));
    CHECK((a + b).prec24 == 24);
    CHECK((a * b).prec24 == std::min(48L + 12, 24L + 0));
    QSeries z(36);  // zero series: ord defaults to prec
    CHECK((a * z).prec24 == std::min(48L + 36, 36L + 0));
    CHECK((a * z).is_zero());
}

TEST_CASE("series division") {
    long prec = 240;
    QSeries delta = build_delta(prec).series;
    QSeries one = series_div(delta, delta);
    CHECK(equal_at(one, QSeries::one(one.prec24), one.prec24));

    // (r - r^{-1})/(r^{1/2} - r^{-1/2}) = r^{1/2} + r^{-1/2}
    QSeries num(24), den(24);
    num.add_term(0, 2, Cyc12(1));
    num.add_term(0, -2, Cyc12(-1));
    den.add_term(0, 1, Cyc12(1));
    den.add_term(0, -1, Cyc12(-1));
    CHECK(series_div(num, den).layer(0) == make_layer({{1, 1}, {-1, 1}}));

    // inexact quotient is an error
    QSeries bad(24);
    bad.add_term(0, 2, Cyc12(1));
    bad.add_term(0, 0, Cyc12(1));
    CHECK_THROWS_AS(series_div(bad, den), error);
}

TEST_CASE("phi_{12,1}/Delta begins like phi_{0,1}") {
    long prec = 120;
    QSeries q = series_div(build_phi121(prec).series, build_delta(prec).series);
    CHECK(q.layer(0) == make_layer({{2, 1}, {0, 10}, {-2, 1}}));
    CHECK(q.layer(24) ==
          make_layer({{-4, 10}, {-2, -64}, {0, 108}, {2, -64}, {4, 10}}));
}

TEST_CASE("division inverts multiplication") {
    std::mt19937 rng(5);
    for (int i = 0; i < 30; i++) {
        QSeries a = random_series(rng, 48);
        QSeries b = random_series(rng, 48);
        if (b.is_zero()) continue;
        QSeries q = series_div(a * b, b);
        CHECK(equal_at(q, a, std::min(q.prec24, a.prec24)));
    }
}

TEST_CASE("z_scale") {
    long prec = 96;
    QSeries th = build_theta(prec).series;
    CHECK(equal_at(z_scale(th, 1), th, prec));
    QSeries th2 = z_scale(th, 2);
    CHECK(th2.layer(3) == make_layer({{2, 1}, {-2, -1}}));  // q^{1/8}(r - 1/r)
}

TEST_CASE("z_derivative") {
    QSeries c = QSeries::one(48);
    CHECK(z_derivative(c).is_zero());

    QSeries th(48);
    th.add_term(3, 1, Cyc12(1));
    th.add_term(3, -1, Cyc12(-1));
    QSeries d = z_derivative(th);
    CHECK(d.coeff(3, 1) == Cyc12(make_rational(1, 2)));
    CHECK(d.coeff(3, -1) == Cyc12(make_rational(1, 2)));

    std::mt19937 rng(7);
    for (int i = 0; i < 30; i++) {
        QSeries a = random_series(rng, 48), b = random_series(rng, 48);
        QSeries lhs = z_derivative(a * b);
        QSeries rhs = z_derivative(a) * b + a * z_derivative(b);
        CHECK(equal_at(lhs, rhs, std::min(lhs.prec24, rhs.prec24)));
    }
}

TEST_CASE("comparison beyond precision is an error") {
    QSeries a(24), b(48);
    CHECK_THROWS_AS(equal_at(a, b, 36), error);
    CHECK_NOTHROW(equal_at(a, b, 24));
}

TEST_CASE("canonical JSON rendering") {
    QSeries s(48);
    s.add_term(3, -1, Cyc12(-1));
    s.add_term(3, 1, Cyc12(1));
    s.add_term(27, 3, Cyc12(make_rational(1, 2)));
    std::string j = to_json(s).dump();
    CHECK(j ==
          R"({"prec24":48,"terms":[{"n24":3,"coeffs":[{"l2":-1,"c":["-1/1","0/1","0/1","0/1"]},)"
          R"({"l2":1,"c":["1/1","0/1","0/1","0/1"]}]},)"
          R"({"n24":27,"coeffs":[{"l2":3,"c":["1/2","0/1","0/1","0/1"]}]}]})");
    CHECK(to_json(s).dump() == j);  // bit-exact across calls
}
