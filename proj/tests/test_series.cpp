#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "matseries.hpp"
#include "series.hpp"

using namespace cybe;

namespace {

LaurentSeries poly(std::initializer_list<long> coeffs, long lo, long prec) {
    std::vector<Rat> c;
    for (long x : coeffs) c.emplace_back(x);
    return LaurentSeries::from_coeffs(lo, std::move(c), prec);
}

std::mt19937 rng(20240911);

Rat random_rat() {
    std::uniform_int_distribution<int> num(-6, 6), den(1, 5);
    return rat_of(num(rng), den(rng));
}

LaurentSeries random_series(long lo, long prec) {
    std::vector<Rat> c;
    for (long e = lo; e < prec; ++e) c.push_back(random_rat());
    return LaurentSeries::from_coeffs(lo, std::move(c), prec);
}

// Independent Lagrange-inversion oracle: v_n = (1/n) [z^{n-1}] (z/w(z))^n.
LaurentSeries lagrange_inverse(const LaurentSeries& w, long nmax) {
    LaurentSeries zw = series_div(LaurentSeries::monomial(Rat(1), 1, nmax + 2), w);
    std::vector<Rat> v;
    LaurentSeries p = LaurentSeries::constant(Rat(1), nmax + 1);
    for (long n = 1; n <= nmax; ++n) {
        p = p * zw;
        v.push_back(p.coeff(n - 1) / Rat(n));
    }
    return LaurentSeries::from_coeffs(1, std::move(v), nmax + 1);
}

}  // namespace

TEST_CASE("polynomial products and window bookkeeping") {
    auto a = poly({1, 1}, 0, 8);   // 1+z
    auto b = poly({1, -1}, 0, 8);  // 1-z
    auto ab = a * b;
    CHECK(ab.coeff(0) == Rat(1));
    CHECK(ab.coeff(1) == Rat(0));
    CHECK(ab.coeff(2) == Rat(-1));
    CHECK(ab.prec() == 8);

    auto zinv = LaurentSeries::monomial(Rat(1), -1, 5);
    auto z = LaurentSeries::monomial(Rat(1), 1, 5);
    auto one = zinv * z;
    CHECK(one.coeff(0) == Rat(1));
    CHECK(one.order() == 0);
    // mul window = min(a.lo + b.prec, b.lo + a.prec)
    CHECK(one.prec() == 4);
}

TEST_CASE("geometric series inverse multiplies back to 1") {
    auto denom = poly({1, -1}, 0, 12);  // 1-z
    auto inv = series_div(LaurentSeries::constant(Rat(1), 12), denom);
    for (long e = 0; e < inv.prec(); ++e) CHECK(inv.coeff(e) == Rat(1));
    auto back = inv * denom;
    CHECK(back.coeff(0) == Rat(1));
    for (long e = 1; e < back.prec(); ++e) CHECK(back.coeff(e) == Rat(0));
}

TEST_CASE("division by zero-on-window series fails") {
    auto z = LaurentSeries::zero(6);
    CHECK_THROWS_AS(series_div(LaurentSeries::constant(Rat(1), 6), z), DivisionByZeroSeries);
}

TEST_CASE("derivative basics") {
    auto z2 = LaurentSeries::monomial(Rat(1), 2, 9);
    auto d = series_derive(z2);
    CHECK(d.coeff(1) == Rat(2));
    CHECK(d.prec() == 8);

    auto zinv = LaurentSeries::monomial(Rat(1), -1, 4);
    auto dzinv = series_derive(zinv);
    CHECK(dzinv.coeff(-2) == Rat(-1));
}

TEST_CASE("residue") {
    CHECK(series_residue(LaurentSeries::monomial(Rat(1), -1, 3)) == Rat(1));
    CHECK(series_residue(LaurentSeries::monomial(Rat(1), 2, 5)) == Rat(0));
    CHECK_THROWS_AS(series_residue(LaurentSeries::monomial(Rat(1), 2, -1)), WindowTooNarrow);
}

TEST_CASE("residue of a derivative vanishes (property)") {
    for (int t = 0; t < 30; ++t) {
        auto f = random_series(-4, 6);
        CHECK(series_residue(series_derive(f)) == Rat(0));
    }
}

TEST_CASE("ring axioms on intersected windows (property)") {
    for (int t = 0; t < 25; ++t) {
        auto a = random_series(-2, 6), b = random_series(-1, 7), c = random_series(0, 5);
        CHECK(agree_on_common_window(a * b, b * a));
        CHECK(agree_on_common_window((a * b) * c, a * (b * c)));
        CHECK(agree_on_common_window(a * (b + c), a * b + a * c));
    }
}

TEST_CASE("compose: simple exact cases") {
    auto a = LaurentSeries::monomial(Rat(1), 2, 10);  // z^2
    auto w = LaurentSeries::monomial(Rat(2), 1, 10);  // 2z
    auto c = series_compose(a, w);
    CHECK(c.coeff(2) == Rat(4));

    // a(z) = 1/z composed with w = z/(1-z) gives (1-z)/z = 1/z - 1,
    // checked by multiplying back with w.
    auto w2 = series_div(LaurentSeries::monomial(Rat(1), 1, 10), poly({1, -1}, 0, 10));
    auto aw = series_compose(LaurentSeries::monomial(Rat(1), -1, 10), w2);
    CHECK(aw.coeff(-1) == Rat(1));
    CHECK(aw.coeff(0) == Rat(-1));
    auto prod = aw * w2;
    CHECK(prod.coeff(0) == Rat(1));
    for (long e = 1; e < prod.prec(); ++e) CHECK(prod.coeff(e) == Rat(0));
}

TEST_CASE("compose rejects bad coordinates") {
    CHECK_THROWS_AS(series_compose(poly({1}, 0, 4), poly({1, 1}, 0, 4)), InvalidCoordinate);
    CHECK_THROWS_AS(series_compose(poly({1}, 0, 4), LaurentSeries::monomial(Rat(1), 2, 6)),
                    InvalidCoordinate);
}

TEST_CASE("compositional inverse matches the Lagrange oracle") {
    // w = z + z^2: inverse is z - z^2 + 2z^3 - 5z^4 + 14z^5 - 42z^6 (Catalan signs),
    // frozen from the oracle.
    auto w = poly({1, 1}, 1, 8);
    auto v = comp_inverse(w);
    auto expect = lagrange_inverse(w, 7);
    CHECK(agree_on_common_window(v, expect));
    CHECK(v.coeff(1) == Rat(1));
    CHECK(v.coeff(2) == Rat(-1));
    CHECK(v.coeff(3) == Rat(2));
    CHECK(v.coeff(4) == Rat(-5));
    CHECK(v.coeff(5) == Rat(14));
    CHECK(v.coeff(6) == Rat(-42));

    CHECK(comp_inverse(LaurentSeries::monomial(Rat(1), 1, 6)).coeff(1) == Rat(1));
    CHECK(comp_inverse(LaurentSeries::monomial(Rat(2), 1, 6)).coeff(1) == rat_of(1, 2));
}

TEST_CASE("compose then inverse round-trips (property)") {
    for (int t = 0; t < 12; ++t) {
        auto w = random_series(1, 8);
        if (w.is_zero() || w.order() != 1) continue;
        auto v = comp_inverse(w);
        auto a = random_series(-2, 5);
        auto round = series_compose(series_compose(a, w), v);
        CHECK(agree_on_common_window(round, a));
        // and w(v(z)) = z
        auto idy = series_compose(w, v);
        CHECK(idy.coeff(1) == Rat(1));
        for (long e = 2; e < idy.prec(); ++e) CHECK(idy.coeff(e) == Rat(0));
    }
}

TEST_CASE("solve_flow") {
    SUBCASE("lambda = 1 gives u = z") {
        auto u = solve_flow(LaurentSeries::constant(Rat(1), 8));
        CHECK(u.coeff(1) == Rat(1));
        for (long e = 2; e < u.prec(); ++e) CHECK(u.coeff(e) == Rat(0));
    }
    SUBCASE("lambda = 1+z gives the coefficients of e^z - 1") {
        auto u = solve_flow(poly({1, 1}, 0, 9));
        Rat f(1);  // running 1/k!
        for (long k = 1; k < u.prec(); ++k) {
            f /= Rat(k);
            CHECK(u.coeff(k) == f);
        }
        auto residual = series_derive(u) - series_compose(poly({1, 1}, 0, 9), u);
        CHECK(residual.is_zero());
    }
    SUBCASE("u' = lambda(u) holds on the window for random units (property)") {
        for (int t = 0; t < 10; ++t) {
            auto lam = random_series(0, 7);
            if (!lam.known(0) || is_zero(lam.coeff(0))) continue;
            if (lam.is_zero() || lam.order() != 0) continue;
            auto u = solve_flow(lam);
            auto lhs = series_derive(u);
            auto rhs = series_compose(lam, u);
            CHECK(agree_on_common_window(lhs, rhs));
            CHECK(u.coeff(1) == lam.coeff(0));
        }
    }
    SUBCASE("non-unit rejected") {
        CHECK_THROWS_AS(solve_flow(LaurentSeries::monomial(Rat(1), 1, 5)), NotAUnit);
    }
}

TEST_CASE("solve_linear_ode") {
    SUBCASE("M = 0 keeps psi constant") {
        QMat p0(2, 2);
        p0.at(0, 0) = 3;
        p0.at(1, 1) = rat_of(1, 2);
        auto psi = solve_linear_ode(MatSeries::zero(2, 6), p0);
        CHECK(psi.at(0) == p0);
        for (long k = 1; k < psi.prec; ++k) CHECK(psi.at(k).is_zero());
    }
    SUBCASE("constant M gives exp(Cz): psi_k = C^k / k!") {
        QMat c(2, 2);
        c.at(0, 1) = 1;
        c.at(1, 0) = -2;
        auto M = MatSeries::constant(c, 7);
        auto psi = solve_linear_ode(M, QMat::identity(2));
        QMat pow = QMat::identity(2);
        Rat f(1);
        for (long k = 1; k < psi.prec; ++k) {
            pow = pow * c;
            f /= Rat(k);
            CHECK(psi.at(k) == pow.scaled(f));
        }
        // termwise residual psi' - M psi = 0
        auto lhs = mat_series_derive(psi);
        auto rhs = M * psi;
        CHECK(lhs == rhs.truncated(lhs.prec));
    }
    SUBCASE("series inverse round trip") {
        QMat c(2, 2);
        c.at(0, 0) = 1;
        c.at(0, 1) = 2;
        c.at(1, 1) = 1;
        MatSeries a = MatSeries::constant(c, 6);
        a.at_mut(1).at(1, 0) = rat_of(1, 3);
        a.at_mut(3).at(0, 1) = -5;
        auto inv = mat_series_inverse(a);
        auto prod = a * inv;
        CHECK(prod.at(0).is_identity());
        for (long k = 1; k < prod.prec; ++k) CHECK(prod.at(k).is_zero());
    }
}

TEST_CASE("window narrowing is loud, not silent") {
    auto a = poly({1, 2, 3}, 0, 3);
    CHECK_THROWS_AS(a.coeff(3), WindowTooNarrow);
    auto b = a * a;  // prec 3
    CHECK(b.prec() == 3);
    CHECK_THROWS_AS(b.coeff(3), WindowTooNarrow);
}

TEST_CASE("normalization strips leading zeros but never extends prec") {
    auto s = LaurentSeries::from_coeffs(-2, {Rat(0), Rat(0), Rat(5), Rat(0)}, 4);
    CHECK(s.lo() == 0);
    CHECK(s.prec() == 4);
    CHECK(s.coeff(-2) == Rat(0));  // known zero below lo
    CHECK(s.coeff(0) == Rat(5));
}
