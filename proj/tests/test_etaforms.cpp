#include <catch2/catch_amalgamated.hpp>

#include "etamod/etaforms.hpp"

using namespace etamod;

TEST_CASE("eta series via pentagonal numbers") {
    TruncatedSeries eta = eta_series(200);
    CHECK(eta.offset() == rational(1, 24));
    // Coefficients are 0 or (-1)^k, supported exactly on generalized
    // pentagonal numbers k(3k±1)/2.
    std::map<long, long> expected;  // exponent -> coefficient
    expected[0] = 1;
    for (long k = 1; k < 30; ++k) {
        long sign = (k % 2 == 0) ? 1 : -1;
        expected[k * (3 * k - 1) / 2] = sign;
        expected[k * (3 * k + 1) / 2] = sign;
    }
    for (long n = 0; n < 200; ++n) {
        auto it = expected.find(n);
        Rational want = (it == expected.end()) ? Rational(0) : Rational(it->second);
        CHECK(eta.coeffs()[static_cast<size_t>(n)] == want);
    }
}

TEST_CASE("q power substitution") {
    TruncatedSeries s(Rational(0), {Rational(1), Rational(2), Rational(3)});
    TruncatedSeries t = substitute_q_power(s, 3);
    CHECK(t.coeff_at(Rational(0)) == 1);
    CHECK(t.coeff_at(Rational(3)) == 2);
    CHECK(t.coeff_at(Rational(6)) == 3);
    CHECK(t.coeff_at(Rational(1)) == 0);
    CHECK(t.abs_precision() == 7);
    CHECK_THROWS_AS(substitute_q_power(s, 0), std::domain_error);
}

TEST_CASE("eta products validate divisors") {
    CHECK_THROWS_AS(EtaProduct(6, {{4, 1}}), std::domain_error);
    EtaProduct p(6, {{1, 5}, {2, -1}, {3, 1}, {6, -5}});
    CHECK(p.exponent(2) == -1);
    CHECK(p.exponent(4) == 0);
}

TEST_CASE("eisenstein series expansions") {
    TruncatedSeries e4 = eisenstein_series(4, 5);
    CHECK(e4.coeff_at(Rational(0)) == 1);
    CHECK(e4.coeff_at(Rational(1)) == 240);
    CHECK(e4.coeff_at(Rational(2)) == 2160);
    CHECK(e4.coeff_at(Rational(3)) == 6720);
    TruncatedSeries e6 = eisenstein_series(6, 4);
    CHECK(e6.coeff_at(Rational(1)) == -504);
    CHECK(e6.coeff_at(Rational(2)) == -16632);
    CHECK(e6.coeff_at(Rational(3)) == -122976);
    CHECK_THROWS_AS(eisenstein_series(2, 5), std::domain_error);
    CHECK_THROWS_AS(eisenstein_series(5, 5), std::domain_error);
}

TEST_CASE("j function expansion") {
    TruncatedSeries j = j_series(4);
    CHECK(j.offset() == -1);
    CHECK(j.coeff_at(Rational(-1)) == 1);
    CHECK(j.coeff_at(Rational(0)) == 744);
    CHECK(j.coeff_at(Rational(1)) == 196884);
    CHECK(j.coeff_at(Rational(2)) == 21493760);
}

TEST_CASE("weight-2 level series equals a logarithmic derivative") {
    // E2N = q d/dq log(eta(N tau)/eta(tau)).
    for (long N : {2L, 3L, 5L, 6L}) {
        long prec = 40;
        TruncatedSeries eta = eta_series(prec);
        TruncatedSeries ratio =
            substitute_q_power(eta, N).truncate(prec) * series_inv(eta);
        CHECK(series_agree(e2N_series(N, prec), series_log_derivative(ratio)));
    }
    CHECK_THROWS_AS(e2N_series(1, 5), std::domain_error);
}

TEST_CASE("numeric eta value at i") {
    // eta(i) = Gamma(1/4) / (2 pi^{3/4}).
    std::complex<double> v = eval_eta(HalfPlanePoint(0.0, 1.0));
    CHECK(std::abs(v - std::complex<double>(0.7682254223260566, 0.0)) < 1e-12);
    CHECK_THROWS_AS(HalfPlanePoint(0.0, -1.0), std::domain_error);
}

TEST_CASE("series evaluation matches direct evaluation") {
    // eta via series vs the product formula at a generic point.
    HalfPlanePoint tau(0.13, 1.1);
    TruncatedSeries eta = eta_series(60);
    CHECK(std::abs(eval_series(eta, tau) - eval_eta(tau)) < 1e-10);
}

TEST_CASE("functional equations hold for a Hauptmodul numerically") {
    EtaProduct h2(2, {{1, 24}, {2, -24}});
    for (double re : {-0.21, 0.0, 0.37}) {
        auto report = check_functional_equations(h2, Rational(4096), HalfPlanePoint(re, 1.05));
        CHECK(report.within(1e-8));
    }
    // A wrong kappa is detected.
    auto bad = check_functional_equations(h2, Rational(4095), HalfPlanePoint(0.1, 1.0));
    CHECK_FALSE(bad.within(1e-8));
}
