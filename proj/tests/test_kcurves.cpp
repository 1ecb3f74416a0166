#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "etamod/kcurves.hpp"

using namespace etamod;

TEST_CASE("hilbert symbol examples") {
    CHECK(hilbert_symbol(Rational(-1), Rational(-1), place_infinity) == -1);
    CHECK(hilbert_symbol(Rational(-1), Rational(1), place_infinity) == 1);
    CHECK(hilbert_symbol(Rational(-1), Rational(-1), Integer(2)) == -1);
    CHECK(hilbert_symbol(Rational(-1), Rational(-1), Integer(3)) == 1);
    CHECK(hilbert_symbol(Rational(5), Rational(2), Integer(5)) == -1);
    CHECK(hilbert_symbol(Rational(2), Rational(7), Integer(7)) == 1);
    CHECK(hilbert_symbol(Rational(3), Rational(7), Integer(7)) == -1);
    // x^2 + y^2 = 2 z^2 is solvable everywhere: (1,1,1).
    for (const Integer& v : {Integer(0), Integer(2), Integer(3), Integer(5), Integer(7)})
        CHECK(hilbert_symbol(Rational(-1), Rational(2), v) == 1);
    CHECK_THROWS_AS(hilbert_symbol(Rational(0), Rational(1), Integer(3)), std::domain_error);
    CHECK_THROWS_AS(hilbert_symbol(Rational(1), Rational(1), Integer(6)), std::domain_error);
}

TEST_CASE("hilbert symbol invariance under squares and multiplicativity") {
    std::mt19937 rng(2026);
    std::uniform_int_distribution<long> pick(-30, 30);
    std::vector<Integer> places = {place_infinity, Integer(2), Integer(3),
                                   Integer(5), Integer(7), Integer(11), Integer(13)};
    int done = 0;
    while (done < 100) {
        long a = pick(rng), b = pick(rng), c = pick(rng);
        if (a == 0 || b == 0 || c == 0) continue;
        ++done;
        for (const Integer& v : places) {
            CHECK(hilbert_symbol(Rational(a), Rational(b), v) ==
                  hilbert_symbol(Rational(a * 4), Rational(b * 9), v));
            CHECK(hilbert_symbol(Rational(a), Rational(b), v) *
                      hilbert_symbol(Rational(a), Rational(c), v) ==
                  hilbert_symbol(Rational(a), Rational(b * c), v));
        }
    }
}

TEST_CASE("hilbert product formula") {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<long> pick(-40, 40);
    int done = 0;
    while (done < 100) {
        long a = pick(rng), b = pick(rng);
        if (a == 0 || b == 0) continue;
        ++done;
        int product = hilbert_symbol(Rational(a), Rational(b), place_infinity);
        product *= hilbert_symbol(Rational(a), Rational(b), Integer(2));
        for (const auto& [p, e] : factorize(Integer(a) * Integer(b))) {
            (void)e;
            if (p != 2) product *= hilbert_symbol(Rational(a), Rational(b), p);
        }
        CHECK(product == 1);
    }
}

TEST_CASE("radicand validation") {
    CHECK_THROWS_AS(require_radicand(Integer(0)), std::domain_error);
    CHECK_THROWS_AS(require_radicand(Integer(1)), std::domain_error);
    CHECK_THROWS_AS(require_radicand(Integer(4)), std::domain_error);
    CHECK_THROWS_AS(require_radicand(Integer(12)), std::domain_error);
    CHECK_NOTHROW(require_radicand(Integer(-1)));
    CHECK_NOTHROW(require_radicand(Integer(-30)));
}

TEST_CASE("norm decisions") {
    CHECK(is_norm(Rational(2), Integer(-1)));    // 1 + 1
    CHECK(is_norm(Rational(5), Integer(-1)));    // 1 + 4
    CHECK_FALSE(is_norm(Rational(3), Integer(-1)));
    CHECK_FALSE(is_norm(Rational(7), Integer(-1)));
    CHECK_FALSE(is_norm(Rational(-1), Integer(-1)));
    CHECK(is_norm(Rational(2), Integer(-2)));    // 0 + 2
    CHECK(is_norm(Rational(-1), Integer(5)));    // 4 - 5
    CHECK_FALSE(is_norm(Rational(2), Integer(5)));
    CHECK(is_norm(rational(1, 2), Integer(-1)));  // (1/2)^2 + (1/2)^2
    CHECK_THROWS_AS(is_norm(Rational(0), Integer(-1)), std::domain_error);
    CHECK_THROWS_AS(is_norm(Rational(2), Integer(8)), std::domain_error);
}

TEST_CASE("norm witnesses") {
    auto w1 = norm_witness(Rational(2), Integer(-2), 10);
    REQUIRE(w1.has_value());
    CHECK(w1->first == 0);
    CHECK(w1->second == 1);
    auto w2 = norm_witness(Rational(2), Integer(-1), 10);
    REQUIRE(w2.has_value());
    CHECK(w2->first == 1);
    CHECK(w2->second == 1);
    CHECK_FALSE(norm_witness(Rational(2), Integer(5), 20).has_value());
    // Witnesses actually satisfy the equation.
    for (long n : {2L, 5L, 13L}) {
        auto w = norm_witness(Rational(n), Integer(-1), 30);
        REQUIRE(w.has_value());
        CHECK(w->first * w->first + w->second * w->second == n);
    }
}

TEST_CASE("strict twist existence") {
    NormDecision d1 = strict_kcurve_exists(2, Integer(-2), 10);
    CHECK(d1.exists);
    CHECK(d1.plusIsNorm);
    REQUIRE(d1.witness.has_value());
    CHECK(d1.witness->x == 0);
    CHECK(d1.witness->y == 1);
    CHECK(d1.witness->sign == 1);

    CHECK_FALSE(strict_kcurve_exists(2, Integer(5), 10).exists);
    CHECK_FALSE(strict_kcurve_exists(3, Integer(-1), 10).exists);
    CHECK(strict_kcurve_exists(7, Integer(-7), 10).exists);

    // -2 is a norm from Q(sqrt(3)): 1 - 3 = -2.
    NormDecision d2 = strict_kcurve_exists(2, Integer(3), 10);
    CHECK(d2.exists);
    CHECK(d2.minusIsNorm);
    REQUIRE(d2.witness.has_value());
    CHECK(d2.witness->x * d2.witness->x - Rational(3) * d2.witness->y * d2.witness->y ==
          Rational(d2.witness->sign * 2));
}

TEST_CASE("conic parameterization") {
    QuadraticNumber h = conic_parameterize(2, Integer(-1), Rational(1));
    CHECK(h == QuadraticNumber(Rational(0), Rational(64), Integer(-1)));
    CHECK(h * h.conjugate() == QuadraticNumber(Rational(4096)));

    QuadraticNumber h0 = conic_parameterize(3, Integer(5), Rational(0));
    CHECK(h0 == QuadraticNumber(Rational(27)));

    std::mt19937 rng(808);
    std::uniform_int_distribution<long> tn(-8, 8), td(1, 8);
    for (long N : {2L, 3L, 4L, 7L}) {
        Rational kappa = pow_rational(rational_kappa_sqrt(N), 2);
        for (int k = 0; k < 10; ++k) {
            Rational t = rational(tn(rng), td(rng));
            QuadraticNumber p = conic_parameterize(N, Integer(-6), t);
            CHECK(p * p.conjugate() == QuadraticNumber(kappa));
        }
    }
    CHECK_THROWS_AS(rational_kappa_sqrt(5), std::domain_error);
    CHECK_THROWS_AS(conic_parameterize(2, Integer(8), Rational(0)), std::domain_error);
}

TEST_CASE("conjugation relations at conic points") {
    QuadraticNumber h = conic_parameterize(2, Integer(-1), rational(1, 2));
    CHECK(check_conjugation_relations(2, h));
    QuadraticNumber h3 = conic_parameterize(3, Integer(7), rational(2, 3));
    CHECK(check_conjugation_relations(3, h3));
    CHECK_THROWS_WITH(check_conjugation_relations(2, QuadraticNumber(Rational(1))),
                      "h does not satisfy h * conj(h) = kappa_N");
}

TEST_CASE("strict twist families") {
    // D = -1, alpha = 1 + i: norm 2, and -2/2 = -1 is a square in Q(i).
    TwistFamily strict_fam = strict_twist_family(
        TwistSpec{2, Integer(-1), Rational(0), QuadraticNumber(Rational(1), Rational(1), Integer(-1))});
    CHECK(strict_fam.strict);
    CHECK(strict_fam.h == QuadraticNumber(Rational(64)));

    // alpha = 1: norm 1, -1/2 is not a square in Q(i).
    TwistFamily plain = strict_twist_family(
        TwistSpec{2, Integer(-1), Rational(0), QuadraticNumber(Rational(1))});
    CHECK_FALSE(plain.strict);
    // At t = 0 the curve has the rational CM coefficients scaled by 1/48, 1/864.
    CHECK(plain.curve.a4 == QuadraticNumber(rational(-5, 96)));
    CHECK(plain.curve.a6 == QuadraticNumber(rational(-7, 1728)));
    CHECK(plain.isogenous.a4 == QuadraticNumber(rational(-5, 384)));
    CHECK(plain.isogenous.a6 == QuadraticNumber(rational(7, 13824)));

    // D = -2, alpha = sqrt(-2): norm 2, -1 is not a square in Q(sqrt(-2)).
    TwistFamily root = strict_twist_family(
        TwistSpec{2, Integer(-2), Rational(0), QuadraticNumber(Rational(0), Rational(1), Integer(-2))});
    CHECK_FALSE(root.strict);

    CHECK_THROWS_WITH(
        strict_twist_family(TwistSpec{2, Integer(-1), Rational(0), QuadraticNumber(Rational(0))}),
        "alpha must be nonzero");
    CHECK_THROWS_WITH(
        strict_twist_family(
            TwistSpec{2, Integer(-1), Rational(0), QuadraticNumber(Rational(0), Rational(1), Integer(3))}),
        "alpha must lie in Q(sqrt(D))");
}

TEST_CASE("twisting preserves the j-invariant pair") {
    // j(E) depends only on h, not on alpha: j = 1728 * 4 a4^3/(4 a4^3 + 27 a6^2)
    // computed from the family must match jFunction(h).
    const LevelContext& ctx = level_context(2);
    for (const auto& alpha : {QuadraticNumber(Rational(1)),
                              QuadraticNumber(Rational(2), Rational(3), Integer(-1))}) {
        TwistFamily fam = strict_twist_family(TwistSpec{2, Integer(-1), rational(1, 3), alpha});
        QuadraticNumber a4 = fam.curve.a4, a6 = fam.curve.a6;
        QuadraticNumber four(Rational(4)), tf(Rational(27));
        QuadraticNumber denom = four * a4.pow(3) + tf * a6.pow(2);
        QuadraticNumber j = QuadraticNumber(Rational(1728 * 4)) * a4.pow(3) / denom;
        CHECK(j == ctx.jFunction.eval(fam.h));
    }
}
