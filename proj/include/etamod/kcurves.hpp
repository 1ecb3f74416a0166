#pragma once

// Strict twist machinery over quadratic fields Q(sqrt(D)): Hilbert symbols,
// the norm-equation decision x^2 - D y^2 = n (Hasse-Minkowski, decided
// locally), bounded witness search, the conic parameterization of the
// Fricke locus h conj(h) = kappa_N for square kappa_N (N in {2,3,4,7}),
// the conjugation-relation checker, and the strict twist family
//   E : y^2 = x^3 - alpha^2 A4(h)/48 x + alpha^3 A6(h)/864
// (with the primed pair for E'), strict when
// quad_norm(alpha) lies in -N * (Q(sqrt(D))^x)^2.

#include <optional>

#include "etamod/curves.hpp"
#include "etamod/quadratic.hpp"

namespace etamod {

// Place marker for the infinite (real) place.
inline const Integer place_infinity = 0;

namespace detail {

// Multiplying by a square does not change any Hilbert symbol; this turns a
// rational into an integer representative of the same square class.
inline Integer square_class_integer(const Rational& a) {
    if (a == 0) throw std::domain_error("hilbert symbol requires nonzero arguments");
    return a.get_num() * a.get_den();
}

inline long p_adic_valuation(Integer& n, const Integer& p) {
    long v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

inline int epsilon_mod2(const Integer& u) { return (((u % 4) + 4) % 4 == 3) ? 1 : 0; }
inline int omega_mod2(const Integer& u) {
    Integer r = ((u % 8) + 8) % 8;
    return (r == 3 || r == 5) ? 1 : 0;
}

}  // namespace detail

// Classical Hilbert symbol (a, b)_v; v is an odd prime, 2, or
// place_infinity.  +1 iff z^2 = a x^2 + b y^2 has a nontrivial solution
// over the completion at v.
inline int hilbert_symbol(const Rational& a, const Rational& b, const Integer& place) {
    Integer ai = detail::square_class_integer(a);
    Integer bi = detail::square_class_integer(b);
    if (place == place_infinity) return (ai < 0 && bi < 0) ? -1 : 1;
    if (!is_prime(place)) throw std::domain_error("place must be prime or infinity");

    long alpha = detail::p_adic_valuation(ai, place);
    long beta = detail::p_adic_valuation(bi, place);
    const Integer& u = ai;  // now the unit parts
    const Integer& v = bi;

    if (place == 2) {
        long e = detail::epsilon_mod2(u) * detail::epsilon_mod2(v) +
                 alpha * detail::omega_mod2(v) + beta * detail::omega_mod2(u);
        return (e % 2 == 0) ? 1 : -1;
    }
    int sign = 1;
    if ((alpha % 2) != 0 && (beta % 2) != 0 && ((place - 1) / 2) % 2 != 0) sign = -sign;
    if (beta % 2 != 0) sign *= legendre_symbol(u, place);
    if (alpha % 2 != 0) sign *= legendre_symbol(v, place);
    return sign;
}

inline void require_radicand(const Integer& D) {
    if (D == 0 || D == 1) throw std::domain_error("radicand must be squarefree and not 0 or 1");
    auto [s, core] = squarefree_decompose(D);
    if (s != 1) throw std::domain_error("radicand must be squarefree");
}

// True iff x^2 - D y^2 = n has a rational solution, i.e. n is a norm from
// Q(sqrt(D)).  Equivalent to (D, n)_v = +1 at every place; only places
// dividing 2 D num(n) den(n) and infinity can obstruct.
inline bool is_norm(const Rational& n, const Integer& D) {
    if (n == 0) throw std::domain_error("is_norm requires nonzero n");
    require_radicand(D);
    Rational d_rat(D);
    if (hilbert_symbol(d_rat, n, place_infinity) != 1) return false;
    std::vector<Integer> primes{2};
    for (const auto& [p, e] : factorize(D)) {
        (void)e;
        if (p != 2) primes.push_back(p);
    }
    for (const auto& [p, e] : factorize(n.get_num() * n.get_den())) {
        (void)e;
        if (p != 2 && std::find(primes.begin(), primes.end(), p) == primes.end())
            primes.push_back(p);
    }
    for (const auto& p : primes)
        if (hilbert_symbol(d_rat, n, p) != 1) return false;
    return true;
}

// Bounded deterministic search for x^2 - D y^2 = n: denominators c = 1..bound,
// then numerators 0, 1, -1, 2, -2, ... up to bound for x; y is solved for.
inline std::optional<std::pair<Rational, Rational>> norm_witness(const Rational& n,
                                                                const Integer& D, long bound) {
    require_radicand(D);
    if (bound < 1) throw std::domain_error("bound must be positive");
    for (long c = 1; c <= bound; ++c) {
        for (long a = 0; a <= bound; ++a) {
            for (int sign : {+1, -1}) {
                if (a == 0 && sign < 0) continue;
                Rational x = rational(sign * a, c);
                Rational y2 = (x * x - n) / Rational(D);
                if (y2 < 0) continue;
                if (auto y = exact_sqrt(y2)) return std::make_pair(x, *y);
            }
        }
    }
    return std::nullopt;
}

struct NormDecision {
    long level = 1;
    Integer radicand = 1;
    bool plusIsNorm = false;
    bool minusIsNorm = false;
    bool exists = false;
    // x^2 - D y^2 = sign * N, when the bounded search finds one.
    struct Witness {
        Rational x, y;
        int sign = +1;
    };
    std::optional<Witness> witness;
};

// Theorem criterion: a strict twist exists over Q(sqrt(D)) above a rational
// point of X_0^+(N) iff N or -N is a norm from Q(sqrt(D)).
inline NormDecision strict_kcurve_exists(long N, const Integer& D, long bound = 200) {
    if (N < 1) throw std::domain_error("level must be positive");
    NormDecision out;
    out.level = N;
    out.radicand = D;
    out.plusIsNorm = is_norm(Rational(N), D);
    out.minusIsNorm = is_norm(Rational(-N), D);
    out.exists = out.plusIsNorm || out.minusIsNorm;
    for (int sign : {+1, -1}) {
        if (!(sign > 0 ? out.plusIsNorm : out.minusIsNorm)) continue;
        if (auto w = norm_witness(Rational(sign * N), D, bound)) {
            out.witness = NormDecision::Witness{w->first, w->second, sign};
            break;
        }
    }
    return out;
}

// Rational square root of kappa_N, defined exactly for N in {2, 3, 4, 7}.
inline Rational rational_kappa_sqrt(long N) {
    const LevelContext& ctx = level_context(N);
    if (!ctx.record.kappaSqrt.is_rational())
        throw std::domain_error("kappa_N is not a rational square for this level");
    return ctx.record.kappaSqrt.a();
}

// Parameterization of the conic h conj(h) = kappa_N:
//   h = sqrt(kappa_N) (t sqrt(D) + 1)^2 / (1 - D t^2).
inline QuadraticNumber conic_parameterize(long N, const Integer& D, const Rational& t) {
    require_radicand(D);
    Rational s = rational_kappa_sqrt(N);
    Rational dt2 = Rational(D) * t * t;
    if (dt2 == 1) throw std::domain_error("parameter on degenerate locus");
    Rational denom = 1 - dt2;
    return QuadraticNumber(s * (1 + dt2) / denom, s * 2 * t / denom, D);
}

// conj(A4(h)) = N^2 A4'(h) and conj(A6(h)) = -N^3 A6'(h) for h on the
// Fricke conic.
inline bool check_conjugation_relations(long N, const QuadraticNumber& h) {
    const LevelContext& ctx = level_context(N);
    if (h * h.conjugate() != QuadraticNumber(ctx.record.kappa))
        throw std::domain_error("h does not satisfy h * conj(h) = kappa_N");
    const auto& c = ctx.coeffs;
    QuadraticNumber n2(Rational(N * N));
    QuadraticNumber n3(Rational(N * N * N));
    return c.A4.eval(h).conjugate() == n2 * c.A4p.eval(h) &&
           c.A6.eval(h).conjugate() == -n3 * c.A6p.eval(h);
}

struct TwistSpec {
    long level = 2;            // in {2, 3, 4, 7}
    Integer radicand = -1;     // D
    Rational t = Rational(0);  // conic parameter
    QuadraticNumber alpha = QuadraticNumber(Rational(1));
};

struct CurveModel {
    QuadraticNumber a4, a6;  // y^2 = x^3 + a4 x + a6
};

struct TwistFamily {
    QuadraticNumber h;
    CurveModel curve;        // E at h
    CurveModel isogenous;    // E' at h
    bool strict = false;     // quad_norm(alpha) in -N (L^x)^2
};

inline TwistFamily strict_twist_family(const TwistSpec& spec) {
    long N = spec.level;
    if (spec.alpha.is_zero()) throw std::domain_error("alpha must be nonzero");
    if (!spec.alpha.is_rational() && spec.alpha.d() != spec.radicand)
        throw std::domain_error("alpha must lie in Q(sqrt(D))");
    const LevelContext& ctx = level_context(N);
    QuadraticNumber h = conic_parameterize(N, spec.radicand, spec.t);
    const auto& c = ctx.coeffs;
    QuadraticNumber a2 = spec.alpha * spec.alpha;
    QuadraticNumber a3 = a2 * spec.alpha;
    auto scale4 = [&](const QuadraticNumber& v) { return -(a2 * v) / QuadraticNumber(Rational(48)); };
    auto scale6 = [&](const QuadraticNumber& v) { return (a3 * v) / QuadraticNumber(Rational(864)); };
    TwistFamily out;
    out.h = h;
    out.curve = {scale4(c.A4.eval(h)), scale6(c.A6.eval(h))};
    out.isogenous = {scale4(c.A4p.eval(h)), scale6(c.A6p.eval(h))};
    Rational strict_test = -quad_norm(spec.alpha) / Rational(N);
    out.strict = sqrt_in_field(strict_test, spec.radicand).has_value();
    return out;
}

}  // namespace etamod
