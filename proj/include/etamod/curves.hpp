#pragma once

// Weierstrass data attached to points of genus-zero X_0(N): the isogenous
// pair coefficient functions A4, A6, A4', A6' as rational functions of the
// Hauptmodul, special values of j at the Fricke fixed point, and the 2-/3-
// isogeny special models with their h-coordinates.
//
// The curve attached to h (up to twist by alpha) is
//   E : y^2 = x^3 - alpha^2 A4(h)/48 x + alpha^3 A6(h)/864,
// and E' is the same with the primed coefficients, where
//   A4 = E4(tau)/E2N(tau)^2,   A4' = E4(N tau)/E2N(tau)^2,
//   A6 = E6(tau)/E2N(tau)^3,   A6' = E6(N tau)/E2N(tau)^3.

#include <mutex>

#include "etamod/hauptmodul.hpp"
#include "etamod/ratrecover.hpp"

namespace etamod {

struct IsogenousPairFunctions {
    long level = 1;
    RationalFunction A4, A6, A4p, A6p;
};

struct CmSpecialValue {
    long level = 1;
    QuadraticNumber hValue;  // +sqrt(kappa_N)
    QuadraticNumber jValue;
    std::string fixedTau;  // tau with -1/tau = i*sqrt(N)
};

// E_k(q or q^N) divided by the stated power of the weight-2 level series,
// the latter normalized to constant term 1 so every quotient tends to 1 at
// the infinity cusp.
inline TruncatedSeries coefficient_series(long N, long weight, bool primed, long prec) {
    TruncatedSeries ek = eisenstein_series(weight, prec);
    if (primed) ek = substitute_q_power(ek, N).truncate(prec);
    TruncatedSeries e2 = rational(24, N - 1) * e2N_series(N, prec);
    long power = (weight == 4) ? 2 : 3;
    return ek * series_pow_int(series_inv(e2), power);
}

inline IsogenousPairFunctions isogenous_pair_coeffs(const RecoveryWorkspace& ws) {
    long N = ws.level;
    auto recover = [&](long weight, bool primed) {
        return express_in_hauptmodul(coefficient_series(N, weight, primed, ws.prec), ws);
    };
    return IsogenousPairFunctions{N, recover(4, false), recover(6, false), recover(4, true),
                                  recover(6, true)};
}

// Shared per-level cache: Hauptmodul record, recovery workspace, j(h),
// j(h) - 1728, and the four coefficient functions.
struct LevelContext {
    HauptmodulRecord record;
    RecoveryWorkspace workspace;
    RationalFunction jFunction;
    RationalFunction j1728Function;
    IsogenousPairFunctions coeffs;
};

inline const LevelContext& level_context(long N) {
    static std::map<long, LevelContext> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(N);
    if (it != cache.end()) return it->second;

    HauptmodulRecord rec = solve_record(N);
    long prec = default_precision(N);
    RecoveryWorkspace ws = make_workspace(rec, prec);
    // j has known degree psi(N) in h; pass it to skip the degree search.
    long n = psi(N);
    RationalFunction j = express_in_hauptmodul(j_series(prec), ws, n);
    RationalFunction j1728 = j - RationalFunction::constant(Rational(1728));
    IsogenousPairFunctions coeffs = isogenous_pair_coeffs(ws);
    auto [pos, inserted] =
        cache.emplace(N, LevelContext{std::move(rec), std::move(ws), std::move(j),
                                      std::move(j1728), std::move(coeffs)});
    (void)inserted;
    return pos->second;
}

// j at the Fricke fixed point h = +sqrt(kappa_N), tau = i/sqrt(N).
inline CmSpecialValue cm_special_value(long N) {
    const LevelContext& ctx = level_context(N);
    QuadraticNumber h = ctx.record.kappaSqrt;
    QuadraticNumber j = ctx.jFunction.eval(h);
    return CmSpecialValue{N, h, j, "i/sqrt(" + std::to_string(N) + ")"};
}

// ---- 2- and 3-isogeny special models -----------------------------------
//
//   E2: y^2 = x^3 + a2 x^2 + a4 x          (2-isogeny model)
//   E3: y^2 = x^3 + d (a x + b)^2          (3-isogeny model)

inline Rational h2_from_two_isogeny_model(const Rational& a2, const Rational& a4) {
    Rational den = a2 * a2 - 4 * a4;
    if (den == 0) throw std::domain_error("singular family");
    return Rational(256) * a4 / den;
}

inline Rational h3_from_three_isogeny_model(const Rational& a, const Rational& b,
                                            const Rational& d) {
    Rational den = 4 * a * a * a * d - 27 * b;
    if (den == 0) throw std::domain_error("singular family");
    return Rational(729) * b / den;
}

inline Rational j_two_isogeny_model(const Rational& a2, const Rational& a4) {
    Rational den = a2 * a2 * a4 * a4 - 4 * a4 * a4 * a4;
    if (den == 0) throw std::domain_error("singular model");
    Rational base = a2 * a2 - 3 * a4;
    return Rational(256) * base * base * base / den;
}

inline Rational j_three_isogeny_model(const Rational& a, const Rational& b, const Rational& d) {
    Rational den = 4 * d * d * d * a * a * a * b * b * b - 27 * d * d * b * b * b * b;
    if (den == 0) throw std::domain_error("singular model");
    Rational base = d * d * a * a * a * a - 6 * d * a * b;
    return Rational(256) * base * base * base / den;
}

// Models recovering a prescribed h-coordinate (possibly up to twist):
//   h = 2:  y^2 = x^3 + (4h + 256) x^2 + h(4h + 256) x
//   h = 3:  y^2 = x^3 + 1/4 ((27h + 729) x + h(27h + 729)^2)^2
struct TwoIsogenyTildeModel {
    Rational a2, a4;
};
struct ThreeIsogenyTildeModel {
    Rational d, a, b;
};

inline TwoIsogenyTildeModel tilde_two_isogeny_model(const Rational& h) {
    Rational s = 4 * h + 256;
    if (h == 0 || s == 0) throw std::domain_error("singular model");
    return {s, h * s};
}

inline ThreeIsogenyTildeModel tilde_three_isogeny_model(const Rational& h) {
    Rational s = 27 * h + 729;
    if (h == 0 || s == 0) throw std::domain_error("singular model");
    return {rational(1, 4), s, h * s * s};
}

}  // namespace etamod
