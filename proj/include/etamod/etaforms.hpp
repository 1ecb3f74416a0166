#pragma once

// q-expansions of eta, eta products, Eisenstein series, E2^(N), and j,
// plus double-precision evaluation on the upper half-plane used to check
// functional equations.  The floating-point routines are diagnostics only;
// nothing exact depends on them.

#include <cmath>
#include <complex>
#include <map>

#include "etamod/numbertheory.hpp"
#include "etamod/series.hpp"

namespace etamod {

// Divisor delta -> exponent r_delta of an eta product of the given level.
struct EtaProduct {
    long level = 1;
    std::map<long, long> exponents;

    EtaProduct() = default;
    EtaProduct(long n, std::map<long, long> exps) : level(n), exponents(std::move(exps)) {
        for (const auto& [delta, r] : exponents) {
            (void)r;
            if (delta < 1 || level % delta != 0)
                throw std::domain_error("eta product key must divide the level");
        }
    }

    long exponent(long delta) const {
        auto it = exponents.find(delta);
        return it == exponents.end() ? 0 : it->second;
    }

    friend bool operator==(const EtaProduct& a, const EtaProduct& b) {
        if (a.level != b.level) return false;
        for (long d : divisors(a.level))
            if (a.exponent(d) != b.exponent(d)) return false;
        return true;
    }
};

struct HalfPlanePoint {
    double re = 0.0;
    double im = 1.0;
    HalfPlanePoint(double r, double i) : re(r), im(i) {
        if (!(im > 0)) throw std::domain_error("point must lie in the upper half-plane");
    }
    std::complex<double> tau() const { return {re, im}; }
};

// q^{1/24} prod (1 - q^n), coefficients by the pentagonal number theorem:
// the coefficient of q^{k(3k-1)/2} (k ranging over Z) is (-1)^k.
inline TruncatedSeries eta_series(long prec) {
    if (prec < 1) throw std::domain_error("prec must be >= 1");
    std::vector<Rational> c(static_cast<size_t>(prec), Rational(0));
    c[0] = 1;
    for (long k = 1;; ++k) {
        long g1 = k * (3 * k - 1) / 2;
        long g2 = k * (3 * k + 1) / 2;
        if (g1 >= prec && g2 >= prec) break;
        long sign = (k % 2 == 0) ? 1 : -1;
        if (g1 < prec) c[static_cast<size_t>(g1)] += sign;
        if (g2 < prec) c[static_cast<size_t>(g2)] += sign;
    }
    return TruncatedSeries(rational(1, 24), std::move(c));
}

// Substitutes q -> q^k.  Exact: intermediate coefficients interleave with
// zeros and the absolute precision scales by k.
inline TruncatedSeries substitute_q_power(const TruncatedSeries& a, long k) {
    if (k < 1) throw std::domain_error("substitution power must be >= 1");
    if (k == 1) return a;
    long n = (a.prec() - 1) * k + 1;
    std::vector<Rational> c(static_cast<size_t>(n), Rational(0));
    for (long i = 0; i < a.prec(); ++i) c[static_cast<size_t>(i * k)] = a.coeffs()[static_cast<size_t>(i)];
    return TruncatedSeries(a.offset() * k, std::move(c));
}

inline TruncatedSeries eta_product_series(const EtaProduct& p, long prec) {
    TruncatedSeries result = TruncatedSeries::constant(Rational(1), prec);
    TruncatedSeries base = eta_series(prec);
    for (const auto& [delta, r] : p.exponents) {
        if (r == 0) continue;
        result = result * series_pow_int(substitute_q_power(base, delta).truncate(prec), r);
    }
    return result;
}

// 1 - (2k/B_k) sum sigma_{k-1}(n) q^n.
inline TruncatedSeries eisenstein_series(long k, long prec) {
    if (k < 4 || k % 2 != 0) throw std::domain_error("eisenstein_series requires even k >= 4");
    Rational factor = Rational(-2 * k) / bernoulli(k);
    std::vector<Rational> c(static_cast<size_t>(prec), Rational(0));
    c[0] = 1;
    for (long n = 1; n < prec; ++n)
        c[static_cast<size_t>(n)] = factor * Rational(divisor_sum(n, static_cast<unsigned long>(k - 1)));
    return TruncatedSeries(Rational(0), std::move(c));
}

// (N-1)/24 + sum sigma_1(n) (q^n - N q^{Nn}).
inline TruncatedSeries e2N_series(long N, long prec) {
    if (N < 2) throw std::domain_error("e2N_series requires N >= 2");
    std::vector<Rational> c(static_cast<size_t>(prec), Rational(0));
    c[0] = rational(N - 1, 24);
    for (long n = 1; n < prec; ++n) {
        c[static_cast<size_t>(n)] += Rational(divisor_sum(n, 1));
        if (n % N == 0) c[static_cast<size_t>(n)] -= Rational(N) * Rational(divisor_sum(n / N, 1));
    }
    return TruncatedSeries(Rational(0), std::move(c));
}

// j = 1728 E4^3 / (E4^3 - E6^2) = q^{-1} + 744 + 196884 q + ...
inline TruncatedSeries j_series(long prec) {
    long work = prec + 2;  // the denominator loses its constant term
    TruncatedSeries e4 = eisenstein_series(4, work);
    TruncatedSeries e6 = eisenstein_series(6, work);
    TruncatedSeries e4cubed = e4 * e4 * e4;
    TruncatedSeries disc = e4cubed - e6 * e6;
    TruncatedSeries j = Rational(1728) * (e4cubed * series_inv(disc));
    return j.truncate(prec);
}

// ---- floating-point diagnostics ----------------------------------------

inline std::complex<double> eval_eta(const HalfPlanePoint& tau) {
    const std::complex<double> I(0.0, 1.0);
    std::complex<double> t = tau.tau();
    std::complex<double> q = std::exp(2.0 * M_PI * I * t);
    std::complex<double> prefactor = std::exp(M_PI * I * t / 12.0);
    std::complex<double> product = 1.0;
    std::complex<double> qn = 1.0;
    for (int n = 1; n < 4000; ++n) {
        qn *= q;
        product *= (1.0 - qn);
        if (std::abs(qn) < 1e-17) break;
    }
    return prefactor * product;
}

inline std::complex<double> eval_eta_product(const EtaProduct& p, const HalfPlanePoint& tau) {
    std::complex<double> result = 1.0;
    for (const auto& [delta, r] : p.exponents) {
        if (r == 0) continue;
        std::complex<double> v =
            eval_eta(HalfPlanePoint(tau.re * static_cast<double>(delta), tau.im * static_cast<double>(delta)));
        result *= std::pow(v, static_cast<double>(r));
    }
    return result;
}

// Numeric sum of a truncated series at tau, including the q^offset factor.
inline std::complex<double> eval_series(const TruncatedSeries& s, const HalfPlanePoint& tau) {
    const std::complex<double> I(0.0, 1.0);
    std::complex<double> q = std::exp(2.0 * M_PI * I * tau.tau());
    std::complex<double> acc = 0.0;
    std::complex<double> qi = 1.0;
    for (long i = 0; i < s.prec(); ++i) {
        acc += s.coeffs()[static_cast<size_t>(i)].get_d() * qi;
        qi *= q;
    }
    return acc * std::pow(q, s.offset().get_d());
}

struct FunctionalEquationReport {
    double nu_residual = 0.0;      // |nu(-1/Nt) * sqrt(N) * nu(t) - 1|
    double e2_residual = 0.0;      // |E2N(-1/Nt) + N t^2 E2N(t)|
    double fricke_residual = 0.0;  // |h(-1/Nt) * h(t) - kappa|
    bool within(double tol) const {
        return nu_residual < tol && e2_residual < tol && fricke_residual < tol;
    }
};

inline HalfPlanePoint fricke_image(long N, const HalfPlanePoint& tau) {
    std::complex<double> w = -1.0 / (static_cast<double>(N) * tau.tau());
    return HalfPlanePoint(w.real(), w.imag());
}

// Residuals of the three Fricke functional equations at a generic tau.
// The eta-product and kappa inputs describe the level's Hauptmodul.
inline FunctionalEquationReport check_functional_equations(const EtaProduct& haupt,
                                                           const Rational& kappa,
                                                           const HalfPlanePoint& tau) {
    long N = haupt.level;
    HalfPlanePoint w = fricke_image(N, tau);
    auto nu = [&](const HalfPlanePoint& t) {
        return eval_eta(HalfPlanePoint(t.re * static_cast<double>(N), t.im * static_cast<double>(N))) /
               eval_eta(t);
    };
    FunctionalEquationReport report;
    report.nu_residual = std::abs(nu(w) * std::sqrt(static_cast<double>(N)) * nu(tau) - 1.0);

    // E2^(N) series converges quickly for im >= ~0.2; 600 terms is ample.
    TruncatedSeries e2 = e2N_series(N, 600);
    std::complex<double> t = tau.tau();
    report.e2_residual =
        std::abs(eval_series(e2, w) + static_cast<double>(N) * t * t * eval_series(e2, tau));

    std::complex<double> h_tau = eval_eta_product(haupt, tau);
    std::complex<double> h_w = eval_eta_product(haupt, w);
    report.fricke_residual = std::abs(h_w * h_tau - kappa.get_d());
    return report;
}

}  // namespace etamod
