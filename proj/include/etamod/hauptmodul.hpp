#pragma once

// Derivation of eta-product Hauptmoduln for the genus-zero curves X_0(N),
// N >= 2.  The exponent vector (r_delta) is pinned down by linear
// conditions: vanishing orders -1 at infinity and +1 at zero, total weight
// zero, and vanishing order zero at every other cusp.  The Fricke constant
// kappa with h(-1/(N tau)) = kappa / h(tau) is prod (N/delta)^{r_delta/2}.

#include <optional>

#include "etamod/etaforms.hpp"
#include "etamod/levels.hpp"
#include "etamod/linalg.hpp"
#include "etamod/quadratic.hpp"

namespace etamod {

struct HauptmodulRecord {
    long level = 1;
    EtaProduct product;
    Rational kappa = Rational(1);
    QuadraticNumber kappaSqrt;  // +sqrt(kappa); rational when kappa is a square
    bool verified = false;
};

// Solves the linear conditions for the exponent vector of the Hauptmodul
// eta product at level N.  Throws if N is not a genus-zero level >= 2 or
// the system has no unique integer solution.
inline EtaProduct solve_hauptmodul_exponents(long N) {
    if (N < 2) throw std::domain_error("eta-product Hauptmodul requires level >= 2");
    if (!is_genus0_level(N)) throw std::domain_error("level is not genus zero");

    std::vector<long> divs = divisors(N);
    size_t k = divs.size();
    RationalMatrix a;
    RationalVector b;

    // Order -1 at the cusp infinity: sum r_delta * delta = -24.
    {
        RationalVector row(k);
        for (size_t i = 0; i < k; ++i) row[i] = Rational(divs[i]);
        a.push_back(std::move(row));
        b.emplace_back(-24);
    }
    // Order +1 at the cusp zero: sum r_delta * (N/delta) = 24.
    {
        RationalVector row(k);
        for (size_t i = 0; i < k; ++i) row[i] = Rational(N / divs[i]);
        a.push_back(std::move(row));
        b.emplace_back(24);
    }
    // Weight zero: sum r_delta = 0.
    {
        RationalVector row(k, Rational(1));
        a.push_back(std::move(row));
        b.emplace_back(0);
    }
    // Order zero at every interior cusp 1/d, d | N, d not in {1, N}.
    for (long d : divs) {
        if (d == 1 || d == N) continue;
        RationalVector row(k);
        Rational scale((N / d) * std::gcd(d, N / d));
        for (size_t i = 0; i < k; ++i) {
            long g = std::gcd(divs[i], d);
            row[i] = scale * rational(g * g, 24 * divs[i]);
        }
        a.push_back(std::move(row));
        b.emplace_back(0);
    }

    auto x = solve_unique(a, b);
    if (!x) throw std::logic_error("Hauptmodul exponent system is not uniquely solvable");
    std::map<long, long> exps;
    for (size_t i = 0; i < k; ++i) {
        if (!is_integer((*x)[i]))
            throw std::logic_error("Hauptmodul exponents are not integers");
        long r = static_cast<long>(to_integer((*x)[i]).get_si());
        if (r != 0) exps[divs[i]] = r;
    }
    return EtaProduct(N, std::move(exps));
}

// kappa = prod_{delta | N} (N/delta)^{r_delta / 2}, computed by halving
// accumulated prime exponents; throws if any total exponent is odd.
inline Rational fricke_constant(const EtaProduct& p) {
    long N = p.level;
    std::map<Integer, long> exponent_of;
    for (long delta : divisors(N)) {
        long r = p.exponent(delta);
        if (r == 0 || N / delta == 1) continue;
        for (const auto& [q, e] : factorize(Integer(N / delta)))
            exponent_of[q] += r * static_cast<long>(e);
    }
    Rational kappa(1);
    for (const auto& [q, e] : exponent_of) {
        if (e % 2 != 0) throw std::logic_error("kappa not rational");
        kappa *= pow_rational(Rational(q), e / 2);
    }
    return kappa;
}

// Checks that the eta product expands as q^{-1} + O(1) with leading
// coefficient 1 to the requested precision.
inline bool verify_hauptmodul(const EtaProduct& p, long prec) {
    TruncatedSeries h = eta_product_series(p, prec);
    return h.offset() == -1 && h.coeffs().front() == 1;
}

// Default working precision for level-N series work.
inline long default_precision(long N) { return 2 * psi(N) + 12; }

inline HauptmodulRecord solve_record(long N) {
    HauptmodulRecord rec;
    rec.level = N;
    rec.product = solve_hauptmodul_exponents(N);
    rec.kappa = fricke_constant(rec.product);
    rec.kappaSqrt = sqrt_as_quadratic(rec.kappa);
    rec.verified = verify_hauptmodul(rec.product, default_precision(N));
    if (!rec.verified) throw std::logic_error("Hauptmodul failed expansion check");
    return rec;
}

}  // namespace etamod
