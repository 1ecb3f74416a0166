#pragma once

// Arithmetic invariants of X_0(N): covering degree psi(N), elliptic point
// counts, cusp data, genus, and vanishing orders of eta products at cusps.

#include <numeric>

#include "etamod/etaforms.hpp"
#include "etamod/numbertheory.hpp"

namespace etamod {

struct LevelInvariants {
    long level = 1;
    long degree = 1;  // psi(N)
    long eps2 = 1;
    long eps3 = 1;
    long epsInf = 1;
    long genus = 0;
};

struct CuspDatum {
    long denominator = 1;   // divisor d of N, cusp representative 1/d
    long widthScale = 1;    // (N/d) * gcd(d, N/d)
    long multiplicity = 1;  // phi(gcd(d, N/d)) cusps share this denominator
};

inline long psi(long N) {
    if (N < 1) throw std::domain_error("psi requires N >= 1");
    Rational value(N);
    for (const auto& [p, e] : factorize(Integer(N))) {
        (void)e;
        value *= rational(Integer(p + 1), p);
    }
    return static_cast<long>(to_integer(value).get_si());
}

inline LevelInvariants level_invariants(long N) {
    if (N < 1) throw std::domain_error("level must be >= 1");
    LevelInvariants inv;
    inv.level = N;
    inv.degree = psi(N);

    // The p = 2 factors follow the usual convention: (-1/2) contributes 0
    // and (-3/2) contributes -1 (2 is inert mod 3); (-3/3) is 0.
    auto sym_m1 = [](const Integer& p) -> long { return p == 2 ? 0 : legendre_symbol(Integer(-1), p); };
    auto sym_m3 = [](const Integer& p) -> long {
        if (p == 2) return -1;
        return legendre_symbol(Integer(-3), p);
    };
    inv.eps2 = 1;
    inv.eps3 = 1;
    for (const auto& [p, e] : factorize(Integer(N))) {
        (void)e;
        inv.eps2 *= 1 + sym_m1(p);
        inv.eps3 *= 1 + sym_m3(p);
    }
    if (N % 4 == 0) inv.eps2 = 0;
    if (N % 9 == 0) inv.eps3 = 0;

    inv.epsInf = 0;
    for (long d : divisors(N)) inv.epsInf += euler_phi(std::gcd(d, N / d));

    Rational g = Rational(1) + rational(inv.degree, 12) - rational(inv.eps2, 4) -
                 rational(inv.eps3, 3) - rational(inv.epsInf, 2);
    if (!is_integer(g)) throw std::logic_error("genus formula gave a non-integer");
    inv.genus = static_cast<long>(to_integer(g).get_si());
    return inv;
}

inline long genus(long N) { return level_invariants(N).genus; }

inline std::vector<CuspDatum> cusp_data(long N) {
    std::vector<CuspDatum> out;
    for (long d : divisors(N)) {
        long g = std::gcd(d, N / d);
        out.push_back({d, (N / d) * g, euler_phi(g)});
    }
    return out;
}

// The 15 genus-zero levels; recomputed from the genus formula and checked
// against the search bound 1000 (no larger level qualifies).
inline const std::vector<long>& genus0_levels() {
    static const std::vector<long> levels = [] {
        std::vector<long> out;
        for (long n = 1; n <= 25; ++n)
            if (genus(n) == 0) out.push_back(n);
        for (long n = 26; n <= 1000; ++n)
            if (genus(n) == 0) throw std::logic_error("unexpected genus-0 level above 25");
        return out;
    }();
    return levels;
}

inline bool is_genus0_level(long N) {
    const auto& g0 = genus0_levels();
    return std::find(g0.begin(), g0.end(), N) != g0.end();
}

// Scaled vanishing order of an eta product at the cusp with denominator d:
// (N/d)(d, N/d) * sum_delta r_delta (delta, d)^2 / (24 delta).
// Equals -1 at infinity (d = N) and +1 at zero (d = 1) for a Hauptmodul.
inline Rational eta_order_condition(const EtaProduct& p, long d) {
    long N = p.level;
    if (d < 1 || N % d != 0) throw std::domain_error("d must divide the level");
    Rational sum(0);
    for (long delta : divisors(N)) {
        long g = std::gcd(delta, d);
        sum += Rational(p.exponent(delta)) * rational(g * g, 24 * delta);
    }
    return Rational((N / d) * std::gcd(d, N / d)) * sum;
}

}  // namespace etamod
