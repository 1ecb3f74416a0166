#pragma once

// Recovery of modular functions as rational functions of a Hauptmodul h.
//
// Write H = 1/h, a series of valuation 1 in q, and let Q(H) be its
// compositional inverse, so q = Q(H).  Substituting q = Q(H) into the
// target's q-expansion gives a Laurent series J(H).  If the target equals
// num(h)/den(h) with both degrees <= n, then with Den_H(H) = sum_k q_k
// H^{n-k} the product J(H) * Den_H(H) is a polynomial in H of degree <= n.
// Imposing that every coefficient outside [0, n] vanishes is a linear
// system in (q_0, ..., q_n); a one-dimensional kernel determines den, and
// the surviving polynomial part gives num.

#include <optional>

#include "etamod/hauptmodul.hpp"
#include "etamod/linalg.hpp"
#include "etamod/polynomial.hpp"

namespace etamod {

struct RecoveryWorkspace {
    long level = 1;
    long prec = 0;
    TruncatedSeries h;       // Hauptmodul q-expansion, offset -1
    TruncatedSeries hInv;    // H = 1/h, valuation 1
    TruncatedSeries qOfH;    // Q with H(Q(x)) = x
};

inline RecoveryWorkspace make_workspace(const HauptmodulRecord& rec, long prec) {
    TruncatedSeries h = eta_product_series(rec.product, prec);
    if (h.offset() != -1 || h.coeffs().front() != 1)
        throw std::logic_error("workspace requires a normalized Hauptmodul series");
    TruncatedSeries hInv = series_inv(h);
    return RecoveryWorkspace{rec.level, prec, h, hInv, series_revert(hInv)};
}

// Evaluates an integer polynomial at a truncated series by Horner.
inline TruncatedSeries poly_eval_series(const IntPolynomial& p, const TruncatedSeries& x,
                                        long prec) {
    TruncatedSeries acc = TruncatedSeries::zero(prec);
    for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it)
        acc = acc * x + TruncatedSeries::constant(Rational(*it), prec);
    return acc;
}

// Cross-multiplied check target * den(h) = num(h) up to the precision the
// series allow.
inline bool verify_identity(const RationalFunction& f, const TruncatedSeries& h,
                            const TruncatedSeries& target) {
    long prec = std::min(h.prec(), target.prec());
    TruncatedSeries num = poly_eval_series(f.num(), h, prec);
    TruncatedSeries den = poly_eval_series(f.den(), h, prec);
    return series_agree(num, den * target);
}

namespace detail {

struct DegreeAttempt {
    std::optional<RationalFunction> result;  // set when the kernel is 1-dimensional
    long kernel_dim = 0;
};

// Attempts recovery at fixed denominator degree n.  Throws "precision
// exhausted" if the series cannot support degree n.
inline DegreeAttempt recover_at_degree(const TruncatedSeries& j_of_h, long n) {
    if (!is_integer(j_of_h.offset()))
        throw std::logic_error("composed series must be a Laurent series in H");
    long lo = static_cast<long>(to_integer(j_of_h.offset()).get_si());
    long hi = static_cast<long>(to_integer(j_of_h.abs_precision()).get_si());  // exclusive
    if (hi < 2 * n + 3) throw std::domain_error("precision exhausted");

    auto j_coeff = [&](long e) { return j_of_h.coeff_at(Rational(e)); };

    // One row per forbidden exponent e of J * Den_H; unknowns q_0..q_n.
    RationalMatrix rows;
    for (long e = std::min<long>(lo, 0); e < hi; ++e) {
        if (e >= 0 && e <= n) continue;
        RationalVector row(static_cast<size_t>(n) + 1);
        bool nonzero = false;
        for (long k = 0; k <= n; ++k) {
            row[static_cast<size_t>(k)] = j_coeff(e - (n - k));
            if (row[static_cast<size_t>(k)] != 0) nonzero = true;
        }
        if (nonzero) rows.push_back(std::move(row));
    }
    if (rows.empty()) rows.push_back(RationalVector(static_cast<size_t>(n) + 1, Rational(0)));

    RationalMatrix kernel = nullspace(rows);
    if (kernel.size() != 1) return DegreeAttempt{std::nullopt, static_cast<long>(kernel.size())};
    const RationalVector& q = kernel.front();

    // num(h) = sum_{e=0}^{n} NumH_e h^{n-e}, den(h) = sum_k q_k h^k.
    std::vector<Rational> num_c(static_cast<size_t>(n) + 1, Rational(0));
    std::vector<Rational> den_c(static_cast<size_t>(n) + 1, Rational(0));
    for (long e = 0; e <= n; ++e) {
        Rational acc(0);
        for (long k = 0; k <= n; ++k) acc += q[static_cast<size_t>(k)] * j_coeff(e - (n - k));
        num_c[static_cast<size_t>(n - e)] = acc;
    }
    for (long k = 0; k <= n; ++k) den_c[static_cast<size_t>(k)] = q[static_cast<size_t>(k)];

    Integer lcm_den = 1;
    for (const auto& v : num_c) lcm_den = lcm(lcm_den, v.get_den());
    for (const auto& v : den_c) lcm_den = lcm(lcm_den, v.get_den());
    std::vector<Integer> ni, di;
    for (const auto& v : num_c) ni.push_back(Integer(v * Rational(lcm_den)));
    for (const auto& v : den_c) di.push_back(Integer(v * Rational(lcm_den)));
    return DegreeAttempt{RationalFunction(IntPolynomial(std::move(ni)), IntPolynomial(std::move(di))),
                         1};
}

}  // namespace detail

// Expresses the target q-series as a rational function of the Hauptmodul.
// With a degree hint, only that denominator degree is tried; otherwise the
// degree is searched upward from 0 to max_degree, accepting the first
// candidate whose identity check passes.
inline RationalFunction express_in_hauptmodul(const TruncatedSeries& target,
                                              const RecoveryWorkspace& ws,
                                              std::optional<long> degree = std::nullopt,
                                              std::optional<long> max_degree = std::nullopt) {
    TruncatedSeries j_of_h = series_compose(target, ws.qOfH);
    long cap = max_degree.value_or(3 * psi(ws.level));
    long lo_deg = degree.value_or(0);
    long hi_deg = degree.value_or(cap);
    bool saw_excess_kernel = false;
    for (long n = lo_deg; n <= hi_deg; ++n) {
        auto attempt = detail::recover_at_degree(j_of_h, n);
        if (attempt.result && verify_identity(*attempt.result, ws.h, target))
            return *attempt.result;
        if (attempt.kernel_dim != 1) saw_excess_kernel |= attempt.kernel_dim > 1;
        if (degree) {
            if (attempt.kernel_dim != 1) throw std::domain_error("kernel dimension != 1");
            break;
        }
    }
    if (saw_excess_kernel) throw std::domain_error("kernel dimension != 1");
    throw std::domain_error("precision exhausted");
}

// The (n+2) x (n+2) moment matrix of the series sum a_i q^i with a_{-1}=1:
// row 0 is (1, a_0, ..., a_n); row i (1 <= i <= n+1) is (a_{i-1}, ..., a_{i+n}).
// Its kernel reproduces the denominator coefficients for targets with a
// simple pole at infinity; kept as an independent cross-check of the
// general algorithm.
inline RationalMatrix moment_matrix(const TruncatedSeries& target, long n) {
    if (target.offset() != -1 || target.coeffs().front() != 1)
        throw std::domain_error("moment matrix expects a series q^{-1} + O(1)");
    auto a = [&](long i) { return target.coeff_at(Rational(i)); };
    if (target.abs_precision() < Rational(2 * n + 2))
        throw std::domain_error("precision exhausted");
    RationalMatrix m;
    {
        RationalVector row(static_cast<size_t>(n) + 2);
        row[0] = 1;
        for (long j = 0; j <= n; ++j) row[static_cast<size_t>(j) + 1] = a(j);
        m.push_back(std::move(row));
    }
    for (long i = 1; i <= n + 1; ++i) {
        RationalVector row(static_cast<size_t>(n) + 2);
        for (long j = 0; j <= n + 1; ++j) row[static_cast<size_t>(j)] = a(i - 1 + j);
        m.push_back(std::move(row));
    }
    return m;
}

}  // namespace etamod
