#pragma once

// Elementary number-theoretic functions: factorization by trial division
// (all inputs here are desk-scale), Legendre symbols, Bernoulli numbers,
// and divisor sums.

#include <algorithm>
#include <map>
#include <mutex>
#include <vector>

#include "etamod/rational.hpp"

namespace etamod {

inline bool is_prime(const Integer& n) {
    if (n < 2) return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

// Prime factorization of |n|, n != 0, as (prime, exponent) pairs in
// increasing prime order.
inline std::vector<std::pair<Integer, unsigned long>> factorize(Integer n) {
    if (n == 0) throw std::domain_error("factorize(0)");
    n = abs(n);
    std::vector<std::pair<Integer, unsigned long>> out;
    for (Integer p = 2; p * p <= n; p = (p == 2) ? Integer(3) : p + 2) {
        if (n % p != 0) continue;
        unsigned long e = 0;
        while (n % p == 0) { n /= p; ++e; }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

inline std::vector<long> divisors(long n) {
    if (n < 1) throw std::domain_error("divisors requires n >= 1");
    std::vector<long> out;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        out.push_back(d);
        if (d != n / d) out.push_back(n / d);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline long euler_phi(long n) {
    long result = n;
    for (const auto& [p, e] : factorize(Integer(n))) {
        long pl = static_cast<long>(p.get_si());
        result -= result / pl;
    }
    return result;
}

// Standard Legendre symbol (a/p) for odd prime p; (a/p) = 0 when p | a.
inline int legendre_symbol(const Integer& a, const Integer& p) {
    if (p == 2 || p % 2 == 0) throw std::domain_error("legendre_symbol: p must be odd");
    if (!is_prime(p)) throw std::domain_error("legendre_symbol: p must be prime");
    return mpz_legendre(a.get_mpz_t(), p.get_mpz_t());
}

inline Integer binomial(unsigned long n, unsigned long k) {
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

// B_k for any k >= 0, by the convolution recurrence
// sum_{j=0}^{m} C(m+1, j) B_j = 0, memoized.  B_1 = -1/2.
inline Rational bernoulli_number(unsigned long k) {
    static std::map<unsigned long, Rational> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
    if (cache.empty()) cache[0] = Rational(1);
    for (unsigned long m = cache.rbegin()->first + 1; m <= k; ++m) {
        Rational sum(0);
        for (unsigned long j = 0; j < m; ++j) sum += Rational(binomial(m + 1, j)) * cache[j];
        cache[m] = -sum / Rational(binomial(m + 1, m));
    }
    return cache[k];
}

// Guarded variant used by the Eisenstein normalization: even k >= 2 only.
inline Rational bernoulli(long k) {
    if (k < 2 || k % 2 != 0) throw std::domain_error("bernoulli requires even k >= 2");
    return bernoulli_number(static_cast<unsigned long>(k));
}

// sigma_k(n) = sum over divisors d of n of d^k.
inline Integer divisor_sum(long n, unsigned long k) {
    if (n < 1) throw std::domain_error("divisor_sum requires n >= 1");
    Integer sum = 0;
    for (long d : divisors(n)) sum += pow_integer(Integer(d), k);
    return sum;
}

}  // namespace etamod
