#pragma once

// Exact rational arithmetic helpers on top of GMP's mpz/mpq classes.
// All quantities in the exact pipeline are mpq_class values reduced to
// lowest terms with positive denominator (GMP canonical form).

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace etamod {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational rational(long num, long den = 1) {
    if (den == 0) throw std::domain_error("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Parses "p", "-p", or "p/q".
inline Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            Integer n(text);
            return Rational(n);
        }
        Integer n(text.substr(0, slash));
        Integer d(text.substr(slash + 1));
        return rational(n, d);
    } catch (const std::invalid_argument&) {
        throw std::domain_error("malformed rational literal: " + text);
    }
}

inline std::string to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline Integer to_integer(const Rational& r) {
    if (!is_integer(r)) throw std::domain_error("not an integer: " + to_string(r));
    return r.get_num();
}

inline Integer pow_integer(const Integer& base, unsigned long e) {
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

inline Rational pow_rational(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    if (e < 0) {
        if (base == 0) throw std::domain_error("zero to negative power");
        return pow_rational(Rational(1) / base, -e);
    }
    return rational(pow_integer(base.get_num(), static_cast<unsigned long>(e)),
                    pow_integer(base.get_den(), static_cast<unsigned long>(e)));
}

inline bool is_perfect_square(const Integer& n) {
    if (n < 0) return false;
    return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

inline Integer isqrt(const Integer& n) {
    if (n < 0) throw std::domain_error("isqrt of negative");
    Integer out;
    mpz_sqrt(out.get_mpz_t(), n.get_mpz_t());
    return out;
}

// Nonnegative exact square root, if the rational is a perfect square.
inline std::optional<Rational> exact_sqrt(const Rational& r) {
    if (r < 0) return std::nullopt;
    if (!is_perfect_square(r.get_num()) || !is_perfect_square(r.get_den())) return std::nullopt;
    return rational(isqrt(r.get_num()), isqrt(r.get_den()));
}

// Writes n = s^2 * d with d squarefree (sign of n carried by d).  n != 0.
inline std::pair<Integer, Integer> squarefree_decompose(Integer n) {
    if (n == 0) throw std::domain_error("squarefree decomposition of zero");
    Integer s = 1;
    Integer d = (n < 0) ? Integer(-1) : Integer(1);
    Integer m = abs(n);
    for (Integer p = 2; p * p <= m; p = (p == 2) ? Integer(3) : p + 2) {
        if (m % p != 0) continue;
        unsigned long e = 0;
        while (m % p == 0) { m /= p; ++e; }
        for (unsigned long i = 0; i + 1 < e; i += 2) s *= p;
        if (e % 2 == 1) d *= p;
    }
    d *= m;  // remaining prime factor, multiplicity 1
    return {s, d};
}

}  // namespace etamod
