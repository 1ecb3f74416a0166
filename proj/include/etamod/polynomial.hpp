#pragma once

// Dense univariate polynomials with integer coefficients (low degree first)
// and rational functions in canonical form: num/den coprime over Q, joint
// integer content 1, positive leading coefficient on the denominator.

#include <vector>

#include "etamod/quadratic.hpp"
#include "etamod/rational.hpp"

namespace etamod {

struct IntPolynomial {
    std::vector<Integer> coeffs;  // empty == zero polynomial

    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Integer> c) : coeffs(std::move(c)) { trim(); }
    IntPolynomial(std::initializer_list<long> c) {
        for (long v : c) coeffs.emplace_back(v);
        trim();
    }

    void trim() {
        while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    }

    bool is_zero() const { return coeffs.empty(); }
    long degree() const { return static_cast<long>(coeffs.size()) - 1; }  // -1 for zero
    Integer coeff(long i) const {
        if (i < 0 || i >= static_cast<long>(coeffs.size())) return Integer(0);
        return coeffs[static_cast<size_t>(i)];
    }
    Integer leading() const { return is_zero() ? Integer(0) : coeffs.back(); }

    Integer content() const {
        Integer g = 0;
        for (const auto& c : coeffs) g = gcd(g, c);
        return g;
    }

    friend bool operator==(const IntPolynomial& p, const IntPolynomial& q) {
        return p.coeffs == q.coeffs;
    }

    friend IntPolynomial operator+(const IntPolynomial& p, const IntPolynomial& q) {
        std::vector<Integer> c(std::max(p.coeffs.size(), q.coeffs.size()), Integer(0));
        for (size_t i = 0; i < p.coeffs.size(); ++i) c[i] += p.coeffs[i];
        for (size_t i = 0; i < q.coeffs.size(); ++i) c[i] += q.coeffs[i];
        return IntPolynomial(std::move(c));
    }
    friend IntPolynomial operator-(const IntPolynomial& p, const IntPolynomial& q) {
        std::vector<Integer> c(std::max(p.coeffs.size(), q.coeffs.size()), Integer(0));
        for (size_t i = 0; i < p.coeffs.size(); ++i) c[i] += p.coeffs[i];
        for (size_t i = 0; i < q.coeffs.size(); ++i) c[i] -= q.coeffs[i];
        return IntPolynomial(std::move(c));
    }
    friend IntPolynomial operator*(const IntPolynomial& p, const IntPolynomial& q) {
        if (p.is_zero() || q.is_zero()) return {};
        std::vector<Integer> c(p.coeffs.size() + q.coeffs.size() - 1, Integer(0));
        for (size_t i = 0; i < p.coeffs.size(); ++i)
            for (size_t j = 0; j < q.coeffs.size(); ++j) c[i + j] += p.coeffs[i] * q.coeffs[j];
        return IntPolynomial(std::move(c));
    }
    friend IntPolynomial operator*(const Integer& s, const IntPolynomial& p) {
        std::vector<Integer> c = p.coeffs;
        for (auto& v : c) v *= s;
        return IntPolynomial(std::move(c));
    }

    IntPolynomial pow(unsigned long e) const {
        IntPolynomial result{1};
        IntPolynomial base = *this;
        for (; e > 0; e >>= 1) {
            if (e & 1) result = result * base;
            base = base * base;
        }
        return result;
    }

    // Horner evaluation over any field constructible from Rational.
    template <typename F>
    F eval(const F& x) const {
        F result{};
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
            result = result * x + F(Rational(*it));
        return result;
    }
};

// Internal: polynomials over Q, used for gcd and exact division.
struct RatPoly {
    std::vector<Rational> coeffs;

    explicit RatPoly(const IntPolynomial& p) {
        for (const auto& c : p.coeffs) coeffs.emplace_back(c);
    }
    RatPoly() = default;

    void trim() {
        while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    }
    bool is_zero() const { return coeffs.empty(); }
    long degree() const { return static_cast<long>(coeffs.size()) - 1; }

    // In-place remainder of *this modulo g (monic-scaled division).
    void reduce_mod(const RatPoly& g) {
        Rational lead = g.coeffs.back();
        while (degree() >= g.degree() && !is_zero()) {
            Rational factor = coeffs.back() / lead;
            size_t shift = coeffs.size() - g.coeffs.size();
            for (size_t i = 0; i < g.coeffs.size(); ++i)
                coeffs[shift + i] -= factor * g.coeffs[i];
            coeffs.pop_back();
            trim();
        }
    }
};

// Monic gcd over Q, returned as a primitive integer polynomial.
inline IntPolynomial poly_gcd(const IntPolynomial& p, const IntPolynomial& q) {
    RatPoly a(p), b(q);
    a.trim();
    b.trim();
    while (!b.is_zero()) {
        a.reduce_mod(b);
        std::swap(a, b);
    }
    if (a.is_zero()) return {};
    // Clear denominators, divide out content, make leading positive.
    Integer lcm_den = 1;
    for (const auto& c : a.coeffs) lcm_den = lcm(lcm_den, c.get_den());
    std::vector<Integer> c;
    for (const auto& v : a.coeffs) c.push_back(Integer(v * Rational(lcm_den)));
    IntPolynomial g{std::move(c)};
    Integer content = g.content();
    if (g.leading() < 0) content = -content;
    for (auto& v : g.coeffs) v /= content;
    return g;
}

// Exact quotient p / g; throws if the division is not exact over Q.
inline IntPolynomial poly_exact_div(const IntPolynomial& p, const IntPolynomial& g) {
    if (g.is_zero()) throw std::domain_error("division by zero polynomial");
    if (p.is_zero()) return {};
    RatPoly a(p);
    std::vector<Rational> quot(static_cast<size_t>(std::max<long>(0, p.degree() - g.degree() + 1)),
                               Rational(0));
    Rational lead(g.leading());
    while (a.degree() >= g.degree() && !a.is_zero()) {
        Rational factor = a.coeffs.back() / lead;
        size_t shift = a.coeffs.size() - g.coeffs.size() - 0;
        quot[a.coeffs.size() - g.coeffs.size()] = factor;
        for (size_t i = 0; i < g.coeffs.size(); ++i)
            a.coeffs[shift + i] -= factor * Rational(g.coeffs[i]);
        a.coeffs.pop_back();
        a.trim();
    }
    if (!a.is_zero()) throw std::domain_error("inexact polynomial division");
    std::vector<Integer> c;
    for (const auto& v : quot) {
        if (!is_integer(v)) throw std::domain_error("inexact polynomial division");
        c.push_back(v.get_num());
    }
    return IntPolynomial(std::move(c));
}

// Remainder of p modulo g over Q (not normalized to integers).
inline bool poly_divides(const IntPolynomial& g, const IntPolynomial& p) {
    if (g.is_zero()) return p.is_zero();
    RatPoly a(p);
    RatPoly b(g);
    a.trim();
    b.trim();
    a.reduce_mod(b);
    return a.is_zero();
}

class RationalFunction {
public:
    RationalFunction() : num_{}, den_{1} {}
    RationalFunction(IntPolynomial num, IntPolynomial den) : num_(std::move(num)), den_(std::move(den)) {
        canonicalize();
    }
    static RationalFunction constant(const Rational& c) {
        return RationalFunction(IntPolynomial{std::vector<Integer>{c.get_num()}},
                                IntPolynomial{std::vector<Integer>{c.get_den()}});
    }

    const IntPolynomial& num() const { return num_; }
    const IntPolynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }

    friend bool operator==(const RationalFunction& f, const RationalFunction& g) {
        return f.num_ == g.num_ && f.den_ == g.den_;
    }

    friend RationalFunction operator+(const RationalFunction& f, const RationalFunction& g) {
        return RationalFunction(f.num_ * g.den_ + g.num_ * f.den_, f.den_ * g.den_);
    }
    friend RationalFunction operator-(const RationalFunction& f, const RationalFunction& g) {
        return RationalFunction(f.num_ * g.den_ - g.num_ * f.den_, f.den_ * g.den_);
    }
    friend RationalFunction operator*(const RationalFunction& f, const RationalFunction& g) {
        return RationalFunction(f.num_ * g.num_, f.den_ * g.den_);
    }
    friend RationalFunction operator/(const RationalFunction& f, const RationalFunction& g) {
        if (g.is_zero()) throw std::domain_error("division by zero rational function");
        return RationalFunction(f.num_ * g.den_, f.den_ * g.num_);
    }

    RationalFunction pow(long e) const {
        if (e < 0) return (RationalFunction::constant(Rational(1)) / *this).pow(-e);
        RationalFunction r = constant(Rational(1));
        RationalFunction base = *this;
        for (; e > 0; e >>= 1) {
            if (e & 1) r = r * base;
            base = base * base;
        }
        return r;
    }

    template <typename F>
    F eval(const F& x) const {
        F d = den_.eval(x);
        if (d == F(Rational(0))) throw std::domain_error("evaluation at pole");
        return num_.eval(x) / d;
    }

    // Substitutes h -> kappa / h.
    RationalFunction fricke_substitute(const Rational& kappa) const {
        long n = std::max(num_.degree(), den_.degree());
        auto lift = [&](const IntPolynomial& p) {
            // p(kappa/h) * h^n, with denominators cleared afterwards.
            std::vector<Rational> c(static_cast<size_t>(n) + 1, Rational(0));
            for (long k = 0; k <= p.degree(); ++k)
                c[static_cast<size_t>(n - k)] = Rational(p.coeff(k)) * pow_rational(kappa, k);
            return c;
        };
        auto cn = lift(num_);
        auto cd = lift(den_);
        Integer lcm_den = 1;
        for (const auto& v : cn) lcm_den = lcm(lcm_den, v.get_den());
        for (const auto& v : cd) lcm_den = lcm(lcm_den, v.get_den());
        std::vector<Integer> in, id;
        for (const auto& v : cn) in.push_back(Integer(v * Rational(lcm_den)));
        for (const auto& v : cd) id.push_back(Integer(v * Rational(lcm_den)));
        return RationalFunction(IntPolynomial(std::move(in)), IntPolynomial(std::move(id)));
    }

private:
    void canonicalize() {
        if (den_.is_zero()) throw std::domain_error("zero denominator polynomial");
        if (num_.is_zero()) {
            den_ = IntPolynomial{1};
            return;
        }
        IntPolynomial g = poly_gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = poly_exact_div(num_, g);
            den_ = poly_exact_div(den_, g);
        }
        Integer content = gcd(num_.content(), den_.content());
        if (den_.leading() < 0) content = -content;
        for (auto& c : num_.coeffs) c /= content;
        for (auto& c : den_.coeffs) c /= content;
    }

    IntPolynomial num_, den_;
};

inline std::string to_string(const IntPolynomial& p, const std::string& var = "h") {
    if (p.is_zero()) return "0";
    std::string s;
    for (long i = p.degree(); i >= 0; --i) {
        Integer c = p.coeff(i);
        if (c == 0) continue;
        if (!s.empty()) s += (c > 0) ? " + " : " - ";
        else if (c < 0) s += "-";
        Integer a = abs(c);
        if (a != 1 || i == 0) s += a.get_str();
        if (i > 0) {
            if (a != 1) s += "*";
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

inline std::string to_string(const RationalFunction& f, const std::string& var = "h") {
    return "(" + to_string(f.num(), var) + ")/(" + to_string(f.den(), var) + ")";
}

}  // namespace etamod
