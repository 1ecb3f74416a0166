#pragma once

// Elements a + b*sqrt(d) of a quadratic field, with rational a, b and a
// squarefree radicand d.  Constructors reduce the radicand (sqrt(8) becomes
// 2*sqrt(2)), so equality is plain field-by-field comparison.  A rational
// value is stored with b = 0, d = 1 and mixes freely with any radicand.

#include <string>

#include "etamod/rational.hpp"

namespace etamod {

class QuadraticNumber {
public:
    QuadraticNumber() : a_(0), b_(0), d_(1) {}
    QuadraticNumber(const Rational& a) : a_(a), b_(0), d_(1) {}  // NOLINT(google-explicit-constructor)
    QuadraticNumber(long a) : a_(a), b_(0), d_(1) {}             // NOLINT(google-explicit-constructor)

    QuadraticNumber(const Rational& a, const Rational& b, const Integer& d) : a_(a), b_(b), d_(d) {
        if (d_ == 0) throw std::domain_error("radicand must be nonzero");
        if (b_ == 0) { d_ = 1; return; }
        auto [s, core] = squarefree_decompose(d_);
        b_ *= Rational(s);
        d_ = core;
        if (d_ == 1) { a_ += b_; b_ = 0; }
    }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const Integer& d() const { return d_; }

    bool is_rational() const { return b_ == 0; }

    QuadraticNumber conjugate() const { return raw(a_, -b_, d_); }

    // a^2 - b^2 d, the product with the conjugate.
    Rational norm() const { return a_ * a_ - b_ * b_ * Rational(d_); }

    friend QuadraticNumber operator-(const QuadraticNumber& x) { return raw(-x.a_, -x.b_, x.d_); }

    friend QuadraticNumber operator+(const QuadraticNumber& x, const QuadraticNumber& y) {
        Integer d = merge_radicand(x, y);
        return raw(x.a_ + y.a_, x.b_ + y.b_, d);
    }
    friend QuadraticNumber operator-(const QuadraticNumber& x, const QuadraticNumber& y) {
        return x + (-y);
    }
    friend QuadraticNumber operator*(const QuadraticNumber& x, const QuadraticNumber& y) {
        Integer d = merge_radicand(x, y);
        return raw(x.a_ * y.a_ + x.b_ * y.b_ * Rational(d), x.a_ * y.b_ + x.b_ * y.a_, d);
    }
    friend QuadraticNumber operator/(const QuadraticNumber& x, const QuadraticNumber& y) {
        return x * y.inverse();
    }

    QuadraticNumber inverse() const {
        Rational n = norm();
        if (n == 0) throw std::domain_error("division by zero in quadratic field");
        return raw(a_ / n, -b_ / n, d_);
    }

    QuadraticNumber pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        QuadraticNumber result(Rational(1));
        QuadraticNumber base = *this;
        for (; e > 0; e >>= 1) {
            if (e & 1) result = result * base;
            base = base * base;
        }
        return result;
    }

    friend bool operator==(const QuadraticNumber& x, const QuadraticNumber& y) {
        if (x.a_ != y.a_ || x.b_ != y.b_) return false;
        return x.b_ == 0 || x.d_ == y.d_;
    }
    friend bool operator!=(const QuadraticNumber& x, const QuadraticNumber& y) { return !(x == y); }

    bool is_zero() const { return a_ == 0 && b_ == 0; }

    std::string str() const {
        if (b_ == 0) return to_string(a_);
        std::string s = to_string(a_) + (b_ < 0 ? "-" : "+");
        Rational ab = abs(b_);
        if (ab != 1) s += to_string(ab) + "*";
        return s + "sqrt(" + d_.get_str() + ")";
    }

private:
    static QuadraticNumber raw(Rational a, Rational b, Integer d) {
        QuadraticNumber q;
        q.a_ = std::move(a);
        q.b_ = std::move(b);
        q.d_ = (q.b_ == 0) ? Integer(1) : std::move(d);
        return q;
    }

    static Integer merge_radicand(const QuadraticNumber& x, const QuadraticNumber& y) {
        if (x.b_ == 0) return y.d_;
        if (y.b_ == 0) return x.d_;
        if (x.d_ != y.d_) throw std::domain_error("incompatible radicands");
        return x.d_;
    }

    Rational a_, b_;
    Integer d_;
};

inline Rational quad_norm(const QuadraticNumber& x) { return x.norm(); }

// sqrt of a positive rational written over its squarefree core:
// c = (s/den)^2 * d gives (s/den) * sqrt(d) with d squarefree.
inline QuadraticNumber sqrt_as_quadratic(const Rational& c) {
    if (c <= 0) throw std::domain_error("sqrt_as_quadratic requires a positive value");
    auto [s, d] = squarefree_decompose(c.get_num() * c.get_den());
    Rational b = rational(s, c.get_den());
    if (d == 1) return QuadraticNumber(b);
    return QuadraticNumber(Rational(0), b, d);
}

// sqrt of a rational inside Q(sqrt(d)): rational root, or (root) * sqrt(d).
inline std::optional<QuadraticNumber> sqrt_in_field(const Rational& c, const Integer& d) {
    if (c == 0) return QuadraticNumber(Rational(0));
    if (auto r = exact_sqrt(c)) return QuadraticNumber(*r);
    Rational scaled = c / Rational(d);
    if (auto r = exact_sqrt(scaled)) return QuadraticNumber(Rational(0), *r, d);
    return std::nullopt;
}

// General square root of z in its own field Q(sqrt(d)), when one exists.
inline std::optional<QuadraticNumber> sqrt_in_field(const QuadraticNumber& z) {
    if (z.is_rational()) {
        // Radicand of the ambient field is not recoverable from a rational
        // value alone; treat as a rational square test.
        if (auto r = exact_sqrt(z.a())) return QuadraticNumber(*r);
        return std::nullopt;
    }
    // (x + y sqrt(d))^2 = a + b sqrt(d) needs x^2 + d y^2 = a, 2xy = b.
    // Eliminating y gives 4x^4 - 4ax^2 + d b^2 = 0, so x^2 = (a ± sqrt(a^2 - d b^2))/2.
    auto root_norm = exact_sqrt(z.norm());
    if (!root_norm) return std::nullopt;
    for (int sign : {+1, -1}) {
        Rational x2 = (z.a() + Rational(sign) * (*root_norm)) / 2;
        auto x = exact_sqrt(x2);
        if (!x || *x == 0) continue;
        Rational y = z.b() / (Rational(2) * (*x));
        QuadraticNumber candidate(*x, y, z.d());
        if (candidate * candidate == z) return candidate;
    }
    return std::nullopt;
}

}  // namespace etamod
