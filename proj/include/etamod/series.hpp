#pragma once

// Truncated Laurent series in q with exact rational coefficients.
//
// A series is q^offset * (c_0 + c_1 q + ... + c_{prec-1} q^{prec-1}).
// The offset is a rational whose only fractional source is the q^{1/24}
// prefactor of eta, so it is always a multiple of 1/24.  Precision is the
// number of retained coefficients; binary operations return the minimum
// meaningful precision and never silently extend it.

#include <functional>
#include <vector>

#include "etamod/rational.hpp"

namespace etamod {

class TruncatedSeries {
public:
    TruncatedSeries(Rational offset, std::vector<Rational> coeffs)
        : offset_(std::move(offset)), coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) throw std::domain_error("series needs prec >= 1");
        check_offset(offset_);
        normalize();
    }

    static TruncatedSeries constant(const Rational& c, long prec) {
        std::vector<Rational> v(static_cast<size_t>(prec), Rational(0));
        v[0] = c;
        return TruncatedSeries(Rational(0), std::move(v));
    }
    static TruncatedSeries zero(long prec) { return constant(Rational(0), prec); }
    // q^e with the given relative precision.
    static TruncatedSeries monomial(const Rational& e, long prec) {
        std::vector<Rational> v(static_cast<size_t>(prec), Rational(0));
        v[0] = 1;
        return TruncatedSeries(e, std::move(v));
    }

    const Rational& offset() const { return offset_; }
    long prec() const { return static_cast<long>(coeffs_.size()); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    // Coefficient of q^e (e measured absolutely, not relative to offset).
    Rational coeff_at(const Rational& e) const {
        Rational rel = e - offset_;
        if (!is_integer(rel)) return Rational(0);
        Integer i = to_integer(rel);
        if (i < 0 || i >= prec()) return Rational(0);
        return coeffs_[i.get_ui()];
    }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (c != 0) return false;
        return true;
    }

    // Exponent below which every coefficient is known.
    Rational abs_precision() const { return offset_ + Rational(prec()); }

    // Valuation of a nonzero normalized series.
    Rational valuation() const {
        for (long i = 0; i < prec(); ++i)
            if (coeffs_[static_cast<size_t>(i)] != 0) return offset_ + i;
        throw std::domain_error("valuation of zero series");
    }

    TruncatedSeries truncate(long new_prec) const {
        if (new_prec < 1) throw std::domain_error("prec must be >= 1");
        if (new_prec >= prec()) return *this;
        return TruncatedSeries(
            offset_, std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + new_prec));
    }

    friend TruncatedSeries operator-(const TruncatedSeries& a) {
        std::vector<Rational> c = a.coeffs_;
        for (auto& v : c) v = -v;
        return TruncatedSeries(a.offset_, std::move(c));
    }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        if (a.is_zero()) return align_zero_sum(b, a);
        if (b.is_zero()) return align_zero_sum(a, b);
        Rational shift = b.offset_ - a.offset_;
        if (!is_integer(shift))
            throw std::domain_error("incompatible fractional offsets in series sum");
        Rational lo = std::min(a.offset_, b.offset_);
        Rational hi = std::min(a.abs_precision(), b.abs_precision());
        long n = static_cast<long>(to_integer(hi - lo).get_si());
        if (n < 1) throw std::domain_error("no overlapping precision in series sum");
        std::vector<Rational> c(static_cast<size_t>(n), Rational(0));
        auto add_in = [&](const TruncatedSeries& s) {
            long base = static_cast<long>(to_integer(s.offset_ - lo).get_si());
            for (long i = 0; i < s.prec() && base + i < n; ++i)
                c[static_cast<size_t>(base + i)] += s.coeffs_[static_cast<size_t>(i)];
        };
        add_in(a);
        add_in(b);
        return TruncatedSeries(lo, std::move(c));
    }
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a + (-b);
    }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        long n = std::min(a.prec(), b.prec());
        std::vector<Rational> c(static_cast<size_t>(n), Rational(0));
        for (long i = 0; i < std::min<long>(a.prec(), n); ++i) {
            const Rational& ai = a.coeffs_[static_cast<size_t>(i)];
            if (ai == 0) continue;
            for (long j = 0; i + j < n && j < b.prec(); ++j)
                c[static_cast<size_t>(i + j)] += ai * b.coeffs_[static_cast<size_t>(j)];
        }
        return TruncatedSeries(a.offset_ + b.offset_, std::move(c));
    }
    friend TruncatedSeries operator*(const Rational& s, const TruncatedSeries& a) {
        std::vector<Rational> c = a.coeffs_;
        for (auto& v : c) v *= s;
        return TruncatedSeries(a.offset_, std::move(c));
    }

private:
    // Sum with a zero series: keep the nonzero operand, capped at the
    // common absolute precision when representable.
    static TruncatedSeries align_zero_sum(const TruncatedSeries& keep, const TruncatedSeries& z) {
        Rational hi = std::min(keep.abs_precision(), z.abs_precision());
        Rational n = hi - keep.offset_;
        if (!is_integer(n) || to_integer(n) < 1) return keep;
        long cap = static_cast<long>(to_integer(n).get_si());
        return keep.truncate(std::min<long>(cap, keep.prec()));
    }

    static void check_offset(const Rational& off) {
        if (Rational(off * 24).get_den() != 1)
            throw std::domain_error("series offset must be a multiple of 1/24");
    }

    // Fold leading zero coefficients into the offset (integer steps).
    // All-zero series are left untouched so their precision survives.
    void normalize() {
        if (is_zero()) return;
        size_t lead = 0;
        while (coeffs_[lead] == 0) ++lead;
        if (lead > 0) {
            coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
            offset_ += Rational(static_cast<long>(lead));
        }
    }

    Rational offset_;
    std::vector<Rational> coeffs_;
};

inline TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a * b;
}

inline TruncatedSeries series_inv(const TruncatedSeries& a) {
    if (a.coeffs().front() == 0) throw std::domain_error("non-invertible series");
    long n = a.prec();
    const auto& c = a.coeffs();
    std::vector<Rational> inv(static_cast<size_t>(n), Rational(0));
    inv[0] = Rational(1) / c[0];
    for (long k = 1; k < n; ++k) {
        Rational acc(0);
        for (long i = 1; i <= k; ++i) acc += c[static_cast<size_t>(i)] * inv[static_cast<size_t>(k - i)];
        inv[static_cast<size_t>(k)] = -acc / c[0];
    }
    return TruncatedSeries(-a.offset(), std::move(inv));
}

inline TruncatedSeries series_pow_int(const TruncatedSeries& a, long e) {
    if (e == 0) return TruncatedSeries::constant(Rational(1), a.prec());
    if (e < 0) return series_pow_int(series_inv(a), -e);
    TruncatedSeries result = TruncatedSeries::constant(Rational(1), a.prec());
    TruncatedSeries base = a;
    for (; e > 0; e >>= 1) {
        if (e & 1) result = result * base;
        if (e > 1) base = base * base;
    }
    return result;
}

// Formal substitution outer(inner).  The inner series must have integer
// valuation >= 1; the outer offset must be an integer (Laurent allowed, in
// which case negative powers of the inner series are taken).
inline TruncatedSeries series_compose(const TruncatedSeries& outer, const TruncatedSeries& inner) {
    if (!is_integer(outer.offset()))
        throw std::domain_error("composition requires integer outer offset");
    if (inner.is_zero() || !is_integer(inner.offset()) || inner.offset() < 1 ||
        inner.coeffs().front() == 0)
        throw std::domain_error("composition undefined");
    long m = static_cast<long>(to_integer(outer.offset()).get_si());
    long v = static_cast<long>(to_integer(inner.offset()).get_si());
    long p_in = inner.prec();
    long p_out = outer.prec();
    // inner^k is known mod q^{kv + p_in}; the outer truncation contributes
    // terms from q^{(m + p_out) v} on.
    long result_prec = std::min<long>(p_in, p_out * v);
    if (result_prec < 1) throw std::domain_error("composition out of precision");
    TruncatedSeries acc = TruncatedSeries::zero(result_prec);
    acc = TruncatedSeries(Rational(static_cast<long>(m) * v), acc.coeffs());
    TruncatedSeries power = series_pow_int(inner, m);
    for (long i = 0; i < p_out; ++i) {
        const Rational& c = outer.coeffs()[static_cast<size_t>(i)];
        if (c != 0) acc = acc + (c * power).truncate(result_prec);
        if (i + 1 < p_out) power = power * inner;
    }
    return acc.truncate(std::min<long>(result_prec, acc.prec()));
}

// Compositional inverse: returns Q with compose(a, Q) = q + O(q^prec).
// Requires valuation exactly 1.  Newton iteration on F(Q) = a(Q) - id.
inline TruncatedSeries series_revert(const TruncatedSeries& a) {
    if (a.is_zero() || a.offset() != 1 || a.coeffs().front() == 0)
        throw std::domain_error("reversion requires valuation 1");
    long p = a.prec();
    const Rational& c1 = a.coeffs().front();
    TruncatedSeries identity = TruncatedSeries::monomial(Rational(1), p);
    // Derivative of a with respect to q.
    std::vector<Rational> dc(static_cast<size_t>(p), Rational(0));
    for (long i = 0; i < p; ++i) dc[static_cast<size_t>(i)] = a.coeffs()[static_cast<size_t>(i)] * (i + 1);
    TruncatedSeries deriv(Rational(0), std::move(dc));

    TruncatedSeries q = (Rational(1) / c1) * identity;
    for (int iter = 0; iter < 64; ++iter) {
        TruncatedSeries residual = series_compose(a, q) - identity;
        if (residual.is_zero()) break;
        TruncatedSeries correction = residual * series_inv(series_compose(deriv, q));
        q = q - correction.truncate(p);
        q = q.truncate(p);
    }
    return q;
}

// q * d/dq log(a); the offset s of a contributes the constant s.
inline TruncatedSeries series_log_derivative(const TruncatedSeries& a) {
    if (a.is_zero() || a.coeffs().front() == 0) throw std::domain_error("non-invertible series");
    long p = a.prec();
    std::vector<Rational> qd(static_cast<size_t>(p), Rational(0));
    for (long i = 1; i < p; ++i) qd[static_cast<size_t>(i)] = a.coeffs()[static_cast<size_t>(i)] * i;
    TruncatedSeries unit(Rational(0), a.coeffs());
    TruncatedSeries ratio = TruncatedSeries(Rational(0), std::move(qd)) * series_inv(unit);
    return TruncatedSeries::constant(a.offset(), p) + ratio;
}

// Equality up to the common absolute precision.
inline bool series_agree(const TruncatedSeries& a, const TruncatedSeries& b) {
    return (a - b).is_zero();
}

}  // namespace etamod
