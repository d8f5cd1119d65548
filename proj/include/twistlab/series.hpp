#pragma once

#include "twistlab/rational.hpp"

#include <stdexcept>
#include <vector>

namespace twistlab {

/// hbar-truncated series with coefficients in a ring R. The coefficient list
/// always has length order()+1; arithmetic never extends past the truncation.
/// R needs: default ctor (= zero), +, -, *, is_zero().
template <class R>
class HSeries {
public:
    HSeries() : coeffs_(1) {}
    explicit HSeries(unsigned order) : coeffs_(order + 1) {}
    HSeries(unsigned order, R zero) : coeffs_(order + 1, std::move(zero)) {}

    unsigned order() const { return (unsigned)coeffs_.size() - 1; }

    R& operator[](unsigned k) { return coeffs_.at(k); }
    const R& operator[](unsigned k) const { return coeffs_.at(k); }

    bool is_zero() const {
        for (auto& c : coeffs_)
            if (!c.is_zero()) return false;
        return true;
    }

    void check_order(const HSeries& o) const {
        if (order() != o.order())
            throw std::invalid_argument("HSeries: truncation orders differ");
    }

    friend HSeries operator+(const HSeries& a, const HSeries& b) {
        a.check_order(b);
        HSeries r = a;
        for (unsigned k = 0; k <= r.order(); ++k) r.coeffs_[k] = r.coeffs_[k] + b.coeffs_[k];
        return r;
    }
    friend HSeries operator-(const HSeries& a, const HSeries& b) {
        a.check_order(b);
        HSeries r = a;
        for (unsigned k = 0; k <= r.order(); ++k) r.coeffs_[k] = r.coeffs_[k] - b.coeffs_[k];
        return r;
    }
    /// Cauchy product truncated at the common order.
    friend HSeries operator*(const HSeries& a, const HSeries& b) {
        a.check_order(b);
        HSeries r(a.order(), zero_like(a.coeffs_[0]));
        for (unsigned i = 0; i <= a.order(); ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (unsigned j = 0; i + j <= b.order(); ++j) {
                if (b.coeffs_[j].is_zero()) continue;
                r.coeffs_[i + j] = r.coeffs_[i + j] + a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return r;
    }

    HSeries truncated(unsigned new_order) const {
        HSeries r(new_order, zero_like(coeffs_[0]));
        for (unsigned k = 0; k <= std::min(new_order, order()); ++k) r.coeffs_[k] = coeffs_[k];
        return r;
    }

    /// Multiplies by hbar^k (shifting coefficients up, dropping overflow).
    HSeries shifted(unsigned k) const {
        HSeries r(order(), zero_like(coeffs_[0]));
        for (unsigned i = 0; i + k <= order(); ++i) r.coeffs_[i + k] = coeffs_[i];
        return r;
    }

    friend bool operator==(const HSeries& a, const HSeries& b) {
        a.check_order(b);
        for (unsigned k = 0; k <= a.order(); ++k)
            if (!(a.coeffs_[k] - b.coeffs_[k]).is_zero()) return false;
        return true;
    }
    friend bool operator!=(const HSeries& a, const HSeries& b) { return !(a == b); }

private:
    static R zero_like(const R& model) {
        if constexpr (std::is_constructible_v<R>) {
            (void)model;
        }
        R z = model;
        z = model - model;
        return z;
    }

    std::vector<R> coeffs_;
};

/// Geometric-series inverse; requires the constant term to equal `one`.
/// Throws when c0 is not invertible in the supported sense.
template <class R>
HSeries<R> series_inverse(const HSeries<R>& a, const R& one) {
    if (!(a[0] - one).is_zero())
        throw std::domain_error("HSeries: inverse needs constant term 1");
    const unsigned N = a.order();
    HSeries<R> u(N, one - one); // u = 1 - a, so u has no constant term
    for (unsigned k = 1; k <= N; ++k) u[k] = (one - one) - a[k];
    HSeries<R> r(N, one - one);
    r[0] = one;
    HSeries<R> p(N, one - one);
    p[0] = one;
    for (unsigned k = 1; k <= N; ++k) {
        p = p * u;
        r = r + p;
    }
    return r;
}

/// Scalar series inverse: any invertible constant term.
inline HSeries<Rational> series_inverse(const HSeries<Rational>& a) {
    if (a[0].is_zero())
        throw std::domain_error("HSeries: non-invertible constant term");
    Rational c0inv = a[0].inverse();
    HSeries<Rational> scaled(a.order());
    for (unsigned k = 0; k <= a.order(); ++k) scaled[k] = a[k] * c0inv;
    HSeries<Rational> r = series_inverse(scaled, Rational(1));
    for (unsigned k = 0; k <= r.order(); ++k) r[k] *= c0inv;
    return r;
}

} // namespace twistlab
