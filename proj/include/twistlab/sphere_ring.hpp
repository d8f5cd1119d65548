#pragma once

#include "twistlab/poly.hpp"

#include <sstream>

namespace twistlab {

/// Element of Q[x,y,z]/(x^2+y^2+z^2-1) localized at z, kept in the canonical
/// form (p + q*z)/z^m with p,q in Q[x,y]. z^2 is always reduced away and m is
/// minimal (the numerator is not divisible by z unless the element is 0).
class SphereElem {
public:
    SphereElem() : p_(xy_ring()), q_(xy_ring()), m_(0) {}
    SphereElem(Poly p, Poly q, unsigned m) : p_(std::move(p)), q_(std::move(q)), m_(m) {
        reduce();
    }

    static const std::shared_ptr<const PolyRing>& xy_ring() {
        static const auto ring = PolyRing::make({"x", "y"});
        return ring;
    }
    /// 1 - x^2 - y^2 (the reduction of z^2).
    static const Poly& zsquare() {
        static const Poly zz = [] {
            auto r = xy_ring();
            return Poly::one(r) - Poly::var(r, 0) * Poly::var(r, 0) -
                   Poly::var(r, 1) * Poly::var(r, 1);
        }();
        return zz;
    }

    static SphereElem zero() { return SphereElem(); }
    static SphereElem one() { return constant(Rational(1)); }
    static SphereElem constant(Rational c) {
        return SphereElem(Poly::constant(xy_ring(), std::move(c)), Poly::zero(xy_ring()), 0);
    }
    static SphereElem from_poly(Poly p) {
        return SphereElem(std::move(p), Poly::zero(xy_ring()), 0);
    }
    static SphereElem x() { return from_poly(Poly::var(xy_ring(), 0)); }
    static SphereElem y() { return from_poly(Poly::var(xy_ring(), 1)); }
    static SphereElem z() { return SphereElem(Poly::zero(xy_ring()), Poly::one(xy_ring()), 0); }
    static SphereElem z_inv() { return SphereElem(Poly::zero(xy_ring()), Poly::one(xy_ring()), 2); }
    /// x^a y^b as a sphere function.
    static SphereElem monomial(unsigned a, unsigned b, Rational c = Rational(1)) {
        return from_poly(Poly::monomial(xy_ring(), {a, b}, std::move(c)));
    }

    const Poly& p() const { return p_; }
    const Poly& q() const { return q_; }
    unsigned denom_power() const { return m_; }

    bool is_zero() const { return p_.is_zero() && q_.is_zero(); }

    friend SphereElem operator+(const SphereElem& a, const SphereElem& b) {
        unsigned m = std::max(a.m_, b.m_);
        auto [pa, qa] = a.scaled_numerator(m - a.m_);
        auto [pb, qb] = b.scaled_numerator(m - b.m_);
        return SphereElem(pa + pb, qa + qb, m);
    }
    friend SphereElem operator-(const SphereElem& a, const SphereElem& b) {
        unsigned m = std::max(a.m_, b.m_);
        auto [pa, qa] = a.scaled_numerator(m - a.m_);
        auto [pb, qb] = b.scaled_numerator(m - b.m_);
        return SphereElem(pa - pb, qa - qb, m);
    }
    SphereElem operator-() const { return SphereElem(-p_, -q_, m_); }
    friend SphereElem operator*(const SphereElem& a, const SphereElem& b) {
        // (p1+q1 z)(p2+q2 z) = p1 p2 + q1 q2 (1-x^2-y^2) + (p1 q2 + p2 q1) z
        Poly p = a.p_ * b.p_ + a.q_ * b.q_ * zsquare();
        Poly q = a.p_ * b.q_ + b.p_ * a.q_;
        return SphereElem(std::move(p), std::move(q), a.m_ + b.m_);
    }
    friend SphereElem operator*(const Rational& c, const SphereElem& s) {
        return SphereElem(c * s.p_, c * s.q_, s.m_);
    }
    SphereElem& operator+=(const SphereElem& o) { return *this = *this + o; }
    SphereElem& operator-=(const SphereElem& o) { return *this = *this - o; }
    SphereElem& operator*=(const SphereElem& o) { return *this = *this * o; }

    friend bool operator==(const SphereElem& a, const SphereElem& b) {
        return a.m_ == b.m_ && a.p_ == b.p_ && a.q_ == b.q_;
    }
    friend bool operator!=(const SphereElem& a, const SphereElem& b) { return !(a == b); }

    /// Partial derivative along x (var=0) or y (var=1), using dz/dx = -x/z.
    SphereElem partial(std::size_t var) const {
        // d/dv [(p+qz)/z^m] = { [p_v*(1-x^2-y^2) + m v p] + [q_v*(1-x^2-y^2) - q v + m v q] z } / z^{m+2}
        auto ring = xy_ring();
        Poly v = Poly::var(ring, var);
        Poly zz = zsquare();
        Poly mp = Poly::constant(ring, Rational((long long)m_));
        Poly np = p_.partial(var) * zz + mp * v * p_;
        Poly nq = q_.partial(var) * zz - v * q_ + mp * v * q_;
        return SphereElem(std::move(np), std::move(nq), m_ + 2);
    }

    /// Multiplication by z^k (k may be negative).
    SphereElem times_z_power(int k) const {
        if (k >= 0) {
            SphereElem r = *this;
            for (int i = 0; i < k; ++i) r *= z();
            return r;
        }
        return SphereElem(p_, q_, m_ + (unsigned)(-k));
    }

    /// Value at the chart origin x=y=0, z=1.
    Rational at_origin() const { return p_.constant_coeff() + q_.constant_coeff(); }

    /// Inverse, available when the element is c * z^k (a unit times a z power).
    SphereElem inverse() const {
        if (is_zero()) throw std::domain_error("SphereElem: inverse of zero");
        if (q_.is_zero() && p_.degree() == 0)
            return constant(p_.constant_coeff().inverse()).times_z_power((int)m_);
        if (p_.is_zero() && q_.degree() == 0)
            return constant(q_.constant_coeff().inverse()).times_z_power((int)m_ - 1);
        throw std::domain_error("SphereElem: inverse only for unit * z^k elements");
    }

    std::string str() const {
        std::ostringstream os;
        std::string num;
        if (p_.is_zero() && q_.is_zero()) return "0";
        if (!p_.is_zero()) num += p_.str();
        if (!q_.is_zero()) {
            if (!num.empty()) num += " + ";
            num += "(" + q_.str() + ")*z";
        }
        if (m_ == 0) return num;
        os << "(" << num << ")/z^" << m_;
        return os.str();
    }

private:
    std::pair<Poly, Poly> scaled_numerator(unsigned k) const {
        // numerator * z^k as (p', q')
        Poly p = p_, q = q_;
        for (unsigned i = 0; i < k; ++i) {
            Poly np = q * zsquare();
            Poly nq = p;
            p = std::move(np);
            q = std::move(nq);
        }
        return {p, q};
    }

    void reduce() {
        if (p_.is_zero() && q_.is_zero()) { m_ = 0; return; }
        while (m_ > 0) {
            // (p + qz)/z^m = (q + (p/(1-x^2-y^2)) z)/z^{m-1}  when zz | p
            if (p_.is_zero()) {
                Poly np = q_;
                p_ = std::move(np);
                q_ = Poly::zero(xy_ring());
                m_ -= 1;
                continue;
            }
            auto div = p_.divide_exact(zsquare());
            if (!div) break;
            Poly np = q_;
            q_ = std::move(*div);
            p_ = std::move(np);
            m_ -= 1;
        }
    }

    Poly p_, q_;
    unsigned m_;
};

} // namespace twistlab
