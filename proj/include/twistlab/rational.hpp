#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace twistlab {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational. Denominator > 0, gcd-reduced at all times.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long v) : num_(v), den_(1) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(long long n, long long d) : num_(n), den_(d) { reduce(); }
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == 1 && den_ == 1; }
    int sign() const { return num_ == 0 ? 0 : (num_ > 0 ? 1 : -1); }

    Rational operator-() const { return Rational(raw{}, -num_, den_); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }

    Rational inverse() const {
        if (num_ == 0) throw std::domain_error("Rational: inverse of zero");
        return Rational(den_, num_);
    }

    std::string str() const {
        std::string s = num_.str();
        if (den_ != 1) s += "/" + den_.str();
        return s;
    }

    /// Parses "p", "-p", or "p/q".
    static Rational parse(std::string_view s) {
        auto slash = s.find('/');
        try {
            if (slash == std::string_view::npos)
                return Rational(BigInt(std::string(s)), BigInt(1));
            return Rational(BigInt(std::string(s.substr(0, slash))),
                            BigInt(std::string(s.substr(slash + 1))));
        } catch (const std::exception&) {
            throw std::invalid_argument("Rational: cannot parse '" + std::string(s) + "'");
        }
    }

private:
    struct raw {};
    Rational(raw, BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {}

    void reduce() {
        if (den_ == 0) throw std::domain_error("Rational: zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        if (num_ == 0) { den_ = 1; return; }
        BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
    }

    BigInt num_;
    BigInt den_;
};

inline Rational frac(long long n, long long d) { return Rational(n, d); }

inline Rational factorial(unsigned n) {
    BigInt r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return Rational(r);
}

inline Rational binomial(unsigned n, unsigned k) {
    if (k > n) return Rational(0);
    BigInt r = 1;
    for (unsigned i = 0; i < k; ++i) { r *= (n - i); r /= (i + 1); }
    return Rational(r);
}

inline Rational pow(const Rational& a, unsigned e) {
    Rational r(1);
    for (unsigned i = 0; i < e; ++i) r *= a;
    return r;
}

} // namespace twistlab
