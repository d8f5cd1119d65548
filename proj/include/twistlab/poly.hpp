#pragma once

#include "twistlab/rational.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <vector>

namespace twistlab {

/// Variable context for a polynomial ring. Polynomials belonging to
/// different contexts cannot be combined.
struct PolyRing {
    std::vector<std::string> vars;

    explicit PolyRing(std::vector<std::string> v) : vars(std::move(v)) {}
    std::size_t nvars() const { return vars.size(); }

    static std::shared_ptr<const PolyRing> make(std::vector<std::string> v) {
        return std::make_shared<const PolyRing>(std::move(v));
    }
};

using Exponents = std::vector<uint32_t>;

/// Graded lexicographic order on exponent tuples.
struct GradLex {
    bool operator()(const Exponents& a, const Exponents& b) const {
        uint64_t da = 0, db = 0;
        for (auto e : a) da += e;
        for (auto e : b) db += e;
        if (da != db) return da < db;
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    }
};

/// Multivariate polynomial with Rational coefficients in canonical form:
/// no zero coefficients, gradlex-ordered terms, fixed variable context.
class Poly {
public:
    using Terms = std::map<Exponents, Rational, GradLex>;

    Poly() = default;
    explicit Poly(std::shared_ptr<const PolyRing> ring) : ring_(std::move(ring)) {}

    static Poly zero(std::shared_ptr<const PolyRing> ring) { return Poly(std::move(ring)); }
    static Poly constant(std::shared_ptr<const PolyRing> ring, Rational c) {
        Poly p(std::move(ring));
        if (!c.is_zero()) p.terms_[Exponents(p.ring_->nvars(), 0)] = std::move(c);
        return p;
    }
    static Poly one(std::shared_ptr<const PolyRing> ring) {
        return constant(std::move(ring), Rational(1));
    }
    static Poly var(std::shared_ptr<const PolyRing> ring, std::size_t i, Rational c = Rational(1)) {
        Poly p(std::move(ring));
        if (i >= p.ring_->nvars()) throw std::out_of_range("Poly: variable index");
        if (!c.is_zero()) {
            Exponents e(p.ring_->nvars(), 0);
            e[i] = 1;
            p.terms_[std::move(e)] = std::move(c);
        }
        return p;
    }
    static Poly monomial(std::shared_ptr<const PolyRing> ring, Exponents e, Rational c) {
        Poly p(std::move(ring));
        if (e.size() != p.ring_->nvars()) throw std::invalid_argument("Poly: exponent arity");
        if (!c.is_zero()) p.terms_[std::move(e)] = std::move(c);
        return p;
    }

    const std::shared_ptr<const PolyRing>& ring() const { return ring_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->second.is_one() &&
               total_degree(terms_.begin()->first) == 0;
    }

    static uint64_t total_degree(const Exponents& e) {
        uint64_t d = 0;
        for (auto x : e) d += x;
        return d;
    }
    uint64_t degree() const {
        uint64_t d = 0;
        for (auto& [e, c] : terms_) d = std::max(d, total_degree(e));
        return d;
    }

    void add_term(const Exponents& e, const Rational& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        a.check_ring(b);
        Poly r = a;
        for (auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        a.check_ring(b);
        Poly r = a;
        for (auto& [e, c] : b.terms_) r.add_term(e, -c);
        return r;
    }
    Poly operator-() const {
        Poly r(ring_);
        for (auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        a.check_ring(b);
        Poly r(a.ring_);
        for (auto& [ea, ca] : a.terms_) {
            for (auto& [eb, cb] : b.terms_) {
                Exponents e(ea);
                for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
                r.add_term(e, ca * cb);
            }
        }
        return r;
    }
    friend Poly operator*(const Rational& c, const Poly& p) {
        Poly r(p.ring_);
        if (c.is_zero()) return r;
        for (auto& [e, pc] : p.terms_) r.terms_[e] = c * pc;
        return r;
    }
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly& a, const Poly& b) {
        a.check_ring(b);
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
    friend bool operator<(const Poly& a, const Poly& b) { return a.terms_ < b.terms_; }

    /// Formal partial derivative.
    Poly partial(std::size_t var) const {
        if (var >= ring_->nvars()) throw std::out_of_range("Poly: unknown variable");
        Poly r(ring_);
        for (auto& [e, c] : terms_) {
            if (e[var] == 0) continue;
            Exponents d(e);
            d[var] -= 1;
            r.add_term(d, c * Rational((long long)e[var]));
        }
        return r;
    }

    /// Exact division; returns nullopt when the divisor does not divide.
    std::optional<Poly> divide_exact(const Poly& d) const {
        check_ring(d);
        if (d.is_zero()) throw std::domain_error("Poly: division by zero");
        Poly rem = *this;
        Poly quo(ring_);
        const auto& dl = *d.terms_.rbegin(); // gradlex leading term
        while (!rem.is_zero()) {
            const auto& rl = *rem.terms_.rbegin();
            Exponents q(rl.first);
            bool ok = true;
            for (std::size_t i = 0; i < q.size(); ++i) {
                if (q[i] < dl.first[i]) { ok = false; break; }
                q[i] -= dl.first[i];
            }
            if (!ok) return std::nullopt;
            Rational qc = rl.second / dl.second;
            Poly t = monomial(ring_, q, qc);
            quo += t;
            rem -= t * d;
        }
        return quo;
    }

    Rational coeff(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }
    Rational constant_coeff() const { return coeff(Exponents(ring_->nvars(), 0)); }

    /// Substitutes 0 for every variable except those in `keep` (paired with values).
    Rational eval_at_zero() const { return constant_coeff(); }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            Rational a = c;
            if (first) {
                if (a.sign() < 0) { os << "-"; a = -a; }
            } else {
                os << (a.sign() < 0 ? " - " : " + ");
                if (a.sign() < 0) a = -a;
            }
            first = false;
            bool unitc = a.is_one();
            bool anyvar = total_degree(e) > 0;
            if (!unitc || !anyvar) os << a.str();
            bool sep = !unitc || !anyvar;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (sep) os << "*";
                os << ring_->vars[i];
                if (e[i] > 1) os << "^" << e[i];
                sep = true;
            }
        }
        return os.str();
    }

private:
    void check_ring(const Poly& o) const {
        if (ring_ == o.ring_) return;
        if (!ring_ || !o.ring_ || ring_->vars != o.ring_->vars)
            throw std::invalid_argument("Poly: mismatched variable lists");
    }

    std::shared_ptr<const PolyRing> ring_;
    Terms terms_;
};

} // namespace twistlab
