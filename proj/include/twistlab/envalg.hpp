#pragma once

#include "twistlab/pbw.hpp"

#include <algorithm>

namespace twistlab {

/// U_hbar(g) together with the symmetrization isomorphism phi and the star
/// product it induces on S(g). Owns the rewriting memo, so share one instance
/// per (algebra, order) within a task.
class EnvelopingAlgebra {
public:
    EnvelopingAlgebra(const LieAlgebra& L, unsigned order) : rw_(L, order) {}

    const LieAlgebra& algebra() const { return rw_.algebra(); }
    unsigned order() const { return rw_.order(); }
    const std::shared_ptr<const PolyRing>& ring() const { return rw_.ring(); }
    PbwRewriter& rewriter() { return rw_; }

    SymElement zero() const { return rw_.zero(); }
    SymElement one() const { return rw_.one(); }
    SymElement sym_monomial(const Exponents& e, unsigned h = 0, Rational c = Rational(1)) const {
        return rw_.monomial(e, h, std::move(c));
    }

    /// phi of a single commutative monomial: average over the distinct
    /// arrangements of the multiset word, PBW-normalized.
    UElement phi_monomial(const Exponents& e) {
        auto it = phi_memo_.find(e);
        if (it != phi_memo_.end()) return it->second;
        Word w = exponents_to_word(e);
        std::sort(w.begin(), w.end());
        UElement sum = rw_.zero();
        std::size_t count = 0;
        do {
            sum = sum + rw_.normalize(w);
            ++count;
        } while (std::next_permutation(w.begin(), w.end()));
        Rational scale = Rational(1, (long long)count);
        UElement r = rw_.zero();
        for (unsigned h = 0; h <= order(); ++h) r[h] = scale * sum[h];
        return phi_memo_.emplace(e, std::move(r)).first->second;
    }

    UElement phi(const SymElement& s) {
        UElement r = rw_.zero();
        for (unsigned h = 0; h <= order(); ++h) {
            for (auto& [e, c] : s[h].terms()) {
                UElement m = phi_monomial(e);
                for (unsigned k = 0; h + k <= order(); ++k) r[h + k] += c * m[k];
            }
        }
        return r;
    }

    /// phi^{-1}, by degree-descending back-substitution: phi(m) = m + hbar *
    /// (lower-degree corrections), so peeling the current top layer
    /// terminates.
    SymElement phi_inv(const UElement& u) {
        UElement rem = u;
        SymElement out = rw_.zero();
        while (!rem.is_zero()) {
            SymElement cand = rem;
            out = out + cand;
            rem = rem - phi(cand);
        }
        return out;
    }

    /// The PBW star product on S(g): a*b = phi^{-1}(phi(a).phi(b)).
    /// This is the oracle every closed form is measured against.
    SymElement star(const SymElement& a, const SymElement& b) {
        return phi_inv(rw_.mul(phi(a), phi(b)));
    }

    /// Symmetric-monomial star product closed form through hbar^2
    /// (the 5-term expansion, applied multilinearly over the symmetric
    /// letters). Orders above 2 are not covered by the formula.
    SymElement star_closed_form(const Exponents& we, const Exponents& ve) {
        if (order() < 2)
            throw std::invalid_argument("star_closed_form needs order >= 2");
        const LieAlgebra& L = algebra();
        Word wl = exponents_to_word(we);
        Word vl = exponents_to_word(ve);
        UElement acc = rw_.zero();
        auto add_phi = [&](unsigned h, Rational coeff, const std::vector<LieVec>& extra,
                           const Word& rest) {
            // sum over basis expansions of the extra letters
            std::vector<std::pair<Exponents, Rational>> parts{{Exponents(L.dim(), 0), coeff}};
            for (auto& vec : extra) {
                std::vector<std::pair<Exponents, Rational>> next;
                for (auto& [e, c] : parts)
                    for (std::size_t k = 0; k < vec.size(); ++k) {
                        if (vec[k].is_zero()) continue;
                        Exponents e2 = e;
                        e2[k] += 1;
                        next.emplace_back(std::move(e2), c * vec[k]);
                    }
                parts = std::move(next);
            }
            for (auto& [e, c] : parts) {
                Exponents full = e;
                for (auto l : rest) full[l] += 1;
                UElement m = phi_monomial(full);
                for (unsigned k = 0; h + k <= order(); ++k) acc[h + k] += c * m[k];
            }
        };
        // hbar^0
        add_phi(0, Rational(1), {}, concat(wl, vl));
        // ordered single/double selections from a word
        auto rest_of = [](const Word& w, std::initializer_list<std::size_t> picked) {
            Word r;
            for (std::size_t i = 0; i < w.size(); ++i)
                if (std::find(picked.begin(), picked.end(), i) == picked.end())
                    r.push_back(w[i]);
            return r;
        };
        // -(1/2) [v1,w1] per ordered (v1, w1) selection
        for (std::size_t iv = 0; iv < vl.size(); ++iv)
            for (std::size_t iw = 0; iw < wl.size(); ++iw)
                add_phi(1, Rational(-1, 2), {L.bracket(vl[iv], wl[iw])},
                        concat(rest_of(wl, {iw}), rest_of(vl, {iv})));
        // (1/8) [v1,w1][v2,w2]
        for (std::size_t iv1 = 0; iv1 < vl.size(); ++iv1)
            for (std::size_t iv2 = 0; iv2 < vl.size(); ++iv2) {
                if (iv1 == iv2) continue;
                for (std::size_t iw1 = 0; iw1 < wl.size(); ++iw1)
                    for (std::size_t iw2 = 0; iw2 < wl.size(); ++iw2) {
                        if (iw1 == iw2) continue;
                        add_phi(2, Rational(1, 8),
                                {L.bracket(vl[iv1], wl[iw1]), L.bracket(vl[iv2], wl[iw2])},
                                concat(rest_of(wl, {iw1, iw2}), rest_of(vl, {iv1, iv2})));
                    }
            }
        // (1/12) [v1,[v2,w1]]
        for (std::size_t iv1 = 0; iv1 < vl.size(); ++iv1)
            for (std::size_t iv2 = 0; iv2 < vl.size(); ++iv2) {
                if (iv1 == iv2) continue;
                for (std::size_t iw1 = 0; iw1 < wl.size(); ++iw1) {
                    LieVec inner = L.bracket(vl[iv2], wl[iw1]);
                    LieVec outer(L.dim());
                    for (std::size_t k = 0; k < inner.size(); ++k) {
                        if (inner[k].is_zero()) continue;
                        const LieVec& bb = L.bracket(vl[iv1], (uint16_t)k);
                        for (std::size_t l = 0; l < bb.size(); ++l)
                            outer[l] += inner[k] * bb[l];
                    }
                    add_phi(2, Rational(1, 12), {outer},
                            concat(rest_of(wl, {iw1}), rest_of(vl, {iv1, iv2})));
                }
            }
        // (1/12) [w1,[w2,v1]]
        for (std::size_t iw1 = 0; iw1 < wl.size(); ++iw1)
            for (std::size_t iw2 = 0; iw2 < wl.size(); ++iw2) {
                if (iw1 == iw2) continue;
                for (std::size_t iv1 = 0; iv1 < vl.size(); ++iv1) {
                    LieVec inner = L.bracket(wl[iw2], vl[iv1]);
                    LieVec outer(L.dim());
                    for (std::size_t k = 0; k < inner.size(); ++k) {
                        if (inner[k].is_zero()) continue;
                        const LieVec& bb = L.bracket(wl[iw1], (uint16_t)k);
                        for (std::size_t l = 0; l < bb.size(); ++l)
                            outer[l] += inner[k] * bb[l];
                    }
                    add_phi(2, Rational(1, 12), {outer},
                            concat(rest_of(wl, {iw1, iw2}), rest_of(vl, {iv1})));
                }
            }
        return phi_inv(acc);
    }

    /// w * phi(v_1..v_n) expansion of Lemma-style single-letter products:
    /// phi(w v..) - (n/2) hbar phi([v1,w] v2..) + (n(n-1)/12) hbar^2
    /// phi([v1,[v2,w]] v3..), letters selected multilinearly.
    SymElement single_letter_closed_form(uint16_t w, const Exponents& ve) {
        const LieAlgebra& L = algebra();
        Word vl = exponents_to_word(ve);
        UElement acc = rw_.zero();
        auto add_phi = [&](unsigned h, Rational coeff, const std::vector<LieVec>& extra,
                           const Word& rest) {
            std::vector<std::pair<Exponents, Rational>> parts{{Exponents(L.dim(), 0), coeff}};
            for (auto& vec : extra) {
                std::vector<std::pair<Exponents, Rational>> next;
                for (auto& [e, c] : parts)
                    for (std::size_t k = 0; k < vec.size(); ++k) {
                        if (vec[k].is_zero()) continue;
                        Exponents e2 = e;
                        e2[k] += 1;
                        next.emplace_back(std::move(e2), c * vec[k]);
                    }
                parts = std::move(next);
            }
            for (auto& [e, c] : parts) {
                Exponents full = e;
                for (auto l : rest) full[l] += 1;
                UElement m = phi_monomial(full);
                for (unsigned k = 0; h + k <= order(); ++k) acc[h + k] += c * m[k];
            }
        };
        Word all = vl;
        all.push_back(w);
        add_phi(0, Rational(1), {}, all);
        auto rest_of = [](const Word& ww, std::initializer_list<std::size_t> picked) {
            Word r;
            for (std::size_t i = 0; i < ww.size(); ++i)
                if (std::find(picked.begin(), picked.end(), i) == picked.end())
                    r.push_back(ww[i]);
            return r;
        };
        for (std::size_t iv = 0; iv < vl.size(); ++iv)
            add_phi(1, Rational(-1, 2), {L.bracket(vl[iv], w)}, rest_of(vl, {iv}));
        for (std::size_t iv1 = 0; iv1 < vl.size(); ++iv1)
            for (std::size_t iv2 = 0; iv2 < vl.size(); ++iv2) {
                if (iv1 == iv2) continue;
                LieVec inner = L.bracket(vl[iv2], w);
                LieVec outer(L.dim());
                for (std::size_t k = 0; k < inner.size(); ++k) {
                    if (inner[k].is_zero()) continue;
                    const LieVec& bb = L.bracket(vl[iv1], (uint16_t)k);
                    for (std::size_t l = 0; l < bb.size(); ++l) outer[l] += inner[k] * bb[l];
                }
                add_phi(2, Rational(1, 12), {outer}, rest_of(vl, {iv1, iv2}));
            }
        return phi_inv(acc);
    }

    /// hbar^k coefficients of the semiclassical commutator check: returns
    /// star(a,b) - star(b,a).
    SymElement star_commutator(const SymElement& a, const SymElement& b) {
        return star(a, b) - star(b, a);
    }

    /// Kirillov-Kostant Poisson bracket on S(g): {v,w} = [v,w] extended as a
    /// biderivation.
    Poly poisson(const Poly& a, const Poly& b) const {
        const LieAlgebra& L = algebra();
        Poly r = Poly::zero(ring());
        for (std::size_t i = 0; i < L.dim(); ++i)
            for (std::size_t j = 0; j < L.dim(); ++j) {
                const LieVec& br = L.bracket(i, j);
                Poly da = a.partial(i);
                if (da.is_zero()) continue;
                Poly db = b.partial(j);
                if (db.is_zero()) continue;
                for (std::size_t k = 0; k < br.size(); ++k)
                    if (!br[k].is_zero())
                        r += br[k] * (Poly::var(ring(), k) * da * db);
            }
        return r;
    }

private:
    PbwRewriter rw_;
    std::map<Exponents, UElement, GradLex> phi_memo_;
};

// ----- b+ model closed forms (basis t,x with [t,x] = x) -----

/// Displayed series for phi(x^n t^m) as a U element (words are built and
/// normalized, so the comparison is normal-order independent).
inline UElement bplus_phi_display(EnvelopingAlgebra& U, unsigned n, unsigned m) {
    auto word_xt = [&](unsigned nx, unsigned mt) {
        Word w;
        for (unsigned i = 0; i < nx; ++i) w.push_back(1);
        for (unsigned i = 0; i < mt; ++i) w.push_back(0);
        return w;
    };
    std::array<Rational, 4> coef = {
        Rational(1), Rational((long long)n * m, 2),
        Rational((long long)n * (3 * (long long)n + 1) * m * ((long long)m - 1), 24),
        Rational((long long)n * n * ((long long)n + 1) * m * ((long long)m - 1) *
                     ((long long)m - 2),
                 48)};
    UElement r = U.zero();
    for (unsigned k = 0; k < 4 && k <= U.order(); ++k) {
        if (coef[k].is_zero() || m < k) continue;
        const UElement& w = U.rewriter().normalize(word_xt(n, m - k));
        for (unsigned h = 0; k + h <= U.order(); ++h) r[k + h] += coef[k] * w[h];
    }
    return r;
}

/// Displayed series for phi^{-1}(x^n t^m) as a SymElement.
inline SymElement bplus_phi_inv_display(EnvelopingAlgebra& U, unsigned n, unsigned m) {
    std::array<Rational, 4> coef = {
        Rational(1), Rational(-(long long)n * m, 2),
        Rational((long long)n * (3 * (long long)n - 1) * m * ((long long)m - 1), 24),
        Rational((long long)n * n * (1 - (long long)n) * m * ((long long)m - 1) *
                     ((long long)m - 2),
                 48)};
    SymElement r = U.zero();
    for (unsigned k = 0; k < 4 && k <= U.order(); ++k) {
        if (coef[k].is_zero() || m < k) continue;
        r[k] += Poly::monomial(U.ring(), {m - k, n}, coef[k]);
    }
    return r;
}

/// The explicit (x^n t^m)*(x^r t^s) polynomial through hbar^3.
inline SymElement bplus_star_closed_form(EnvelopingAlgebra& U, long long n, long long m,
                                         long long r, long long s) {
    auto mono = [&](long long tdeg, long long xdeg, unsigned h, Rational c) {
        SymElement e = U.zero();
        if (tdeg >= 0 && h <= U.order() && !c.is_zero())
            e[h] = Poly::monomial(U.ring(), {(uint32_t)tdeg, (uint32_t)xdeg}, c);
        return e;
    };
    SymElement out = mono(m + s, n + r, 0, Rational(1));
    out = out + mono(m + s - 1, n + r, 1, Rational(m * r - n * s, 2));
    long long A = m * r - m * m * r - 3 * m * r * r + 3 * m * m * r * r + n * s -
                  2 * m * n * s - 3 * n * n * s - 2 * m * r * s - 6 * m * n * r * s -
                  n * s * s + 3 * n * n * s * s;
    out = out + mono(m + s - 2, n + r, 2, Rational(A, 24));
    long long B = -2 * m * r * r + 3 * m * m * r * r - m * m * m * r * r + 2 * m * r * r * r -
                  3 * m * m * r * r * r + m * m * m * r * r * r + 2 * n * n * s -
                  2 * m * n * n * s - 2 * n * n * n * s - m * m * n * r * s -
                  3 * m * n * n * r * s + 2 * m * r * r * s - 2 * m * m * r * r * s +
                  3 * m * n * r * r * s - 3 * m * m * n * r * r * s - 3 * n * n * s * s +
                  2 * m * n * n * s * s + 3 * n * n * n * s * s + m * n * r * s * s +
                  3 * m * n * n * r * s * s + n * n * s * s * s - n * n * n * s * s * s;
    out = out + mono(m + s - 3, n + r, 3, Rational(B, 48));
    return out;
}

/// Expands the closed-form CBH coefficient Q(hbar) of the b+ model:
/// Q = (q E(hp) + e^{hp} s E(hr)) / E(h(p+r)) with E(u) = (e^u - 1)/u.
inline HSeries<Rational> bplus_cbh_coefficient(const Rational& p, const Rational& q,
                                               const Rational& r, const Rational& s,
                                               unsigned N) {
    auto expm1_over = [&](const Rational& a) { // E(h a)
        HSeries<Rational> e(N);
        for (unsigned k = 0; k <= N; ++k) e[k] = pow(a, k) / factorial(k + 1);
        return e;
    };
    auto exps = [&](const Rational& a) { // e^{h a}
        HSeries<Rational> e(N);
        for (unsigned k = 0; k <= N; ++k) e[k] = pow(a, k) / factorial(k);
        return e;
    };
    HSeries<Rational> qs(N), ss(N);
    qs[0] = q;
    ss[0] = s;
    HSeries<Rational> num = qs * expm1_over(p) + exps(p) * ss * expm1_over(r);
    return num * series_inverse(expm1_over(p + r));
}

/// Truncated exponential exp(p t + q x) in S(g), total degree <= N.
inline SymElement bplus_exp(EnvelopingAlgebra& U, const Rational& p, const Rational& q,
                            unsigned maxdeg) {
    SymElement out = U.zero();
    Poly lin = p * Poly::var(U.ring(), 0) + q * Poly::var(U.ring(), 1);
    Poly pw = Poly::one(U.ring());
    out[0] += pw;
    for (unsigned d = 1; d <= maxdeg; ++d) {
        pw *= lin;
        out[0] += factorial(d).inverse() * pw;
    }
    return out;
}

/// Campbell-Baker-Hausdorff closed-form check for the b+ model: both sides of
/// exp(pt+qx) * exp(rt+sx) = exp((p+r)t + Q x), compared on monomials with
/// degree + hbar order within the truncation window.
inline bool bplus_cbh_check(EnvelopingAlgebra& U, const Rational& p, const Rational& q,
                            const Rational& r, const Rational& s, unsigned N) {
    SymElement lhs = U.star(bplus_exp(U, p, q, N), bplus_exp(U, r, s, N));
    HSeries<Rational> Q = bplus_cbh_coefficient(p, q, r, s, N);
    // rhs = exp((p+r) t) * exp(Q(h) x) with commuting generators in S(g)
    SymElement rhs = U.zero();
    Poly tv = Poly::var(U.ring(), 0), xv = Poly::var(U.ring(), 1);
    for (unsigned a = 0; a <= N; ++a) {
        for (unsigned b = 0; a + b <= N; ++b) {
            // coefficient: (p+r)^a / a! * Q^b / b!  -- Q^b is an hbar series
            HSeries<Rational> qb(N);
            qb[0] = Rational(1);
            for (unsigned i = 0; i < b; ++i) qb = qb * Q;
            Rational ca = pow(p + r, a) / factorial(a) * factorial(b).inverse();
            Poly mform = Poly::one(U.ring());
            for (unsigned i = 0; i < a; ++i) mform *= tv;
            for (unsigned i = 0; i < b; ++i) mform *= xv;
            for (unsigned h = 0; h <= N && h <= U.order(); ++h)
                rhs[h] += (ca * qb[h]) * mform;
        }
    }
    for (unsigned h = 0; h <= std::min(N, U.order()); ++h) {
        Poly diff = lhs[h] - rhs[h];
        for (auto& [e, c] : diff.terms()) {
            if (Poly::total_degree(e) + h <= N && !c.is_zero()) return false;
        }
    }
    return true;
}

} // namespace twistlab
