#pragma once

#include "twistlab/cochain.hpp"
#include "twistlab/envalg.hpp"

#include <functional>

namespace twistlab {

/// Generic application of a cochain to a pair of module-algebra elements:
/// a*b = sum over terms of hbar^h c (word1 |> a)(word2 |> b). Words act
/// left-to-right per slot: (g1 g2) |> a = g1 |> (g2 |> a). Throws when the
/// realization is missing a symbol used by the cochain.
template <class T, class LetterOp, class Mul>
HSeries<T> apply_cochain(const Cochain& F, LetterOp&& op, Mul&& mul, const HSeries<T>& a,
                         const HSeries<T>& b) {
    a.check_order(b);
    unsigned N = a.order();
    HSeries<T> out(N, a[0] - a[0]);
    auto apply_word = [&](const Word& w, T v) {
        for (auto it = w.rbegin(); it != w.rend(); ++it) v = op(*it, v);
        return v;
    };
    for (unsigned h = 0; h <= std::min(N, F.order()); ++h) {
        for (auto& [tw, c] : F.series.layers[h].terms()) {
            for (unsigned ha = 0; ha + h <= N; ++ha) {
                if (a[ha].is_zero()) continue;
                T ra = apply_word(tw.first, a[ha]);
                if (ra.is_zero()) continue;
                for (unsigned hb = 0; ha + hb + h <= N; ++hb) {
                    if (b[hb].is_zero()) continue;
                    T rb = apply_word(tw.second, b[hb]);
                    if (rb.is_zero()) continue;
                    T prod = mul(ra, rb);
                    out[ha + hb + h] = out[ha + hb + h] + scale_term(c, prod);
                }
            }
        }
    }
    return out;
}

template <class T>
T scale_term(const Rational& c, const T& t) {
    return c * t;
}

/// Realization of the double g |x g* on S(g): e_i acts as the ad-derivation,
/// e^i as d/de_i.
class SgRealization {
public:
    SgRealization(const LieAlgebra& g, std::shared_ptr<const PolyRing> ring)
        : g_(&g), ring_(std::move(ring)) {}

    Poly operator()(uint16_t letter, const Poly& p) const {
        std::size_t n = g_->dim();
        if (letter < n) {
            // ad-derivation: e_k -> [e_letter, e_k]
            Poly r = Poly::zero(ring_);
            for (std::size_t pos = 0; pos < n; ++pos) {
                Poly dp = p.partial(pos);
                if (dp.is_zero()) continue;
                const LieVec& br = g_->bracket(letter, pos);
                for (std::size_t k = 0; k < n; ++k)
                    if (!br[k].is_zero()) r += br[k] * (Poly::var(ring_, k) * dp);
            }
            return r;
        }
        if (letter < 2 * n) return p.partial(letter - n);
        throw std::domain_error("SgRealization: symbol not realized");
    }

private:
    const LieAlgebra* g_;
    std::shared_ptr<const PolyRing> ring_;
};

/// Deformed product on S(g) induced by a double cochain.
inline SymElement apply_cochain_sg(const Cochain& F, EnvelopingAlgebra& U, const SymElement& a,
                                   const SymElement& b) {
    SgRealization op(U.algebra(), U.ring());
    return apply_cochain(
        F, op, [](const Poly& x, const Poly& y) { return x * y; }, a, b);
}

/// Mackey realization on C(N) x S(g), modeled as a polynomial ring whose
/// variable 0..(m-1) are N-coordinates and m..(m+n-1) the g symbols. The
/// cc_i fields act by supplied vector fields in the N-variables.
class MackeyRealization {
public:
    /// action[i] = components of the vector field for e_i on N (one Poly per
    /// N-coordinate, in this same ring).
    MackeyRealization(const LieAlgebra& g, std::shared_ptr<const PolyRing> ring,
                      std::size_t n_coords, std::vector<std::vector<Poly>> action)
        : g_(&g), ring_(std::move(ring)), m_(n_coords), action_(std::move(action)) {}

    Poly operator()(uint16_t letter, const Poly& p) const {
        std::size_t n = g_->dim();
        if (letter < n) {
            // ce_i: ad on the S(g) sector
            Poly r = Poly::zero(ring_);
            for (std::size_t pos = 0; pos < n; ++pos) {
                Poly dp = p.partial(m_ + pos);
                if (dp.is_zero()) continue;
                const LieVec& br = g_->bracket(letter, pos);
                for (std::size_t k = 0; k < n; ++k)
                    if (!br[k].is_zero()) r += br[k] * (Poly::var(ring_, m_ + k) * dp);
            }
            return r;
        }
        if (letter < 2 * n) return p.partial(m_ + (letter - n)); // ce^i
        if (letter < 3 * n) {
            // cc_i: vector field on the N sector
            std::size_t i = letter - 2 * n;
            Poly r = Poly::zero(ring_);
            for (std::size_t c = 0; c < m_; ++c) {
                Poly dp = p.partial(c);
                if (!dp.is_zero()) r += action_.at(i).at(c) * dp;
            }
            return r;
        }
        throw std::domain_error("MackeyRealization: symbol not realized");
    }

private:
    const LieAlgebra* g_;
    std::shared_ptr<const PolyRing> ring_;
    std::size_t m_;
    std::vector<std::vector<Poly>> action_;
};

} // namespace twistlab
