#pragma once

#include "twistlab/lie.hpp"
#include "twistlab/words.hpp"
#include "twistlab/pbw.hpp"

#include <memory>

namespace twistlab {

/// A 2-cochain F^{-1} = 1x1 + hbar G1 + hbar^2 G2 + ... with values in tensor
/// words over a covariance Lie algebra.
struct Cochain {
    std::shared_ptr<const LieAlgebra> covariance;
    std::size_t n_primal = 0; // letters 0..n-1 act as g, n..2n-1 as g* (doubles only)
    Tensor2Series series;
    Rational alpha, beta, gamma, delta, zeta;

    unsigned order() const { return series.order; }

    /// Counit condition: every hbar>=1 word is non-empty in both slots.
    bool counit_ok() const {
        if (series.layers[0].size() != 1) return false;
        auto& [w0, c0] = *series.layers[0].terms().begin();
        if (!w0.first.empty() || !w0.second.empty() || !c0.is_one()) return false;
        for (unsigned h = 1; h <= series.order; ++h)
            for (auto& [w, c] : series.layers[h].terms())
                if (w.first.empty() || w.second.empty()) return false;
        return true;
    }

    void add_term(unsigned h, Word w1, Word w2, Rational c) {
        series.layers.at(h).add({std::move(w1), std::move(w2)}, std::move(c));
    }
};

/// Sign convention used throughout the twist formulas: the pairing kappa with
/// e^i([v,[w,e_i]]) = -kappa(v,w), i.e. minus the trace-form Killing matrix.
inline RatMatrix twist_kappa(const LieAlgebra& g) {
    RatMatrix k = g.killing_form();
    RatMatrix r(k.rows(), k.cols());
    for (std::size_t i = 0; i < k.rows(); ++i)
        for (std::size_t j = 0; j < k.cols(); ++j) r(i, j) = -k(i, j);
    return r;
}

/// The CBH cochain on the double g |x g* through hbar^2 (optionally hbar^3
/// for the b+ model): beta = alpha + 1/2,
///   G1 = alpha Q1 + beta Q2,
///   G2 = gamma (Q1+Q2)Q1 + delta (Q1+Q2)Q2
///        + (zeta/2)(:Q1Q2: + 2 :Q1Q2:^R + 2 kappa_ij e^i x e^j),
/// which at gamma=alpha^2/2, delta=beta^2/2, zeta=-1/12 is the canonical
/// product-reproducing cochain. zeta scales the normal-ordered group, so the
/// zeta=0 control visibly breaks the coproduct closure.
inline Cochain cbh_cochain(const LieAlgebra& g, const Rational& alpha, unsigned N,
                           std::optional<Rational> gamma_o = std::nullopt,
                           std::optional<Rational> delta_o = std::nullopt,
                           std::optional<Rational> zeta_o = std::nullopt,
                           bool bplus_third_order = false) {
    if (N > 3) throw std::invalid_argument("cbh_cochain: N > 3 unsupported");
    std::size_t n = g.dim();
    Cochain F;
    F.covariance = std::make_shared<LieAlgebra>(semidirect_extend(g, SemidirectKind::CoadjointDouble));
    F.n_primal = n;
    F.series = Tensor2Series(N);
    F.alpha = alpha;
    F.beta = alpha + Rational(1, 2);
    F.gamma = gamma_o ? *gamma_o : F.alpha * F.alpha * Rational(1, 2);
    F.delta = delta_o ? *delta_o : F.beta * F.beta * Rational(1, 2);
    F.zeta = zeta_o ? *zeta_o : Rational(-1, 12);
    F.series.layers[0].add({Word{}, Word{}}, Rational(1));
    auto P = [&](std::size_t i) { return (uint16_t)i; };          // e_i
    auto D = [&](std::size_t i) { return (uint16_t)(n + i); };    // e^i
    if (N >= 1) {
        for (std::size_t i = 0; i < n; ++i) {
            F.add_term(1, {P(i)}, {D(i)}, F.alpha);
            F.add_term(1, {D(i)}, {P(i)}, F.beta);
        }
    }
    if (N >= 2) {
        RatMatrix kap = twist_kappa(g);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                F.add_term(2, {P(i), P(j)}, {D(i), D(j)}, F.gamma);       // Q1 Q1
                F.add_term(2, {D(i), P(j)}, {P(i), D(j)}, F.gamma);       // Q2 Q1
                F.add_term(2, {P(i), D(j)}, {D(i), P(j)}, F.delta);       // Q1 Q2
                F.add_term(2, {D(i), D(j)}, {P(i), P(j)}, F.delta);       // Q2 Q2
                F.add_term(2, {P(i), D(j)}, {P(j), D(i)}, F.zeta * Rational(1, 2)); // :Q1Q2:
                F.add_term(2, {D(j), P(i)}, {D(i), P(j)}, F.zeta);        // :Q1Q2:^R
                if (!kap(i, j).is_zero())
                    F.add_term(2, {D(i)}, {D(j)}, F.zeta * kap(i, j));
            }
    }
    if (N >= 3 && bplus_third_order) {
        // b+-specific third-order term; validated against the hbar^3 part of
        // the closed-form product (the displayed middle-term sign fails that
        // check, the + sign below passes it).
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) {
                    F.add_term(3, {P(i), D(j), D(k)}, {P(k), P(j), D(i)}, Rational(1, 96));
                    F.add_term(3, {P(k), D(j), P(i)}, {D(i), P(j), D(k)}, Rational(1, 96));
                    F.add_term(3, {D(i), P(j), D(k)}, {P(i), D(j), P(k)}, Rational(-2, 96));
                }
    }
    return F;
}

/// The Mackey cochain on g |x g* + g, through hbar^2. Letters follow the
/// semidirect basis: 0..n-1 = ce_i, n..2n-1 = ce^i, 2n..3n-1 = cc_i. The
/// imported CBH pieces use the split (alpha,beta) = (-1/2, 0) fixed by G1.
inline Cochain mackey_cochain(const LieAlgebra& g, unsigned N = 2) {
    if (N > 2) throw std::invalid_argument("mackey_cochain: N > 2 unsupported");
    std::size_t n = g.dim();
    Cochain F;
    F.covariance = std::make_shared<LieAlgebra>(semidirect_extend(g, SemidirectKind::MackeyTriple));
    F.n_primal = n;
    F.series = Tensor2Series(N);
    F.alpha = Rational(-1, 2);
    F.beta = Rational(0);
    F.gamma = F.alpha * F.alpha * Rational(1, 2);
    F.delta = Rational(0);
    F.zeta = Rational(-1, 12);
    F.series.layers[0].add({Word{}, Word{}}, Rational(1));
    auto P = [&](std::size_t i) { return (uint16_t)i; };
    auto D = [&](std::size_t i) { return (uint16_t)(n + i); };
    auto C = [&](std::size_t i) { return (uint16_t)(2 * n + i); };
    if (N >= 1) {
        for (std::size_t i = 0; i < n; ++i) {
            F.add_term(1, {C(i)}, {D(i)}, Rational(-1));
            F.add_term(1, {P(i)}, {D(i)}, Rational(-1, 2));
        }
    }
    if (N >= 2) {
        Cochain cbh = cbh_cochain(g, F.alpha, 2);
        // (1 x G2_CBH,1) x (1 x G2_CBH,2)
        for (auto& [w, c] : cbh.series.layers[2].terms())
            F.series.layers[2].add(w, c);
        // sum_i (1 x G1_CBH,1 ce^i) x (cc_i x G1_CBH,2): the first-position
        // entry acts on C-infinity(N), realized by the cc fields.
        for (auto& [w, c] : cbh.series.layers[1].terms())
            for (std::size_t i = 0; i < n; ++i) {
                Word w1 = w.first;
                w1.push_back(D(i));
                Word w2;
                w2.push_back(C(i));
                w2.insert(w2.end(), w.second.begin(), w.second.end());
                F.series.layers[2].add({std::move(w1), std::move(w2)}, c);
            }
        // (1/2) sum_ij (1 x ce^i ce^j) x (cc_i cc_j)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                F.add_term(2, {D(i), D(j)}, {C(i), C(j)}, Rational(1, 2));
    }
    return F;
}

// ----- coassociator -----

inline Tensor3 delta_otimes_id(const Tensor2& t) {
    Tensor3 r;
    for (auto& [w, c] : t.terms())
        for (auto& [d, cd] : free_coproduct(w.first).terms())
            r.add({d.first, d.second, w.second}, c * cd);
    return r;
}
inline Tensor3 id_otimes_delta(const Tensor2& t) {
    Tensor3 r;
    for (auto& [w, c] : t.terms())
        for (auto& [d, cd] : free_coproduct(w.second).terms())
            r.add({w.first, d.first, d.second}, c * cd);
    return r;
}
inline Tensor3 one_otimes(const Tensor2& t) {
    Tensor3 r;
    for (auto& [w, c] : t.terms()) r.add({Word{}, w.first, w.second}, c);
    return r;
}
inline Tensor3 otimes_one(const Tensor2& t) {
    Tensor3 r;
    for (auto& [w, c] : t.terms()) r.add({w.first, w.second, Word{}}, c);
    return r;
}

/// The boundary-like operator dP = 1xP - (Delta x id)P + (id x Delta)P - Px1.
inline Tensor3 coboundary_op(const Tensor2& p) {
    return one_otimes(p) - delta_otimes_id(p) + id_otimes_delta(p) - otimes_one(p);
}

/// phi = (1xF).(id x Delta)F.(Delta x id)F^{-1}.(F^{-1} x 1), computed in the
/// free word algebra (no rewriting; reduction happens only under a
/// realization).
inline Tensor3Series coassociator(const Cochain& Finv) {
    unsigned N = Finv.order();
    Tensor2Series F = tensor_series_inverse(Finv.series);
    auto lift = [&](const Tensor2Series& s, auto&& f) {
        Tensor3Series r(N);
        for (unsigned h = 0; h <= N; ++h) r.layers[h] = f(s.layers[h]);
        return r;
    };
    Tensor3Series a = lift(F, [](const Tensor2& t) { return one_otimes(t); });
    Tensor3Series b = lift(F, [](const Tensor2& t) { return id_otimes_delta(t); });
    Tensor3Series c = lift(Finv.series, [](const Tensor2& t) { return delta_otimes_id(t); });
    Tensor3Series d = lift(Finv.series, [](const Tensor2& t) { return otimes_one(t); });
    return a * b * c * d;
}

// ----- twisted coproduct on U(L) -----

inline bool word_has_primal(const Word& w, std::size_t n_primal) {
    for (auto l : w)
        if (l < n_primal) return true;
    return false;
}

/// Delta_F(x) = Delta x + hbar [Delta x, G1] + hbar^2([Delta x, G2] -
/// G1 [Delta x, G1]), slot-normalized in U(L) with dual letters first.
/// Returns the normalized hbar layers.
inline std::vector<Tensor2> twisted_coproduct(const Cochain& F, uint16_t x,
                                              FreeLieRewriter& rw) {
    unsigned N = std::min(F.order(), 2u);
    Tensor2 Dx;
    Dx.add({Word{x}, Word{}}, Rational(1));
    Dx.add({Word{}, Word{x}}, Rational(1));
    Tensor2 G1 = F.order() >= 1 ? F.series.layers[1] : Tensor2();
    auto comm = [&](const Tensor2& a, const Tensor2& b) {
        return tensor_mul(a, b) - tensor_mul(b, a);
    };
    std::vector<Tensor2> out(N + 1);
    out[0] = rw.normalize(Dx);
    if (N >= 1) out[1] = rw.normalize(comm(Dx, G1));
    if (N >= 2) {
        const Tensor2& G2 = F.series.layers[2];
        out[2] = rw.normalize(comm(Dx, G2) - tensor_mul(G1, comm(Dx, G1)));
    }
    return out;
}

/// True when no g-letter survives in any layer.
inline bool coproduct_closed(const std::vector<Tensor2>& layers, std::size_t n_primal) {
    for (auto& layer : layers)
        for (auto& [w, c] : layer.terms())
            if (word_has_primal(w.first, n_primal) || word_has_primal(w.second, n_primal))
                return false;
    return true;
}

/// Pairs Delta_F(x) against (e^v, e^w) through the logarithmic-coordinate
/// identification and returns the coefficient vector over dual generators:
/// entry j is ((Theta x Theta) Delta_F e^j)(e^v, e^w), one power of 1/hbar
/// per letter cancelling the cochain's hbar grading.
inline LieVec cbh_coproduct_pairing(const Cochain& F, const LieVec& v, const LieVec& w,
                                    FreeLieRewriter& rw) {
    std::size_t n = F.n_primal;
    LieVec out(n);
    for (std::size_t j = 0; j < n; ++j) {
        auto layers = twisted_coproduct(F, (uint16_t)(n + j), rw);
        Rational tot(0);
        for (auto& layer : layers) {
            for (auto& [tw, c] : layer.terms()) {
                Rational val = c;
                bool ok = true;
                for (auto l : tw.first) {
                    if (l < n) { ok = false; break; }
                    val *= v[l - n];
                }
                for (auto l : tw.second) {
                    if (l < n) { ok = false; break; }
                    val *= w[l - n];
                }
                if (!ok) throw std::domain_error("cbh_coproduct_pairing: g-letter survived");
                tot += val;
            }
        }
        out[j] = tot;
    }
    return out;
}

/// v + w + (1/2)[v,w] + (1/12)([v,[v,w]] + [[v,w],w]) in g.
inline LieVec cbh_series_order3(const LieAlgebra& g, const LieVec& v, const LieVec& w) {
    LieVec vw = g.bracket(v, w);
    LieVec t1 = g.bracket(v, vw);
    LieVec t2 = g.bracket(vw, w);
    LieVec r(g.dim());
    for (std::size_t i = 0; i < g.dim(); ++i)
        r[i] = v[i] + w[i] + Rational(1, 2) * vw[i] + Rational(1, 12) * (t1[i] + t2[i]);
    return r;
}

// ----- Duflo -----

/// Normal orders F^{-1} with all g-letters rightmost and deletes every term
/// still containing a g-letter. Layers of the reduced series.
inline std::vector<Tensor2> duflo_reduce(const Cochain& F, FreeLieRewriter& rw) {
    std::vector<Tensor2> out(F.order() + 1);
    for (unsigned h = 0; h <= F.order(); ++h) {
        for (auto& [tw, c] : rw.normalize(F.series.layers[h]).terms())
            if (!word_has_primal(tw.first, F.n_primal) &&
                !word_has_primal(tw.second, F.n_primal))
                out[h].add(tw, c);
    }
    return out;
}

/// (Delta gamma)(gamma^{-1} x gamma^{-1}) to hbar^2 with
/// gamma = exp(-(hbar^2/48) c), c = kappa_ij e^i e^j in the twist sign
/// convention. Words live over the double's letters.
inline std::vector<Tensor2> duflo_coboundary(const LieAlgebra& g, unsigned N = 2) {
    std::size_t n = g.dim();
    RatMatrix kap = twist_kappa(g);
    auto D = [&](std::size_t i) { return (uint16_t)(n + i); };
    Tensor2Series dgamma = tensor2_one(N);       // Delta gamma
    Tensor2Series ginv_ginv = tensor2_one(N);    // gamma^{-1} x gamma^{-1}
    if (N >= 2) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (kap(i, j).is_zero()) continue;
                Rational c = Rational(-1, 48) * kap(i, j);
                // Delta(e^i e^j) = e^ie^j x 1 + e^i x e^j + e^j x e^i + 1 x e^ie^j
                dgamma.layers[2].add({Word{D(i), D(j)}, Word{}}, c);
                dgamma.layers[2].add({Word{D(i)}, Word{D(j)}}, c);
                dgamma.layers[2].add({Word{D(j)}, Word{D(i)}}, c);
                dgamma.layers[2].add({Word{}, Word{D(i), D(j)}}, c);
                ginv_ginv.layers[2].add({Word{D(i), D(j)}, Word{}}, -c);
                ginv_ginv.layers[2].add({Word{}, Word{D(i), D(j)}}, -c);
            }
    }
    Tensor2Series prod = dgamma * ginv_ginv;
    std::vector<Tensor2> out(N + 1);
    for (unsigned h = 0; h <= N; ++h) out[h] = prod.layers[h];
    return out;
}

// ----- quasi-Lie bialgebra data -----

/// ad_X applied to a tensor word, slot-by-slot, letter-by-letter.
template <class T>
LinCombo<T> ad_on_tensor(const LieAlgebra& L, uint16_t X, const LinCombo<T>& t) {
    LinCombo<T> r;
    for (auto& [tw, c] : t.terms()) {
        std::size_t nslots;
        if constexpr (std::is_same_v<T, TensorWord2>) nslots = 2;
        else nslots = 3;
        for (std::size_t s = 0; s < nslots; ++s) {
            const Word* w;
            if constexpr (std::is_same_v<T, TensorWord2>)
                w = s == 0 ? &tw.first : &tw.second;
            else
                w = &tw[s];
            for (std::size_t p = 0; p < w->size(); ++p) {
                const LieVec& br = L.bracket(X, (*w)[p]);
                for (std::size_t k = 0; k < br.size(); ++k) {
                    if (br[k].is_zero()) continue;
                    T nt = tw;
                    if constexpr (std::is_same_v<T, TensorWord2>) {
                        (s == 0 ? nt.first : nt.second)[p] = (uint16_t)k;
                    } else {
                        nt[s][p] = (uint16_t)k;
                    }
                    r.add(nt, c * br[k]);
                }
            }
        }
    }
    return r;
}

struct QuasiLieData {
    std::vector<Tensor2> delta;  // cobracket per basis letter
    Tensor3 psi;                 // hbar^2 coassociator part
};

/// delta X = ad_X(G1) for every basis letter, psi = hbar^2 part of the
/// coassociator (slot-normalized so commutator words collapse to letters).
inline QuasiLieData quasi_lie_data(const Cochain& F) {
    const LieAlgebra& L = *F.covariance;
    QuasiLieData out;
    out.delta.resize(L.dim());
    const Tensor2& G1 = F.series.layers[1];
    for (std::size_t X = 0; X < L.dim(); ++X)
        out.delta[X] = ad_on_tensor(L, (uint16_t)X, G1);
    Tensor3Series phi = coassociator(F);
    if (phi.order >= 2) {
        FreeLieRewriter rw(L);
        for (auto& [tw, c] : phi.layers[2].terms()) {
            const auto& n0 = rw.normalize(tw[0]);
            const auto& n1 = rw.normalize(tw[1]);
            const auto& n2 = rw.normalize(tw[2]);
            for (auto& [w0, c0] : n0.terms())
                for (auto& [w1, c1] : n1.terms())
                    for (auto& [w2, c2] : n2.terms())
                        out.psi.add({w0, w1, w2}, c * c0 * c1 * c2);
        }
    }
    return out;
}

/// Cojacobiator (delta x id) delta X + cyclic, for single-letter cobrackets.
inline Tensor3 cojacobiator(const std::vector<Tensor2>& delta, uint16_t X) {
    Tensor3 xi;
    for (auto& [tw, c] : delta[X].terms()) {
        if (tw.first.size() != 1)
            throw std::domain_error("cojacobiator: needs letter slots");
        for (auto& [d, cd] : delta[tw.first[0]].terms())
            xi.add({d.first, d.second, tw.second}, c * cd);
    }
    Tensor3 r = xi;
    for (auto& [tw, c] : xi.terms()) {
        r.add({tw[2], tw[0], tw[1]}, c);
        r.add({tw[1], tw[2], tw[0]}, c);
    }
    return r;
}

} // namespace twistlab
