#pragma once

#include "twistlab/lie.hpp"
#include "twistlab/poly.hpp"
#include "twistlab/series.hpp"
#include "twistlab/words.hpp"

#include <map>
#include <memory>

namespace twistlab {

/// Element of U_hbar(g) in the normal-ordered PBW basis: an hbar series whose
/// coefficients are "polynomials" in the basis symbols (exponent tuples stand
/// for the ordered monomials e_1^{a_1}...e_n^{a_n}).
using UElement = HSeries<Poly>;

/// Element of S(g)[hbar] (commutative monomial canonical form). Same
/// container as UElement; the operations below keep the semantics straight.
using SymElement = HSeries<Poly>;

inline Word exponents_to_word(const Exponents& e) {
    Word w;
    for (std::size_t i = 0; i < e.size(); ++i)
        for (uint32_t k = 0; k < e[i]; ++k) w.push_back((uint16_t)i);
    return w;
}

/// Rewriting system for U_hbar(g): adjacent out-of-order pairs
/// e_j e_i (j>i) -> e_i e_j + hbar [e_j, e_i], leftmost first, memoized.
class PbwRewriter {
public:
    PbwRewriter(const LieAlgebra& L, unsigned order)
        : L_(&L), N_(order), ring_(PolyRing::make(L.basis())) {}

    const LieAlgebra& algebra() const { return *L_; }
    unsigned order() const { return N_; }
    const std::shared_ptr<const PolyRing>& ring() const { return ring_; }

    UElement zero() const { return UElement(N_, Poly::zero(ring_)); }
    UElement one() const {
        UElement u = zero();
        u[0] = Poly::one(ring_);
        return u;
    }
    UElement monomial(const Exponents& e, unsigned h = 0, Rational c = Rational(1)) const {
        UElement u = zero();
        if (h <= N_) u[h] = Poly::monomial(ring_, e, std::move(c));
        return u;
    }

    const UElement& normalize(const Word& w) {
        auto it = memo_.find(w);
        if (it != memo_.end()) return it->second;
        UElement result = zero();
        bool rewritten = false;
        for (std::size_t p = 0; p + 1 < w.size(); ++p) {
            if (w[p] > w[p + 1]) {
                Word swapped = w;
                std::swap(swapped[p], swapped[p + 1]);
                result = result + normalize(swapped);
                const LieVec& br = L_->bracket(w[p], w[p + 1]);
                for (std::size_t k = 0; k < br.size(); ++k) {
                    if (br[k].is_zero()) continue;
                    Word rep;
                    rep.reserve(w.size() - 1);
                    rep.insert(rep.end(), w.begin(), w.begin() + p);
                    rep.push_back((uint16_t)k);
                    rep.insert(rep.end(), w.begin() + p + 2, w.end());
                    const UElement& sub = normalize(rep);
                    for (unsigned h = 0; h + 1 <= N_; ++h)
                        result[h + 1] += br[k] * sub[h];
                }
                rewritten = true;
                break; // leftmost out-of-order pair only
            }
        }
        if (!rewritten) {
            Exponents e(L_->dim(), 0);
            for (auto l : w) e[l] += 1;
            result[0] = Poly::monomial(ring_, e, Rational(1));
        }
        return memo_.emplace(w, std::move(result)).first->second;
    }

    UElement mul(const UElement& a, const UElement& b) {
        UElement r = zero();
        for (unsigned ha = 0; ha <= N_; ++ha) {
            if (a[ha].is_zero()) continue;
            for (unsigned hb = 0; ha + hb <= N_; ++hb) {
                if (b[hb].is_zero()) continue;
                for (auto& [ea, ca] : a[ha].terms()) {
                    for (auto& [eb, cb] : b[hb].terms()) {
                        Word w = exponents_to_word(ea);
                        Word wb = exponents_to_word(eb);
                        w.insert(w.end(), wb.begin(), wb.end());
                        const UElement& nrm = normalize(w);
                        Rational c = ca * cb;
                        for (unsigned h = 0; ha + hb + h <= N_; ++h)
                            r[ha + hb + h] += c * nrm[h];
                    }
                }
            }
        }
        return r;
    }

    /// All rewriting orders, for the confluence check: every sequence of
    /// position choices must land on the same normal form.
    std::vector<UElement> normalize_all_orders(const Word& w) {
        std::vector<UElement> results;
        std::vector<std::size_t> positions;
        for (std::size_t p = 0; p + 1 < w.size(); ++p)
            if (w[p] > w[p + 1]) positions.push_back(p);
        if (positions.empty()) {
            Exponents e(L_->dim(), 0);
            for (auto l : w) e[l] += 1;
            results.push_back(monomial(e));
            return results;
        }
        for (auto p : positions) {
            Word swapped = w;
            std::swap(swapped[p], swapped[p + 1]);
            for (auto& tail : normalize_all_orders(swapped)) {
                UElement r = tail;
                const LieVec& br = L_->bracket(w[p], w[p + 1]);
                for (std::size_t k = 0; k < br.size(); ++k) {
                    if (br[k].is_zero()) continue;
                    Word rep;
                    rep.insert(rep.end(), w.begin(), w.begin() + p);
                    rep.push_back((uint16_t)k);
                    rep.insert(rep.end(), w.begin() + p + 2, w.end());
                    const UElement& sub = normalize(rep);
                    for (unsigned h = 0; h + 1 <= N_; ++h) r[h + 1] += br[k] * sub[h];
                }
                results.push_back(std::move(r));
            }
        }
        return results;
    }

private:
    const LieAlgebra* L_;
    unsigned N_;
    std::shared_ptr<const PolyRing> ring_;
    std::map<Word, UElement> memo_;
};

/// Rewriting in the classical enveloping algebra U(L): yz = zy + [y,z] with
/// no hbar grading. A letter rank permutes the normal order (the coadjoint
/// doubles put dual letters first so "no g-letters" is visible on normal
/// forms).
class FreeLieRewriter {
public:
    FreeLieRewriter(const LieAlgebra& L, std::vector<uint16_t> rank = {})
        : L_(&L), rank_(std::move(rank)) {
        if (rank_.empty()) {
            rank_.resize(L.dim());
            for (std::size_t i = 0; i < L.dim(); ++i) rank_[i] = (uint16_t)i;
        }
    }

    const LieAlgebra& algebra() const { return *L_; }

    const LinCombo<Word>& normalize(const Word& w) {
        auto it = memo_.find(w);
        if (it != memo_.end()) return it->second;
        LinCombo<Word> result;
        bool rewritten = false;
        for (std::size_t p = 0; p + 1 < w.size(); ++p) {
            if (rank_[w[p]] > rank_[w[p + 1]]) {
                Word swapped = w;
                std::swap(swapped[p], swapped[p + 1]);
                result += normalize(swapped);
                const LieVec& br = L_->bracket(w[p], w[p + 1]);
                for (std::size_t k = 0; k < br.size(); ++k) {
                    if (br[k].is_zero()) continue;
                    Word rep;
                    rep.insert(rep.end(), w.begin(), w.begin() + p);
                    rep.push_back((uint16_t)k);
                    rep.insert(rep.end(), w.begin() + p + 2, w.end());
                    result += br[k] * normalize(rep);
                }
                rewritten = true;
                break;
            }
        }
        if (!rewritten) result = LinCombo<Word>::single(w);
        return memo_.emplace(w, std::move(result)).first->second;
    }

    LinCombo<TensorWord2> normalize(const LinCombo<TensorWord2>& t) {
        LinCombo<TensorWord2> r;
        for (auto& [tw, c] : t.terms()) {
            const auto& n1 = normalize(tw.first);
            const auto& n2 = normalize(tw.second);
            for (auto& [w1, c1] : n1.terms())
                for (auto& [w2, c2] : n2.terms()) r.add({w1, w2}, c * c1 * c2);
        }
        return r;
    }

private:
    const LieAlgebra* L_;
    std::vector<uint16_t> rank_;
    std::map<Word, LinCombo<Word>> memo_;
};

/// Rank vector placing the dual letters of a g |x g* double before the primal
/// ones (normal forms read e^... e...).
inline std::vector<uint16_t> dual_first_rank(std::size_t n_primal, std::size_t dim) {
    std::vector<uint16_t> rank(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        if (i < n_primal)
            rank[i] = (uint16_t)(n_primal + i); // primal letters sort last
        else if (i < 2 * n_primal)
            rank[i] = (uint16_t)(i - n_primal); // dual letters first
        else
            rank[i] = (uint16_t)i; // cc sector keeps its place
    }
    return rank;
}

} // namespace twistlab
