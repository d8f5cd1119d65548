#pragma once

#include "twistlab/rational.hpp"

#include <array>
#include <map>
#include <vector>

namespace twistlab {

/// A word over a Lie algebra's basis letters (element of the tensor algebra
/// before any rewriting).
using Word = std::vector<uint16_t>;

inline Word concat(const Word& a, const Word& b) {
    Word r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

/// Formal linear combination with rational coefficients; zero coefficients
/// are never stored.
template <class K>
class LinCombo {
public:
    using Map = std::map<K, Rational>;

    LinCombo() = default;

    static LinCombo single(K k, Rational c = Rational(1)) {
        LinCombo r;
        if (!c.is_zero()) r.m_.emplace(std::move(k), std::move(c));
        return r;
    }

    const Map& terms() const { return m_; }
    bool is_zero() const { return m_.empty(); }
    std::size_t size() const { return m_.size(); }

    void add(const K& k, const Rational& c) {
        if (c.is_zero()) return;
        auto it = m_.find(k);
        if (it == m_.end()) {
            m_.emplace(k, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) m_.erase(it);
        }
    }

    friend LinCombo operator+(const LinCombo& a, const LinCombo& b) {
        LinCombo r = a;
        for (auto& [k, c] : b.m_) r.add(k, c);
        return r;
    }
    friend LinCombo operator-(const LinCombo& a, const LinCombo& b) {
        LinCombo r = a;
        for (auto& [k, c] : b.m_) r.add(k, -c);
        return r;
    }
    friend LinCombo operator*(const Rational& c, const LinCombo& a) {
        LinCombo r;
        if (c.is_zero()) return r;
        for (auto& [k, v] : a.m_) r.m_.emplace(k, c * v);
        return r;
    }
    LinCombo& operator+=(const LinCombo& o) {
        for (auto& [k, c] : o.m_) add(k, c);
        return *this;
    }
    LinCombo& operator-=(const LinCombo& o) {
        for (auto& [k, c] : o.m_) add(k, -c);
        return *this;
    }

    friend bool operator==(const LinCombo& a, const LinCombo& b) { return a.m_ == b.m_; }
    friend bool operator!=(const LinCombo& a, const LinCombo& b) { return !(a == b); }

private:
    Map m_;
};

/// k-fold tensor words (slots are free-algebra words).
using TensorWord2 = std::pair<Word, Word>;
using TensorWord3 = std::array<Word, 3>;

using Tensor2 = LinCombo<TensorWord2>;
using Tensor3 = LinCombo<TensorWord3>;

/// Slot-wise free multiplication in U(L)^{ox 2}.
inline Tensor2 tensor_mul(const Tensor2& a, const Tensor2& b) {
    Tensor2 r;
    for (auto& [wa, ca] : a.terms())
        for (auto& [wb, cb] : b.terms())
            r.add({concat(wa.first, wb.first), concat(wa.second, wb.second)}, ca * cb);
    return r;
}

inline Tensor3 tensor_mul(const Tensor3& a, const Tensor3& b) {
    Tensor3 r;
    for (auto& [wa, ca] : a.terms())
        for (auto& [wb, cb] : b.terms())
            r.add({concat(wa[0], wb[0]), concat(wa[1], wb[1]), concat(wa[2], wb[2])}, ca * cb);
    return r;
}

/// Free coproduct of a word: every generator is primitive, extended
/// multiplicatively.
inline Tensor2 free_coproduct(const Word& w) {
    Tensor2 r = Tensor2::single({Word{}, Word{}});
    for (auto l : w) {
        Tensor2 letter;
        letter.add({Word{l}, Word{}}, Rational(1));
        letter.add({Word{}, Word{l}}, Rational(1));
        r = tensor_mul(r, letter);
    }
    return r;
}

/// hbar-layered tensor series with fixed truncation order.
template <class T>
struct TensorSeries {
    unsigned order = 0;
    std::vector<LinCombo<T>> layers; // size order+1

    explicit TensorSeries(unsigned N = 0) : order(N), layers(N + 1) {}

    bool is_zero() const {
        for (auto& l : layers)
            if (!l.is_zero()) return false;
        return true;
    }

    friend TensorSeries operator*(const TensorSeries& a, const TensorSeries& b) {
        TensorSeries r(a.order);
        for (unsigned i = 0; i <= a.order; ++i)
            for (unsigned j = 0; i + j <= b.order && i + j <= a.order; ++j) {
                if (a.layers[i].is_zero() || b.layers[j].is_zero()) continue;
                for (auto& [wa, ca] : a.layers[i].terms())
                    for (auto& [wb, cb] : b.layers[j].terms()) {
                        if constexpr (std::is_same_v<T, TensorWord2>) {
                            r.layers[i + j].add(
                                {concat(wa.first, wb.first), concat(wa.second, wb.second)},
                                ca * cb);
                        } else {
                            r.layers[i + j].add(
                                {concat(wa[0], wb[0]), concat(wa[1], wb[1]), concat(wa[2], wb[2])},
                                ca * cb);
                        }
                    }
            }
        return r;
    }

    friend TensorSeries operator+(const TensorSeries& a, const TensorSeries& b) {
        TensorSeries r = a;
        for (unsigned i = 0; i <= std::min(a.order, b.order); ++i) r.layers[i] += b.layers[i];
        return r;
    }
    friend TensorSeries operator-(const TensorSeries& a, const TensorSeries& b) {
        TensorSeries r = a;
        for (unsigned i = 0; i <= std::min(a.order, b.order); ++i) r.layers[i] -= b.layers[i];
        return r;
    }
};

using Tensor2Series = TensorSeries<TensorWord2>;
using Tensor3Series = TensorSeries<TensorWord3>;

inline Tensor2Series tensor2_one(unsigned N) {
    Tensor2Series s(N);
    s.layers[0].add({Word{}, Word{}}, Rational(1));
    return s;
}
inline Tensor3Series tensor3_one(unsigned N) {
    Tensor3Series s(N);
    s.layers[0].add({Word{}, Word{}, Word{}}, Rational(1));
    return s;
}

/// Geometric-series inverse of a tensor series with unit constant layer.
template <class T>
TensorSeries<T> tensor_series_inverse(const TensorSeries<T>& a) {
    TensorSeries<T> one(a.order);
    if constexpr (std::is_same_v<T, TensorWord2>)
        one.layers[0].add({Word{}, Word{}}, Rational(1));
    else
        one.layers[0].add({Word{}, Word{}, Word{}}, Rational(1));
    if (!(a.layers[0] - one.layers[0]).is_zero())
        throw std::domain_error("tensor series inverse needs constant term 1x..x1");
    TensorSeries<T> u = one - a; // no constant layer
    TensorSeries<T> r = one, p = one;
    for (unsigned k = 1; k <= a.order; ++k) {
        p = p * u;
        r = r + p;
    }
    return r;
}

} // namespace twistlab
