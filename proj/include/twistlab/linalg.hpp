#pragma once

#include "twistlab/rational.hpp"

#include <stdexcept>
#include <vector>

namespace twistlab {

/// Dense rational matrix, just big enough for the exact linear algebra the
/// suites need (Killing inverses, invariant-map nullspaces).
class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(std::size_t r, std::size_t c) : rows_(r), cols_(c), a_(r * c) {}

    static RatMatrix identity(std::size_t n) {
        RatMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("RatMatrix: shape");
        RatMatrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (a(i, k).is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    r(i, j) += a(i, k) * b(k, j);
            }
        return r;
    }

    Rational trace() const {
        Rational t(0);
        for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
        return t;
    }

    bool is_zero() const {
        for (auto& x : a_)
            if (!x.is_zero()) return false;
        return true;
    }

    friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

    /// Gauss-Jordan inverse; throws on a singular matrix.
    RatMatrix inverse() const {
        if (rows_ != cols_) throw std::invalid_argument("RatMatrix: not square");
        std::size_t n = rows_;
        RatMatrix A = *this, R = identity(n);
        for (std::size_t c = 0; c < n; ++c) {
            std::size_t p = c;
            while (p < n && A(p, c).is_zero()) ++p;
            if (p == n) throw std::domain_error("RatMatrix: singular");
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(A(c, j), A(p, j));
                std::swap(R(c, j), R(p, j));
            }
            Rational inv = A(c, c).inverse();
            for (std::size_t j = 0; j < n; ++j) {
                A(c, j) *= inv;
                R(c, j) *= inv;
            }
            for (std::size_t r = 0; r < n; ++r) {
                if (r == c || A(r, c).is_zero()) continue;
                Rational f = A(r, c);
                for (std::size_t j = 0; j < n; ++j) {
                    A(r, j) -= f * A(c, j);
                    R(r, j) -= f * R(c, j);
                }
            }
        }
        return R;
    }

    /// Basis of the right nullspace (columns of the returned matrix).
    std::vector<std::vector<Rational>> nullspace() const {
        RatMatrix A = *this;
        std::size_t n = rows_, m = cols_;
        std::vector<std::size_t> pivot_col;
        std::size_t r = 0;
        for (std::size_t c = 0; c < m && r < n; ++c) {
            std::size_t p = r;
            while (p < n && A(p, c).is_zero()) ++p;
            if (p == n) continue;
            for (std::size_t j = 0; j < m; ++j) std::swap(A(r, j), A(p, j));
            Rational inv = A(r, c).inverse();
            for (std::size_t j = 0; j < m; ++j) A(r, j) *= inv;
            for (std::size_t q = 0; q < n; ++q) {
                if (q == r || A(q, c).is_zero()) continue;
                Rational f = A(q, c);
                for (std::size_t j = 0; j < m; ++j) A(q, j) -= f * A(r, j);
            }
            pivot_col.push_back(c);
            ++r;
        }
        std::vector<bool> is_pivot(m, false);
        for (auto c : pivot_col) is_pivot[c] = true;
        std::vector<std::vector<Rational>> basis;
        for (std::size_t free = 0; free < m; ++free) {
            if (is_pivot[free]) continue;
            std::vector<Rational> v(m);
            v[free] = Rational(1);
            for (std::size_t k = 0; k < pivot_col.size(); ++k)
                v[pivot_col[k]] = -A(k, free);
            basis.push_back(std::move(v));
        }
        return basis;
    }

private:
    std::size_t rows_, cols_;
    std::vector<Rational> a_;
};

} // namespace twistlab
