#pragma once

#include "twistlab/linalg.hpp"
#include "twistlab/rational.hpp"

#include <array>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace twistlab {

/// A linear combination of basis elements, indexed by basis position.
using LieVec = std::vector<Rational>;

struct JacobiViolation {
    std::size_t i, j, k;
};

/// Finite-dimensional Lie algebra given by structure constants over Q:
/// [e_i, e_j] = sum_k f[i][j][k] e_k.
class LieAlgebra {
public:
    LieAlgebra(std::string name, std::vector<std::string> basis,
               std::vector<std::vector<LieVec>> f)
        : name_(std::move(name)), basis_(std::move(basis)), f_(std::move(f)) {
        validate_antisymmetry();
        auto bad = jacobi_violations();
        if (!bad.empty()) {
            std::ostringstream os;
            os << name_ << ": Jacobi identity fails at basis triple (" << bad[0].i + 1 << ","
               << bad[0].j + 1 << "," << bad[0].k + 1 << ")";
            throw std::invalid_argument(os.str());
        }
    }

    const std::string& name() const { return name_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<std::string>& basis() const { return basis_; }
    const std::string& basis_name(std::size_t i) const { return basis_.at(i); }

    std::optional<std::size_t> basis_index(const std::string& nm) const {
        for (std::size_t i = 0; i < basis_.size(); ++i)
            if (basis_[i] == nm) return i;
        return std::nullopt;
    }

    /// Structure constant f_{ij}^k.
    const Rational& f(std::size_t i, std::size_t j, std::size_t k) const {
        return f_[i][j][k];
    }
    /// [e_i, e_j] as a coefficient vector.
    const LieVec& bracket(std::size_t i, std::size_t j) const { return f_[i][j]; }

    LieVec bracket(const LieVec& a, const LieVec& b) const {
        LieVec r(dim());
        for (std::size_t i = 0; i < dim(); ++i) {
            if (a[i].is_zero()) continue;
            for (std::size_t j = 0; j < dim(); ++j) {
                if (b[j].is_zero()) continue;
                for (std::size_t k = 0; k < dim(); ++k)
                    r[k] += a[i] * b[j] * f_[i][j][k];
            }
        }
        return r;
    }

    LieVec basis_vec(std::size_t i) const {
        LieVec v(dim());
        v[i] = Rational(1);
        return v;
    }

    /// ad_{e_i} as a matrix: (ad_i)_{kj} = f_{ij}^k.
    RatMatrix ad_matrix(std::size_t i) const {
        RatMatrix m(dim(), dim());
        for (std::size_t j = 0; j < dim(); ++j)
            for (std::size_t k = 0; k < dim(); ++k)
                m(k, j) = f_[i][j][k];
        return m;
    }

    std::vector<JacobiViolation> jacobi_violations() const {
        std::vector<JacobiViolation> out;
        std::size_t n = dim();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                for (std::size_t k = j + 1; k < n; ++k) {
                    LieVec s = bracket(bracket(i, j), basis_vec(k));
                    LieVec t = bracket(bracket(j, k), basis_vec(i));
                    LieVec u = bracket(bracket(k, i), basis_vec(j));
                    bool ok = true;
                    for (std::size_t l = 0; l < n; ++l)
                        if (!(s[l] + t[l] + u[l]).is_zero()) { ok = false; break; }
                    if (!ok) out.push_back({i, j, k});
                }
        return out;
    }

    /// Killing form kappa_{ij} = trace(ad_i ad_j).
    RatMatrix killing_form() const {
        std::size_t n = dim();
        std::vector<RatMatrix> ads;
        ads.reserve(n);
        for (std::size_t i = 0; i < n; ++i) ads.push_back(ad_matrix(i));
        RatMatrix k(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                Rational t = (ads[i] * ads[j]).trace();
                k(i, j) = t;
                k(j, i) = t;
            }
        return k;
    }

private:
    LieVec bracket(const LieVec& a, std::size_t j) const {
        LieVec b(dim());
        b[j] = Rational(1);
        return bracket(a, b);
    }

    void validate_antisymmetry() const {
        std::size_t n = dim();
        if (f_.size() != n) throw std::invalid_argument(name_ + ": structure table arity");
        for (std::size_t i = 0; i < n; ++i) {
            if (f_[i].size() != n) throw std::invalid_argument(name_ + ": structure table arity");
            for (std::size_t j = 0; j < n; ++j) {
                if (f_[i][j].size() != n)
                    throw std::invalid_argument(name_ + ": structure table arity");
                for (std::size_t k = 0; k < n; ++k)
                    if (!(f_[i][j][k] + f_[j][i][k]).is_zero())
                        throw std::invalid_argument(name_ + ": antisymmetry violated at (" +
                                                    std::to_string(i + 1) + "," +
                                                    std::to_string(j + 1) + ")");
            }
        }
    }

    std::string name_;
    std::vector<std::string> basis_;
    std::vector<std::vector<LieVec>> f_;
};

namespace detail {

class BracketBuilder {
public:
    explicit BracketBuilder(std::size_t n) : n_(n),
        f_(n, std::vector<LieVec>(n, LieVec(n))) {}

    void set(std::size_t i, std::size_t j, std::size_t k, Rational c) {
        f_[i][j][k] += c;
        f_[j][i][k] -= std::move(c);
    }

    std::vector<std::vector<LieVec>> take() { return std::move(f_); }

private:
    std::size_t n_;
    std::vector<std::vector<LieVec>> f_;
};

// 3d cross product on indices: e_i x e_j = eps_{ijk} e_k.
inline std::optional<std::pair<std::size_t, int>> cross3(std::size_t i, std::size_t j) {
    if (i == j) return std::nullopt;
    static const int eps[3][3][3] = {{{0,0,0},{0,0,1},{0,-1,0}},
                                     {{0,0,-1},{0,0,0},{1,0,0}},
                                     {{0,1,0},{-1,0,0},{0,0,0}}};
    for (std::size_t k = 0; k < 3; ++k)
        if (eps[i][j][k] != 0) return std::make_pair(k, eps[i][j][k]);
    return std::nullopt;
}

} // namespace detail

inline LieAlgebra make_abelian(std::size_t n) {
    std::vector<std::string> basis;
    for (std::size_t i = 0; i < n; ++i) basis.push_back("e" + std::to_string(i + 1));
    detail::BracketBuilder b(n);
    return LieAlgebra("abelian" + std::to_string(n), std::move(basis), b.take());
}

inline LieAlgebra make_heisenberg3() {
    detail::BracketBuilder b(3);
    b.set(0, 1, 2, Rational(1)); // [p,q] = c
    return LieAlgebra("heisenberg3", {"p", "q", "c"}, b.take());
}

/// sl2 with basis H,E,F: [H,E]=2E, [H,F]=-2F, [E,F]=H.
inline LieAlgebra make_sl2() {
    detail::BracketBuilder b(3);
    b.set(0, 1, 1, Rational(2));
    b.set(0, 2, 2, Rational(-2));
    b.set(1, 2, 0, Rational(1));
    return LieAlgebra("sl2", {"H", "E", "F"}, b.take());
}

/// b+ with basis t,x: [t,x] = x.
inline LieAlgebra make_bplus() {
    detail::BracketBuilder b(2);
    b.set(0, 1, 1, Rational(1));
    return LieAlgebra("bplus", {"t", "x"}, b.take());
}

/// sl3 in the Cartan-Weyl basis t1=E11-E22, t2=E22-E33 plus the six
/// elementary root vectors. Structure constants are generated from 3x3
/// matrix commutators.
inline LieAlgebra make_sl3() {
    using Mat3 = std::array<std::array<Rational, 3>, 3>;
    auto unit = [](std::size_t i, std::size_t j) {
        Mat3 m{};
        m[i][j] = Rational(1);
        return m;
    };
    auto sub = [](const Mat3& a, const Mat3& b) {
        Mat3 r{};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r[i][j] = a[i][j] - b[i][j];
        return r;
    };
    auto mul = [](const Mat3& a, const Mat3& b) {
        Mat3 r{};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                for (int k = 0; k < 3; ++k) r[i][j] += a[i][k] * b[k][j];
        return r;
    };
    std::vector<Mat3> basis_m = {
        sub(unit(0, 0), unit(1, 1)), sub(unit(1, 1), unit(2, 2)),
        unit(0, 1), unit(1, 0), unit(1, 2), unit(2, 1), unit(0, 2), unit(2, 0)};
    std::vector<std::string> names = {"t1", "t2", "E12", "E21", "E23", "E32", "E13", "E31"};
    // Express a traceless matrix in the basis: diagonal part via t1,t2, the rest directly.
    auto coords = [&](const Mat3& m) {
        LieVec v(8);
        v[0] = m[0][0];
        v[1] = m[0][0] + m[1][1];
        v[2] = m[0][1];
        v[3] = m[1][0];
        v[4] = m[1][2];
        v[5] = m[2][1];
        v[6] = m[0][2];
        v[7] = m[2][0];
        return v;
    };
    detail::BracketBuilder b(8);
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = i + 1; j < 8; ++j) {
            Mat3 c = sub(mul(basis_m[i], basis_m[j]), mul(basis_m[j], basis_m[i]));
            LieVec v = coords(c);
            for (std::size_t k = 0; k < 8; ++k)
                if (!v[k].is_zero()) b.set(i, j, k, v[k]);
        }
    return LieAlgebra("sl3", std::move(names), b.take());
}

/// Abstract so(1,3): [Y_i,Y_j] = -Y_{ixj}, [Y_i,X_j] = -X_{ixj}, [X_i,X_j] = Y_{ixj}.
/// Basis order X1,X2,X3,Y1,Y2,Y3.
inline LieAlgebra make_so13() {
    detail::BracketBuilder b(6);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j) {
            auto c = detail::cross3(i, j);
            b.set(3 + i, 3 + j, 3 + c->first, Rational(-c->second)); // [Y,Y] = -Y
            b.set(i, j, 3 + c->first, Rational(c->second));          // [X,X] = +Y
        }
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            auto c = detail::cross3(i, j);
            if (c) b.set(3 + i, j, c->first, Rational(-c->second)); // [Y_i,X_j] = -X_{ixj}
        }
    return LieAlgebra("so13_abstract",
                      {"X1", "X2", "X3", "Y1", "Y2", "Y3"}, b.take());
}

enum class SemidirectKind { CoadjointDouble, MackeyTriple };

/// g |x g*  (dimension 2n): [e_i,e_j] as in g, [e_i,e^j] = -e^j o ad_{e_i},
/// [e^i,e^j] = 0.  For the Mackey triple, a further central-against-the-rest
/// copy cc with the g bracket among itself.
inline LieAlgebra semidirect_extend(const LieAlgebra& g, SemidirectKind kind) {
    std::size_t n = g.dim();
    std::size_t N = kind == SemidirectKind::CoadjointDouble ? 2 * n : 3 * n;
    detail::BracketBuilder b(N);
    // primal sector
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (!g.f(i, j, k).is_zero()) b.set(i, j, k, g.f(i, j, k));
    // [e_i, e^j] = - sum_k f_{ikj} e^k
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (!g.f(i, k, j).is_zero()) b.set(i, n + j, n + k, -g.f(i, k, j));
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back(g.basis_name(i));
    for (std::size_t i = 0; i < n; ++i) names.push_back(g.basis_name(i) + "^");
    std::string nm = g.name();
    if (kind == SemidirectKind::CoadjointDouble) {
        return LieAlgebra(nm + ":gxg*", std::move(names), b.take());
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (!g.f(i, j, k).is_zero()) b.set(2 * n + i, 2 * n + j, 2 * n + k, g.f(i, j, k));
    for (std::size_t i = 0; i < n; ++i) names.push_back("c" + g.basis_name(i));
    return LieAlgebra(nm + ":gxg*+g", std::move(names), b.take());
}

/// Parses the structure-constant definition format:
///   dim N
///   basis n1 n2 ...
///   brackets
///   i j -> (k, p/q) (k2, p2/q2) ...
/// Indices are 1-based and only i<j entries are accepted; duplicates rejected.
inline LieAlgebra parse_algebra(std::istream& in, const std::string& name) {
    std::size_t n = 0;
    std::vector<std::string> basis;
    bool in_brackets = false;
    std::map<std::pair<std::size_t, std::size_t>, bool> seen;
    std::unique_ptr<detail::BracketBuilder> builder;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok == "dim") {
            if (!(ls >> n) || n == 0) throw std::invalid_argument(name + ": bad dim");
            builder = std::make_unique<detail::BracketBuilder>(n);
        } else if (tok == "basis") {
            std::string b;
            while (ls >> b) basis.push_back(b);
        } else if (tok == "brackets") {
            in_brackets = true;
        } else if (in_brackets) {
            if (!builder) throw std::invalid_argument(name + ": brackets before dim");
            std::size_t i = 0, j = 0;
            std::string arrow;
            i = std::stoul(tok);
            if (!(ls >> j >> arrow) || arrow != "->")
                throw std::invalid_argument(name + ": malformed bracket line '" + line + "'");
            if (i < 1 || j < 1 || i > n || j > n)
                throw std::invalid_argument(name + ": bracket index out of range");
            if (i >= j)
                throw std::invalid_argument(name + ": only i<j bracket entries accepted");
            if (seen.count({i, j}))
                throw std::invalid_argument(name + ": duplicate bracket entry (" +
                                            std::to_string(i) + "," + std::to_string(j) + ")");
            seen[{i, j}] = true;
            std::string rest;
            std::getline(ls, rest);
            std::size_t pos = 0;
            while ((pos = rest.find('(', pos)) != std::string::npos) {
                auto comma = rest.find(',', pos);
                auto close = rest.find(')', pos);
                if (comma == std::string::npos || close == std::string::npos || comma > close)
                    throw std::invalid_argument(name + ": malformed bracket term");
                std::size_t k = std::stoul(rest.substr(pos + 1, comma - pos - 1));
                std::string cs = rest.substr(comma + 1, close - comma - 1);
                while (!cs.empty() && cs.front() == ' ') cs.erase(cs.begin());
                while (!cs.empty() && cs.back() == ' ') cs.pop_back();
                if (k < 1 || k > n)
                    throw std::invalid_argument(name + ": bracket target out of range");
                builder->set(i - 1, j - 1, k - 1, Rational::parse(cs));
                pos = close + 1;
            }
        } else {
            throw std::invalid_argument(name + ": unexpected token '" + tok + "'");
        }
    }
    if (!builder) throw std::invalid_argument(name + ": missing dim");
    if (basis.empty())
        for (std::size_t i = 0; i < n; ++i) basis.push_back("e" + std::to_string(i + 1));
    if (basis.size() != n) throw std::invalid_argument(name + ": basis/dim mismatch");
    return LieAlgebra(name, std::move(basis), builder->take());
}

/// Catalogue lookup or definition-file load.
inline LieAlgebra load_algebra(const std::string& source) {
    if (source == "sl2") return make_sl2();
    if (source == "sl3") return make_sl3();
    if (source == "bplus" || source == "b+") return make_bplus();
    if (source == "heisenberg3") return make_heisenberg3();
    if (source == "so13_abstract" || source == "so13") return make_so13();
    if (source.rfind("abelian", 0) == 0) {
        std::size_t n = std::stoul(source.substr(7));
        return make_abelian(n);
    }
    std::ifstream f(source);
    if (!f) throw std::invalid_argument("load_algebra: unknown catalogue name or unreadable file '" +
                                        source + "'");
    return parse_algebra(f, source);
}

} // namespace twistlab
