#pragma once

#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "lmforge/exactalg/matrix.hpp"

namespace lmforge {

namespace detail {

inline bool simple_pivot(const Rational&) { return true; }
inline bool simple_pivot(const RatFunc& x) { return x.is_constant(); }

}  // namespace detail

template <class T>
struct Rref {
    Matrix<T> reduced;
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

// Gauss-Jordan over a field.
template <class T>
Rref<T> rref(Matrix<T> a) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t pick = a.rows();
        for (std::size_t i = row; i < a.rows(); ++i) {
            if (is_zero(a(i, col))) continue;
            if (pick == a.rows()) pick = i;
            if (detail::simple_pivot(a(i, col))) {
                pick = i;
                break;
            }
        }
        if (pick == a.rows()) continue;
        if (pick != row)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(pick, j), a(row, j));
        T inv = T(1) / a(row, col);
        for (std::size_t j = col; j < a.cols(); ++j)
            if (!is_zero(a(row, j))) a(row, j) = a(row, j) * inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == row || is_zero(a(i, col))) continue;
            T f = a(i, col);
            for (std::size_t j = col; j < a.cols(); ++j)
                if (!is_zero(a(row, j))) a(i, j) -= f * a(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(a), std::move(pivots)};
}

template <class T>
std::size_t rank(const Matrix<T>& m) {
    return rref(m).pivots.size();
}

// Columns form a basis of the right kernel.
template <class T>
Matrix<T> kernel_basis(const Matrix<T>& m) {
    auto [r, pivots] = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::size_t> free;
    for (std::size_t j = 0; j < m.cols(); ++j)
        if (!is_pivot[j]) free.push_back(j);
    Matrix<T> k(m.cols(), free.size());
    for (std::size_t f = 0; f < free.size(); ++f) {
        k(free[f], f) = T(1);
        for (std::size_t i = 0; i < pivots.size(); ++i) k(pivots[i], f) = -r(i, free[f]);
    }
    return k;
}

template <class T>
std::optional<Matrix<T>> inverse(const Matrix<T>& m) {
    if (!m.is_square()) return std::nullopt;
    std::size_t n = m.rows();
    if (n == 0) return Matrix<T>();
    auto [r, pivots] = rref(hstack(m, Matrix<T>::identity(n)));
    if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
    return r.block(0, n, n, n);
}

// L with L * b = I for b of full column rank.
template <class T>
std::optional<Matrix<T>> left_inverse(const Matrix<T>& b) {
    auto rows = rref(b.transpose()).pivots;
    if (rows.size() != b.cols()) return std::nullopt;
    Matrix<T> sub(b.cols(), b.cols());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) sub(i, j) = b(rows[i], j);
    auto sub_inv = inverse(sub);
    if (!sub_inv) return std::nullopt;
    Matrix<T> sel(b.cols(), b.rows());
    for (std::size_t i = 0; i < rows.size(); ++i) sel(i, rows[i]) = T(1);
    return *sub_inv * sel;
}

// X with b * X = y, if the columns of y lie in the span of b (b full column rank).
template <class T>
std::optional<Matrix<T>> solve_in_span(const Matrix<T>& b, const Matrix<T>& left_inv, const Matrix<T>& y) {
    Matrix<T> x = left_inv * y;
    if (b * x != y) return std::nullopt;
    return x;
}

template <class T>
struct Cokernel {
    Matrix<T> inclusion;   // d x q, standard unit vectors spanning a complement of the image
    Matrix<T> projection;  // q x d, kills the image, projection * inclusion = I
};

// The complement is spanned by the unit vectors chosen greedily in index order.
template <class T>
Cokernel<T> cokernel(const Matrix<T>& m) {
    std::size_t d = m.rows();
    std::size_t c = m.cols();
    auto pivots = rref(hstack(m, Matrix<T>::identity(d))).pivots;
    std::vector<std::size_t> image_cols, units;
    for (auto p : pivots) (p < c ? image_cols : units).push_back(p < c ? p : p - c);
    Matrix<T> e(d, units.size());
    for (std::size_t k = 0; k < units.size(); ++k) e(units[k], k) = T(1);
    Matrix<T> basis(d, d);
    for (std::size_t k = 0; k < image_cols.size(); ++k) basis.set_block(0, k, m.column(image_cols[k]));
    basis.set_block(0, image_cols.size(), e);
    auto inv = inverse(basis);
    if (!inv) throw Error(ErrorKind::Singular, "cokernel basis not invertible");
    return {std::move(e), inv->block(image_cols.size(), 0, units.size(), d)};
}

template <class T>
struct RankKernel {
    std::size_t rank = 0;
    Matrix<T> kernel;
    Cokernel<T> coker;
};

template <class T>
RankKernel<T> mat_rank_kernel(const Matrix<T>& m) {
    RankKernel<T> out;
    out.rank = rank(m);
    out.kernel = kernel_basis(m);
    out.coker = cokernel(m);
    return out;
}

// Fraction-free elimination over Q[t] after clearing denominators and powers
// of t row by row.
struct BareissResult {
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_rows;
    std::vector<std::size_t> pivot_cols;
    LaurentPoly minor = LaurentPoly(1);  // leading rank x rank minor of the cleared matrix
    std::vector<LaurentPoly> row_factors;
};

inline LaurentPoly laurent_lcm(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly g = laurent_gcd(a, b);
    return *exact_div(a * b, g);
}

inline Matrix<LaurentPoly> clear_denominators(const Matrix<RatFunc>& m, std::vector<LaurentPoly>* factors = nullptr) {
    Matrix<LaurentPoly> out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        LaurentPoly l(1);
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_laurent()) l = laurent_lcm(l, m(i, j).den());
        int lo = 0;
        bool any = false;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (m(i, j).is_zero()) continue;
            out(i, j) = m(i, j).num() * *exact_div(l, m(i, j).den());
            lo = any ? std::min(lo, out(i, j).min_exp()) : out(i, j).min_exp();
            any = true;
        }
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = out(i, j).shifted(-lo);
        if (factors) factors->push_back(l.shifted(-lo));
    }
    return out;
}

inline BareissResult bareiss(const Matrix<RatFunc>& m) {
    BareissResult res;
    Matrix<LaurentPoly> a = clear_denominators(m, &res.row_factors);
    std::vector<std::size_t> perm(a.rows());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    LaurentPoly prev(1);
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t pick = a.rows();
        for (std::size_t i = row; i < a.rows(); ++i)
            if (!a(i, col).is_zero()) {
                pick = i;
                break;
            }
        if (pick == a.rows()) continue;
        if (pick != row) {
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(pick, j), a(row, j));
            std::swap(perm[pick], perm[row]);
        }
        const LaurentPoly piv = a(row, col);
        for (std::size_t i = row + 1; i < a.rows(); ++i) {
            const LaurentPoly lead = a(i, col);
            for (std::size_t j = col + 1; j < a.cols(); ++j) {
                LaurentPoly v = piv * a(i, j) - lead * a(row, j);
                auto q = exact_div(v, prev);
                if (!q) throw Error(ErrorKind::Singular, "inexact fraction-free step");
                a(i, j) = std::move(*q);
            }
            a(i, col) = LaurentPoly();
        }
        prev = piv;
        res.pivot_rows.push_back(perm[row]);
        res.pivot_cols.push_back(col);
        ++row;
    }
    res.rank = res.pivot_cols.size();
    res.minor = prev;
    return res;
}

inline Matrix<Rational> specialize(const Matrix<RatFunc>& m, const Rational& q) {
    return m.map([&](const RatFunc& x) { return x.eval(q); });
}

inline std::size_t rank_at(const Matrix<RatFunc>& m, const Rational& q) { return rank(specialize(m, q)); }

// Rank at a random good point: no pole, no t = 0, leading minor nonzero.
// Points in the bad locus are rejected and redrawn.
inline std::size_t rank_by_specialization(const Matrix<RatFunc>& m, std::mt19937_64& rng, int attempts = 64) {
    BareissResult b = bareiss(m);
    std::uniform_int_distribution<long> num(-997, 997), den(1, 61);
    for (int k = 0; k < attempts; ++k) {
        Rational q = make_rational(num(rng), den(rng));
        if (q == 0) continue;
        try {
            if (b.minor.eval(q) == 0) throw Error(ErrorKind::ZeroSpecialization, "leading minor vanishes");
            for (const auto& f : b.row_factors)
                if (f.eval(q) == 0) throw Error(ErrorKind::ZeroSpecialization, "row factor vanishes");
            return rank_at(m, q);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::ZeroSpecialization) throw;
        }
    }
    throw Error(ErrorKind::ZeroSpecialization, "no good specialization point found");
}

}  // namespace lmforge
