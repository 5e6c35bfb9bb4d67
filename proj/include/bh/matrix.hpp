#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bh/cyclotomic.hpp"
#include "bh/laurent.hpp"

namespace bh {

/// Dense row-major matrix over a commutative ring. The ring is the template
/// parameter; a zero prototype is kept so that rings whose zero carries data
/// (cyclotomic fields) can be handled uniformly.
template <class T>
class Matrix {
   public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& zero = T{})
        : rows_(rows), cols_(cols), zero_(zero), data_(rows * cols, zero) {}

    static Matrix identity(std::size_t n, const T& zero, const T& one) {
        Matrix m(n, n, zero);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const T& zero() const { return zero_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool is_zero() const {
        for (const auto& x : data_)
            if (!x.is_zero()) return false;
        return true;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_, zero_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    /// Copies `block` into this matrix with its top-left corner at (r0, c0).
    void add_block(std::size_t r0, std::size_t c0, const Matrix& block) {
        for (std::size_t r = 0; r < block.rows(); ++r)
            for (std::size_t c = 0; c < block.cols(); ++c) (*this)(r0 + r, c0 + c) += block(r, c);
    }

    Matrix& operator+=(const Matrix& o) {
        check_shape(o);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        check_shape(o);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
        return *this;
    }
    Matrix& operator*=(const T& s) {
        for (auto& x : data_) x = x * s;
        return *this;
    }
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
    Matrix operator-() const {
        Matrix r = *this;
        for (auto& x : r.data_) x = -x;
        return r;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: incompatible product");
        Matrix out(a.rows_, b.cols_, a.zero_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& x = a(i, k);
                if (x.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const T& y = b(k, j);
                    if (!y.is_zero()) out(i, j) += x * y;
                }
            }
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    /// Entrywise image under a ring map.
    template <class F>
    auto map(F f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
        using U = decltype(f(std::declval<const T&>()));
        Matrix<U> out(rows_, cols_, f(zero_));
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) out(r, c) = f((*this)(r, c));
        return out;
    }

   private:
    void check_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix: shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    T zero_{};
    std::vector<T> data_;
};

using LaurentMatrix = Matrix<LaurentPoly>;
using RationalMatrix = Matrix<BigRational>;
using CyclotomicMatrix = Matrix<CyclotomicNumber>;

/// Determinant by cofactor expansion; intended for the small matrices of braid representations.
template <class T>
T determinant(const Matrix<T>& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
    const std::size_t n = m.rows();
    if (n == 0) throw std::invalid_argument("determinant: empty matrix");
    if (n == 1) return m(0, 0);
    T acc = m.zero();
    for (std::size_t c = 0; c < n; ++c) {
        if (m(0, c).is_zero()) continue;
        Matrix<T> minor(n - 1, n - 1, m.zero());
        for (std::size_t r = 1; r < n; ++r)
            for (std::size_t cc = 0, k = 0; cc < n; ++cc) {
                if (cc == c) continue;
                minor(r - 1, k++) = m(r, cc);
            }
        T term = m(0, c) * determinant(minor);
        if (c % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

/// Rank over a field (Q or a cyclotomic field) by Gaussian elimination.
template <class T>
std::size_t field_rank(Matrix<T> m) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
        std::size_t pivot = rank;
        while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != rank)
            for (std::size_t c = col; c < m.cols(); ++c) std::swap(m(pivot, c), m(rank, c));
        T inv = m(rank, col).inverse();
        for (std::size_t r = rank + 1; r < m.rows(); ++r) {
            if (m(r, col).is_zero()) continue;
            T f = m(r, col) * inv;
            for (std::size_t c = col; c < m.cols(); ++c)
                if (!m(rank, c).is_zero()) m(r, c) -= f * m(rank, c);
        }
        ++rank;
    }
    return rank;
}

struct SmithResult {
    /// Nonzero invariant factors d_1 | d_2 | ... in canonical-associate form (units appear as 1).
    std::vector<LaurentPoly> factors;
    std::size_t rank = 0;
};

/// Smith normal form over Q[t, t^-1], computed by Euclidean elimination over Q[t].
SmithResult smith_normal_form(const LaurentMatrix& m);

/// Same invariant factors for a matrix over Q[t]; used by the Laurent entry point.
std::vector<QPoly> smith_invariant_factors(Matrix<QPoly> m);

}  // namespace bh
