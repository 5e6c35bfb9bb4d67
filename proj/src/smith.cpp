#include <algorithm>
#include <limits>

#include "bh/matrix.hpp"

namespace bh {

namespace {

void swap_rows(Matrix<QPoly>& a, std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
}

void swap_cols(Matrix<QPoly>& a, std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a(r, i), a(r, j));
}

// row_i -= q * row_p, touching only columns >= from.
void row_axpy(Matrix<QPoly>& a, std::size_t i, std::size_t p, const QPoly& q, std::size_t from) {
    for (std::size_t c = from; c < a.cols(); ++c)
        if (!a(p, c).is_zero()) a(i, c) -= q * a(p, c);
}

void col_axpy(Matrix<QPoly>& a, std::size_t j, std::size_t p, const QPoly& q, std::size_t from) {
    for (std::size_t r = from; r < a.rows(); ++r)
        if (!a(r, p).is_zero()) a(r, j) -= q * a(r, p);
}

}  // namespace

std::vector<QPoly> smith_invariant_factors(Matrix<QPoly> a) {
    const std::size_t rows = a.rows(), cols = a.cols();
    std::vector<QPoly> factors;
    for (std::size_t r = 0; r < std::min(rows, cols); ++r) {
        // Pivot on an entry of minimal degree in the trailing submatrix.
        int best = std::numeric_limits<int>::max();
        std::size_t pi = rows, pj = cols;
        for (std::size_t i = r; i < rows; ++i)
            for (std::size_t j = r; j < cols; ++j)
                if (!a(i, j).is_zero() && a(i, j).degree() < best) {
                    best = a(i, j).degree();
                    pi = i;
                    pj = j;
                }
        if (pi == rows) break;
        swap_rows(a, r, pi);
        swap_cols(a, r, pj);

        for (;;) {
            bool clean = true;
            for (std::size_t i = r + 1; i < rows; ++i) {
                if (a(i, r).is_zero()) continue;
                QPoly q = a(i, r).divmod(a(r, r)).first;
                row_axpy(a, i, r, q, r);
                if (!a(i, r).is_zero()) clean = false;
            }
            for (std::size_t j = r + 1; j < cols; ++j) {
                if (a(r, j).is_zero()) continue;
                QPoly q = a(r, j).divmod(a(r, r)).first;
                col_axpy(a, j, r, q, r);
                if (!a(r, j).is_zero()) clean = false;
            }
            if (!clean) {
                // A remainder of smaller degree appeared in the pivot row or column.
                int deg = a(r, r).degree();
                std::size_t bi = r, bj = r;
                for (std::size_t i = r + 1; i < rows; ++i)
                    if (!a(i, r).is_zero() && a(i, r).degree() < deg) {
                        deg = a(i, r).degree();
                        bi = i;
                        bj = r;
                    }
                for (std::size_t j = r + 1; j < cols; ++j)
                    if (!a(r, j).is_zero() && a(r, j).degree() < deg) {
                        deg = a(r, j).degree();
                        bi = r;
                        bj = j;
                    }
                swap_rows(a, r, bi);
                swap_cols(a, r, bj);
                continue;
            }
            // Row and column are clear; enforce divisibility of the remaining block.
            bool fixed = false;
            for (std::size_t i = r + 1; i < rows && !fixed; ++i)
                for (std::size_t j = r + 1; j < cols; ++j)
                    if (!a(r, r).divides(a(i, j))) {
                        for (std::size_t c = r; c < cols; ++c) a(r, c) += a(i, c);
                        fixed = true;
                        break;
                    }
            if (!fixed) break;
        }
        factors.push_back(a(r, r).monic());
    }
    return factors;
}

SmithResult smith_normal_form(const LaurentMatrix& m) {
    // Scaling a row by t^k is a unit operation, so each row is shifted into Q[t].
    Matrix<QPoly> poly(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        int low = std::numeric_limits<int>::max();
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (!m(r, c).is_zero()) low = std::min(low, m(r, c).lowest_exp());
        if (low == std::numeric_limits<int>::max()) continue;
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const LaurentPoly& e = m(r, c);
            if (e.is_zero()) continue;
            std::vector<BigRational> v(static_cast<std::size_t>(e.highest_exp() - low + 1));
            for (int k = e.lowest_exp(); k <= e.highest_exp(); ++k)
                v[static_cast<std::size_t>(k - low)] = e.coeff(k);
            poly(r, c) = QPoly(std::move(v));
        }
    }
    SmithResult out;
    for (const QPoly& f : smith_invariant_factors(std::move(poly)))
        out.factors.push_back(canonical_associate(LaurentPoly(f)));
    out.rank = out.factors.size();
    return out;
}

}  // namespace bh
