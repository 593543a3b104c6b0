#pragma once

#include "verlinde/algebra/series.hpp"

#include <cstddef>
#include <vector>

namespace verlinde {

/// Square matrix over the truncated series ring.
template <CoefficientField F>
class SeriesMatrix {
public:
    using Series = TruncatedSeries<F>;

    SeriesMatrix(const F& field, std::size_t n, int order) : n_(n), entries_(n * n, Series(field, order)) {}

    static SeriesMatrix identity(const F& field, std::size_t n, int order)
    {
        SeriesMatrix m(field, n, order);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = Series::constant(field, order, field.one());
        return m;
    }

    /// Constant matrix with rational entries.
    static SeriesMatrix from_rational(const F& field, const RationalMatrix& a, int order)
    {
        SeriesMatrix m(field, a.rows(), order);
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = Series::constant(field, order, a(i, j));
        return m;
    }

    std::size_t size() const noexcept { return n_; }
    Series& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
    const Series& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

    friend bool operator==(const SeriesMatrix& a, const SeriesMatrix& b)
    {
        if (a.n_ != b.n_) return false;
        for (std::size_t k = 0; k < a.entries_.size(); ++k)
            if (!(a.entries_[k] == b.entries_[k])) return false;
        return true;
    }

    /// Left multiplication by a rational matrix.
    friend SeriesMatrix operator*(const RationalMatrix& a, const SeriesMatrix& m)
    {
        const F& field = m.entries_.front().field();
        const int order = m.entries_.front().order();
        SeriesMatrix out(field, m.n_, order);
        for (std::size_t i = 0; i < m.n_; ++i)
            for (std::size_t k = 0; k < m.n_; ++k) {
                if (a(i, k) == 0) continue;
                for (std::size_t j = 0; j < m.n_; ++j) out(i, j) += m(k, j) * a(i, k);
            }
        return out;
    }

private:
    std::size_t n_;
    std::vector<Series> entries_;
};

namespace detail {

template <CoefficientField F>
TruncatedSeries<F> laplace_det(const std::vector<std::vector<TruncatedSeries<F>>>& m)
{
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    auto total = TruncatedSeries<F>(m[0][0].field(), m[0][0].order());
    for (std::size_t col = 0; col < n; ++col) {
        std::vector<std::vector<TruncatedSeries<F>>> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<TruncatedSeries<F>> row;
            for (std::size_t j = 0; j < n; ++j)
                if (j != col) row.push_back(m[i][j]);
            minor.push_back(std::move(row));
        }
        auto term = m[0][col] * laplace_det(minor);
        if (col % 2 == 0) total += term;
        else total -= term;
    }
    return total;
}

} // namespace detail

/// Determinant over R[[t]]/(t^(T+1)). Cofactor expansion for n <= 3; otherwise
/// elimination with unit pivots (constant term invertible), falling back to
/// cofactor expansion if some column has no unit pivot.
template <CoefficientField F>
TruncatedSeries<F> series_det(const SeriesMatrix<F>& a)
{
    const std::size_t n = a.size();
    if (n == 0) throw std::invalid_argument("determinant of empty matrix");
    const F& field = a(0, 0).field();
    const int order = a(0, 0).order();
    std::vector<std::vector<TruncatedSeries<F>>> rows(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) rows[i].push_back(a(i, j));
    if (n <= 3) return detail::laplace_det(rows);

    auto work = rows;
    auto det = TruncatedSeries<F>::constant(field, order, field.one());
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && field.is_zero(work[pivot][col][0])) ++pivot;
        if (pivot == n) return detail::laplace_det(rows);
        if (pivot != col) {
            std::swap(work[pivot], work[col]);
            det = -det;
        }
        det = det * work[col][col];
        auto inv = series_inv(work[col][col]);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (work[i][col].is_zero()) continue;
            auto factor = work[i][col] * inv;
            for (std::size_t j = col; j < n; ++j) work[i][j] -= factor * work[col][j];
        }
    }
    return det;
}

} // namespace verlinde
