#include "verlinde/lie/smith.hpp"

#include <utility>

namespace verlinde::lie {

namespace {

void swap_rows(IntegerMatrix& m, std::size_t a, std::size_t b)
{
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(IntegerMatrix& m, std::size_t a, std::size_t b)
{
    for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

// row_a -= q * row_b
void add_row(IntegerMatrix& m, std::size_t a, std::size_t b, const Integer& q)
{
    for (std::size_t j = 0; j < m.cols(); ++j) m(a, j) -= q * m(b, j);
}

void add_col(IntegerMatrix& m, std::size_t a, std::size_t b, const Integer& q)
{
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, a) -= q * m(i, b);
}

Integer floor_div(const Integer& a, const Integer& b)
{
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

} // namespace

SmithForm smith_normal_form(const IntegerMatrix& a)
{
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    IntegerMatrix d = a;
    IntegerMatrix u = IntegerMatrix::identity(rows);
    IntegerMatrix v = IntegerMatrix::identity(cols);

    const std::size_t diag = std::min(rows, cols);
    for (std::size_t t = 0; t < diag; ++t) {
        // smallest nonzero entry of the remaining block as pivot
        bool found = false;
        std::size_t pi = t, pj = t;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (d(i, j) != 0 && (!found || abs(d(i, j)) < abs(d(pi, pj)))) {
                    found = true;
                    pi = i;
                    pj = j;
                }
        if (!found) break;
        swap_rows(d, t, pi);
        swap_rows(u, t, pi);
        swap_cols(d, t, pj);
        swap_cols(v, t, pj);

        for (;;) {
            bool changed = false;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (d(i, t) == 0) continue;
                Integer q = floor_div(d(i, t), d(t, t));
                add_row(d, i, t, q);
                add_row(u, i, t, q);
                if (d(i, t) != 0) {
                    swap_rows(d, t, i);
                    swap_rows(u, t, i);
                    changed = true;
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (d(t, j) == 0) continue;
                Integer q = floor_div(d(t, j), d(t, t));
                add_col(d, j, t, q);
                add_col(v, j, t, q);
                if (d(t, j) != 0) {
                    swap_cols(d, t, j);
                    swap_cols(v, t, j);
                    changed = true;
                }
            }
            if (changed) continue;
            // divisibility: fold any offending entry into row t
            bool fixed = true;
            for (std::size_t i = t + 1; i < rows && fixed; ++i)
                for (std::size_t j = t + 1; j < cols; ++j) {
                    Integer r;
                    mpz_fdiv_r(r.get_mpz_t(), d(i, j).get_mpz_t(), d(t, t).get_mpz_t());
                    if (r != 0) {
                        add_row(d, t, i, Integer(-1));
                        add_row(u, t, i, Integer(-1));
                        fixed = false;
                        break;
                    }
                }
            if (fixed) break;
        }
        if (d(t, t) < 0) {
            for (std::size_t j = 0; j < cols; ++j) d(t, j) = -d(t, j);
            for (std::size_t j = 0; j < rows; ++j) u(t, j) = -u(t, j);
        }
    }
    return {std::move(u), std::move(d), std::move(v)};
}

std::size_t integer_rank(const IntegerMatrix& a)
{
    SmithForm s = smith_normal_form(a);
    std::size_t r = 0;
    for (std::size_t i = 0; i < std::min(a.rows(), a.cols()); ++i)
        if (s.D(i, i) != 0) ++r;
    return r;
}

} // namespace verlinde::lie
