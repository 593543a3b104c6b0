#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace verlinde {

using Integer = mpz_class;
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;
using IntVector = std::vector<long long>;

/// n/d in canonical form (the two-argument mpq_class constructor does not reduce).
inline Rational ratio(long n, long d)
{
    Rational q(n, d);
    q.canonicalize();
    return q;
}

/// Parses "3", "-7/4" or "  2/6 " (reduced on return). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

bool is_integral(const Rational& q);
Integer floor_of(const Rational& q);
/// Representative of q mod 1 in [0, 1).
Rational frac_part(const Rational& q);

Integer lcm(const Integer& a, const Integer& b);
long long lcm(long long a, long long b);

/// Dense row-major matrix; small sizes only (rank of a root datum).
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T())
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n, T(0));
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Matrix transpose() const
    {
        Matrix out(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
        return out;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b)
    {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
        Matrix out(a.rows_, b.cols_, T(0));
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k)
                for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
        return out;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b)
    {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix shape mismatch");
        Matrix out = a;
        for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] += b.data_[i];
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    template <class V>
    std::vector<V> apply(const std::vector<V>& v) const
    {
        if (v.size() != cols_) throw std::invalid_argument("matrix/vector shape mismatch");
        std::vector<V> out(rows_, V(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out[i] += V((*this)(i, j)) * v[j];
        return out;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;
using IntegerMatrix = Matrix<Integer>;

Rational determinant(const RationalMatrix& m);
/// Throws std::domain_error when singular.
RationalMatrix inverse(const RationalMatrix& m);
/// Sylvester's criterion on -m.
bool is_negative_definite(const RationalMatrix& m);

Rational dot(const IntVector& w, const RationalVector& y);

} // namespace verlinde
