#pragma once

#include "verlinde/algebra/errors.hpp"
#include "verlinde/algebra/field.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace verlinde {

/// c_0 + c_1 t + ... + c_T t^T, arithmetic modulo t^(T+1).
template <CoefficientField F>
class TruncatedSeries {
public:
    using Element = ElementOf<F>;

    TruncatedSeries(F field, int order)
        : field_(std::move(field)), c_(static_cast<std::size_t>(check_order(order)) + 1, field_.zero())
    {
    }

    static TruncatedSeries constant(const F& field, int order, const Element& value)
    {
        TruncatedSeries s(field, order);
        s.c_[0] = value;
        return s;
    }

    static TruncatedSeries constant(const F& field, int order, const Rational& value)
    {
        return constant(field, order, field.from_rational(value));
    }

    /// The series t (zero when order is 0).
    static TruncatedSeries variable(const F& field, int order)
    {
        TruncatedSeries s(field, order);
        if (order >= 1) s.c_[1] = field.one();
        return s;
    }

    static TruncatedSeries from_coefficients(const F& field, std::vector<Element> coeffs)
    {
        if (coeffs.empty()) throw std::invalid_argument("series needs at least one coefficient");
        TruncatedSeries s(field, static_cast<int>(coeffs.size()) - 1);
        s.c_ = std::move(coeffs);
        return s;
    }

    const F& field() const noexcept { return field_; }
    int order() const noexcept { return static_cast<int>(c_.size()) - 1; }
    const Element& operator[](int k) const { return c_.at(static_cast<std::size_t>(k)); }
    Element& operator[](int k) { return c_.at(static_cast<std::size_t>(k)); }
    const std::vector<Element>& coefficients() const noexcept { return c_; }

    bool is_zero() const
    {
        for (const auto& c : c_)
            if (!field_.is_zero(c)) return false;
        return true;
    }

    /// Lowest index with nonzero coefficient, or order()+1 for the zero series.
    int valuation() const
    {
        for (int k = 0; k <= order(); ++k)
            if (!field_.is_zero(c_[static_cast<std::size_t>(k)])) return k;
        return order() + 1;
    }

    /// Same coefficients reinterpreted at a different truncation order.
    TruncatedSeries truncated(int order) const
    {
        TruncatedSeries s(field_, order);
        for (int k = 0; k <= std::min(order, this->order()); ++k) s.c_[static_cast<std::size_t>(k)] = c_[static_cast<std::size_t>(k)];
        return s;
    }

    /// t * this.
    TruncatedSeries shifted() const
    {
        TruncatedSeries s(field_, order());
        for (int k = order(); k >= 1; --k) s.c_[static_cast<std::size_t>(k)] = c_[static_cast<std::size_t>(k - 1)];
        return s;
    }

    TruncatedSeries& operator+=(const TruncatedSeries& o)
    {
        check_same_shape(o);
        for (std::size_t k = 0; k < c_.size(); ++k) c_[k] = c_[k] + o.c_[k];
        return *this;
    }

    TruncatedSeries& operator-=(const TruncatedSeries& o)
    {
        check_same_shape(o);
        for (std::size_t k = 0; k < c_.size(); ++k) c_[k] = c_[k] - o.c_[k];
        return *this;
    }

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator-(TruncatedSeries a)
    {
        for (auto& c : a.c_) c = -c;
        return a;
    }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b)
    {
        a.check_same_shape(b);
        TruncatedSeries out(a.field_, a.order());
        const int n = a.order();
        for (int i = 0; i <= n; ++i) {
            const Element& ai = a.c_[static_cast<std::size_t>(i)];
            if (a.field_.is_zero(ai)) continue;
            for (int j = 0; i + j <= n; ++j)
                out.c_[static_cast<std::size_t>(i + j)] = out.c_[static_cast<std::size_t>(i + j)] + ai * b.c_[static_cast<std::size_t>(j)];
        }
        return out;
    }

    friend TruncatedSeries operator*(TruncatedSeries a, const Element& x)
    {
        for (auto& c : a.c_) c = c * x;
        return a;
    }

    friend TruncatedSeries operator*(TruncatedSeries a, const Rational& q)
    {
        for (auto& c : a.c_) c = c * q;
        return a;
    }

    /// Coefficient-wise exact comparison through the field's zero test.
    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b)
    {
        if (a.order() != b.order()) return false;
        for (std::size_t k = 0; k < a.c_.size(); ++k)
            if (!a.field_.is_zero(a.c_[k] - b.c_[k])) return false;
        return true;
    }

    std::string to_string() const
    {
        std::string out;
        for (int k = 0; k <= order(); ++k) {
            if (k) out += " + ";
            out += "(" + field_.to_string(c_[static_cast<std::size_t>(k)]) + ")";
            if (k == 1) out += "*t";
            if (k > 1) out += "*t^" + std::to_string(k);
        }
        return out + " + O(t^" + std::to_string(order() + 1) + ")";
    }

    void check_same_shape(const TruncatedSeries& o) const
    {
        if (o.order() != order())
            throw BackendMismatch("series truncation orders differ: " + std::to_string(order()) + " vs " +
                                  std::to_string(o.order()));
    }

private:
    static int check_order(int order)
    {
        if (order < 0) throw std::invalid_argument("truncation order must be nonnegative");
        return order;
    }

    F field_;
    std::vector<Element> c_;
};

template <CoefficientField F>
TruncatedSeries<F> series_inv(const TruncatedSeries<F>& a)
{
    const F& field = a.field();
    if (field.is_zero(a[0])) throw NonUnitConstantTerm();
    const auto inv0 = field.inverse(a[0]);
    TruncatedSeries<F> b(field, a.order());
    b[0] = inv0;
    for (int k = 1; k <= a.order(); ++k) {
        auto acc = field.zero();
        for (int j = 1; j <= k; ++j)
            if (!field.is_zero(a[j])) acc = acc + a[j] * b[k - j];
        b[k] = -(acc * inv0);
    }
    return b;
}

/// log(1 + u) for u with zero constant term.
template <CoefficientField F>
TruncatedSeries<F> series_log1p(const TruncatedSeries<F>& u)
{
    const F& field = u.field();
    if (!field.is_zero(u[0])) throw NonzeroConstantTerm();
    // (1 + u) l' = u'  =>  k l_k = k u_k - sum_{j<k} j l_j u_{k-j}
    TruncatedSeries<F> l(field, u.order());
    for (int k = 1; k <= u.order(); ++k) {
        auto acc = u[k] * Rational(k);
        for (int j = 1; j < k; ++j)
            if (!field.is_zero(u[k - j])) acc = acc - l[j] * u[k - j] * Rational(j);
        l[k] = acc * Rational(1, k);
    }
    return l;
}

/// exp(u) for u with zero constant term.
template <CoefficientField F>
TruncatedSeries<F> series_exp(const TruncatedSeries<F>& u)
{
    const F& field = u.field();
    if (!field.is_zero(u[0])) throw NonzeroConstantTerm();
    // e' = u' e  =>  k e_k = sum_{j=1..k} j u_j e_{k-j}
    TruncatedSeries<F> e(field, u.order());
    e[0] = field.one();
    for (int k = 1; k <= u.order(); ++k) {
        auto acc = field.zero();
        for (int j = 1; j <= k; ++j)
            if (!field.is_zero(u[j])) acc = acc + u[j] * e[k - j] * Rational(j);
        e[k] = acc * Rational(1, k);
    }
    return e;
}

template <CoefficientField F>
TruncatedSeries<F> int_pow(TruncatedSeries<F> base, long long n)
{
    if (n < 0) {
        base = series_inv(base);
        n = -n;
    }
    auto result = TruncatedSeries<F>::constant(base.field(), base.order(), base.field().one());
    while (n > 0) {
        if (n & 1) result = result * base;
        n >>= 1;
        if (n > 0) base = base * base;
    }
    return result;
}

} // namespace verlinde
