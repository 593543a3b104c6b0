#pragma once

#include "verlinde/algebra/field.hpp"

#include <string>

namespace verlinde {

/// a + b*eps with eps^2 = 0.
template <class E>
struct Dual {
    E value;
    E eps;

    friend Dual operator+(const Dual& x, const Dual& y) { return {x.value + y.value, x.eps + y.eps}; }
    friend Dual operator-(const Dual& x, const Dual& y) { return {x.value - y.value, x.eps - y.eps}; }
    friend Dual operator-(const Dual& x) { return {-x.value, -x.eps}; }
    friend Dual operator*(const Dual& x, const Dual& y)
    {
        return {x.value * y.value, x.value * y.eps + x.eps * y.value};
    }
    friend Dual operator*(const Dual& x, const Rational& q) { return {x.value * q, x.eps * q}; }
};

/// Two-term nilpotent extension F[eps]/(eps^2) of a coefficient field. Not a
/// field, but every element with invertible value part is a unit, which is all
/// series arithmetic needs.
template <CoefficientField F>
class DualField {
public:
    using Base = ElementOf<F>;
    using Element = Dual<Base>;

    explicit DualField(F base) : base_(std::move(base)) {}

    const F& base() const noexcept { return base_; }

    Element zero() const { return {base_.zero(), base_.zero()}; }
    Element one() const { return {base_.one(), base_.zero()}; }
    Element from_rational(const Rational& q) const { return {base_.from_rational(q), base_.zero()}; }
    Element root_of_unity(const Rational& q) const { return {base_.root_of_unity(q), base_.zero()}; }
    Element lift(const Base& x) const { return {x, base_.zero()}; }
    Element epsilon() const { return {base_.zero(), base_.one()}; }
    Element inverse(const Element& x) const
    {
        Base inv = base_.inverse(x.value);
        return {inv, -(x.eps * inv * inv)};
    }
    bool is_zero(const Element& x) const { return base_.is_zero(x.value) && base_.is_zero(x.eps); }
    std::string to_string(const Element& x) const
    {
        return "(" + base_.to_string(x.value) + ") + (" + base_.to_string(x.eps) + ")*eps";
    }

private:
    F base_;
};

} // namespace verlinde
