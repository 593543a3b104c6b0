#pragma once

#include "verlinde/algebra/rational.hpp"

#include <concepts>
#include <string>

namespace verlinde {

// A coefficient field descriptor. Elements are plain values with arithmetic
// operators; the descriptor supplies constants, e(q) = exp(2 pi i q), inverses
// and the zero test.
template <class F>
concept CoefficientField = requires(const F& field, const typename F::Element& x, const Rational& q) {
    typename F::Element;
    { field.zero() } -> std::same_as<typename F::Element>;
    { field.one() } -> std::same_as<typename F::Element>;
    { field.from_rational(q) } -> std::same_as<typename F::Element>;
    { field.root_of_unity(q) } -> std::same_as<typename F::Element>;
    { field.inverse(x) } -> std::same_as<typename F::Element>;
    { field.is_zero(x) } -> std::convertible_to<bool>;
    { field.to_string(x) } -> std::convertible_to<std::string>;
    { x + x } -> std::convertible_to<typename F::Element>;
    { x - x } -> std::convertible_to<typename F::Element>;
    { x * x } -> std::convertible_to<typename F::Element>;
    { -x } -> std::convertible_to<typename F::Element>;
    { x * q } -> std::convertible_to<typename F::Element>;
};

template <CoefficientField F>
using ElementOf = typename F::Element;

} // namespace verlinde
