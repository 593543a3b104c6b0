#pragma once

#include "verlinde/algebra/bigfloat.hpp"
#include "verlinde/algebra/cyclotomic.hpp"
#include "verlinde/algebra/series.hpp"

#include <vector>

namespace verlinde::oracles {

/// Field large enough for the closed form at level h.
inline int sl2_closed_form_conductor(long h) { return static_cast<int>(2 * (h + 2)); }

/// Solves e^{-2i(h+2)phi} ((1 - t e^{2i phi}) / (1 - t e^{-2i phi}))^2 = 1 with
/// phi = pi k/(h+2) + delta(t), returning eps = i delta. Fixed-point iteration on
/// eps = [log(1 - t u^2) - log(1 - t u^-2)] / (h+2), u = e^{i phi}; each pass fixes
/// one more coefficient.
template <CoefficientField F>
TruncatedSeries<F> sl2_phase_lift(const F& field, long h, long k, int order)
{
    const auto zeta2 = field.root_of_unity(ratio(k, h + 2)); // e^{2 i pi k/(h+2)}
    const auto zeta2_inv = field.inverse(zeta2);
    TruncatedSeries<F> eps(field, order);
    for (int pass = 0; pass < order; ++pass) {
        auto u2 = series_exp(eps * Rational(2)) * zeta2;
        auto um2 = series_exp(eps * Rational(-2)) * zeta2_inv;
        eps = (series_log1p(-u2.shifted()) - series_log1p(-um2.shifted())) * ratio(1, h + 2);
    }
    return eps;
}

/// The SL2 canonical-bundle formula
///   ((h+2)/(2(1-t)))^{g-1} sum_{k=1}^{h+1} (sin phi_k)^{2-2g}
///     [ 1/((1-t)^2 + 4t s) (1 + 4t/(h+2) ((1-t) - 2 s)/((1-t)^2 + 4t s)) ]^{g-1},
/// s = sin^2 phi_k = (2 - u^2 - u^-2)/4.
template <CoefficientField F>
TruncatedSeries<F> sl2_closed_form(const F& field, long h, int genus, int order)
{
    using S = TruncatedSeries<F>;
    const S one = S::constant(field, order, field.one());
    const S t = S::variable(field, order);
    const S omt = one - t;
    S total(field, order);
    for (long k = 1; k <= h + 1; ++k) {
        const S eps = sl2_phase_lift(field, h, k, order);
        const auto zeta2 = field.root_of_unity(ratio(k, h + 2));
        const S u2 = series_exp(eps * Rational(2)) * zeta2;
        const S um2 = series_exp(eps * Rational(-2)) * field.inverse(zeta2);
        const S s = (one * Rational(2) - u2 - um2) * Rational(1, 4);
        const S q = omt * omt + t * s * Rational(4);
        const S qinv = series_inv(q);
        const S bracket = qinv * (one + t * ratio(4, h + 2) * (omt - s * Rational(2)) * qinv);
        total += int_pow(s, 1L - genus) * int_pow(bracket, genus - 1L);
    }
    const S pre = series_inv(omt) * ratio(h + 2, 2);
    return int_pow(pre, genus - 1L) * total;
}

/// sum_{k=1}^{h+1} ((h+2)/2)^{g-1} sin^{2-2g}(pi k/(h+2)), exactly, with
/// sin^2(pi k/n) = (2 - z^k - z^-k)/4, z = e(1/n).
inline Rational classical_sine_sum(long h, int genus)
{
    const long n = h + 2;
    const CyclotomicField field(static_cast<int>(n));
    Cyclotomic total = field.zero();
    for (long k = 1; k <= h + 1; ++k) {
        const Cyclotomic s = (field.from_rational(2) - field.root_of_unity(ratio(k, n)) - field.root_of_unity(ratio(-k, n))) * Rational(1, 4);
        const Cyclotomic base = genus >= 1 ? s.inverse() : s;
        Cyclotomic term = field.one();
        for (long i = 0; i < std::labs(genus - 1L); ++i) term = term * base;
        total = total + term;
    }
    Rational pre = 1;
    for (int i = 0; i < genus - 1; ++i) pre *= ratio(n, 2);
    for (int i = 0; i < 1 - genus; ++i) pre /= ratio(n, 2);
    return *(total * pre).as_rational();
}

/// The same sum with MPFR sines, for a floating-point cross-check.
inline BigReal classical_sine_sum_float(long h, int genus, long bits)
{
    const long n = h + 2;
    BigReal total(Rational(0), bits);
    for (long k = 1; k <= h + 1; ++k) {
        BigReal angle = BigReal::pi(bits) * ratio(k, n);
        BigReal s(bits);
        mpfr_sin(s.get(), angle.get(), MPFR_RNDN);
        BigReal s2 = s * s;
        BigReal term(Rational(1), bits);
        for (long i = 0; i < std::labs(genus - 1L); ++i) term = genus >= 1 ? term / s2 : term * s2;
        total = total + term;
    }
    BigReal pre(Rational(1), bits);
    for (long i = 0; i < std::labs(genus - 1L); ++i) pre = genus >= 1 ? pre * ratio(n, 2) : pre / BigReal(ratio(n, 2), bits);
    return total * pre;
}

} // namespace verlinde::oracles
