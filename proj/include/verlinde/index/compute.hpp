#pragma once

#include "verlinde/bethe/lift.hpp"
#include "verlinde/index/request.hpp"

namespace verlinde::index {

/// Tr_U(f_t) = sum m e^lambda(f_t).
template <CoefficientField F>
TruncatedSeries<F> trace(const lie::RepSpec& rep, const F& field, const lie::SeriesTorusPoint<F>& f)
{
    TruncatedSeries<F> out(field, f.order());
    for (const auto& w : rep.weights) out += lie::evaluate_character(field, w.weight, f) * Rational(static_cast<long>(w.multiplicity));
    return out;
}

/// One summand of the index formula, without the global (1 - t) power.
template <CoefficientField F>
TruncatedSeries<F> summand(const IndexRequest& request, const std::optional<IntVector>& mu, const F& field,
                           const bethe::LiftedSolution<F>& sol)
{
    const auto& datum = request.datum;
    const auto& f = sol.point;
    const int order = f.order();
    const auto one = TruncatedSeries<F>::constant(field, order, field.one());

    auto roots_factor = one;
    for (const auto& a : datum.roots()) roots_factor = roots_factor * (one - lie::evaluate_character(field, a, f).shifted());
    auto term = int_pow(roots_factor, -request.chiL()) * int_pow(sol.theta, 1L - request.genus) * trace(request.rep, field, f);
    if (mu) {
        IntVector neg = *mu;
        for (auto& x : neg) x = -x;
        term = term * lie::evaluate_character(field, neg, f);
    }
    if (request.variant == Variant::parabolic) {
        // e^{mu_B} / prod_{alpha > 0} (1 - t e^alpha)(1 - e^-alpha)
        auto den = one;
        for (const auto& a : datum.positive_roots()) {
            IntVector neg = a;
            for (auto& x : neg) x = -x;
            den = den * (one - lie::evaluate_character(field, a, f).shifted()) * (one - lie::evaluate_character(field, neg, f));
        }
        term = term * lie::evaluate_character(field, request.mu_B, f) * series_inv(den);
    }
    return term;
}

/// Exponent of the global (1 - t) factor for the request's variant.
inline long long prefactor_exponent(const IndexRequest& request)
{
    if (request.variant == Variant::parabolic) return -static_cast<long long>(request.datum.rank()) * request.chiL();
    return sharp_L(request);
}

/// (1 - t)^e * sum over the lifted solutions of the summand. For the standard
/// variant the solutions are Weyl-orbit representatives; for the parabolic one,
/// all regular points.
template <CoefficientField F>
TruncatedSeries<F> index_sum(const IndexRequest& request, const std::optional<IntVector>& mu, const F& field,
                             const bethe::BetheSet<F>& set)
{
    if (request.variant == Variant::parabolic && !set.all_points_lifted)
        throw RequestError("parabolic variant needs every regular point lifted");
    TruncatedSeries<F> total(field, request.order);
    for (const auto& sol : set.solutions) total += summand(request, mu, field, sol);
    auto one_minus_t = TruncatedSeries<F>::constant(field, request.order, field.one()) - TruncatedSeries<F>::variable(field, request.order);
    return int_pow(one_minus_t, prefactor_exponent(request)) * total;
}

/// Full pipeline over a given field: Bethe solutions, then the sum.
template <CoefficientField F>
TruncatedSeries<F> compute_index_series(const IndexRequest& request, const std::optional<IntVector>& mu, const F& field,
                                        bool parallel = true)
{
    bethe::SolveOptions opt{request.order, request.variant == Variant::parabolic, parallel};
    return index_sum(request, mu, field, bethe::solve_bethe(request.datum, request.level, field, opt));
}

} // namespace verlinde::index
