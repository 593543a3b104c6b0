#pragma once

#include "verlinde/algebra/dual.hpp"
#include "verlinde/bethe/lift.hpp"

namespace verlinde::testing {

/// Column j is the eps-part of log chi'_t(f_t * e(eps e_j / 2 pi i)) over F[eps]/(eps^2):
/// a directional derivative that never uses the closed form of the Jacobian.
template <CoefficientField F>
SeriesMatrix<F> nilpotent_jacobian(const lie::RootDatum& datum, const lie::LevelForm& level, const F& field,
                                   const lie::SeriesTorusPoint<F>& f)
{
    using D = DualField<F>;
    const D dual(field);
    const auto r = static_cast<std::size_t>(datum.rank());
    const int order = f.order();
    auto lift_series = [&](const TruncatedSeries<F>& s) {
        TruncatedSeries<D> out(dual, order);
        for (int k = 0; k <= order; ++k) out[k] = dual.lift(s[k]);
        return out;
    };
    const auto eta = bethe::correction_series(field, f);
    const auto chars = bethe::root_characters(datum, field, f);

    SeriesMatrix<F> jac(field, r, order);
    for (std::size_t j = 0; j < r; ++j) {
        std::vector<TruncatedSeries<D>> eta_eps;
        for (std::size_t i = 0; i < r; ++i) {
            eta_eps.push_back(lift_series(eta[i]));
            if (i == j) eta_eps.back()[0] = dual.epsilon();
        }
        bethe::RootCharacters<D> chars_eps;
        for (std::size_t k = 0; k < datum.positive_roots().size(); ++k) {
            const Rational a_j(static_cast<long>(datum.positive_roots()[k][j]));
            auto bump = [&](const Rational& s) { return dual.one() + dual.epsilon() * s; };
            chars_eps.positive.push_back(lift_series(chars.positive[k]) * bump(a_j));
            chars_eps.negative.push_back(lift_series(chars.negative[k]) * bump(-a_j));
        }
        const auto value = bethe::chi_log_from(datum, level, eta_eps, chars_eps);
        for (std::size_t i = 0; i < r; ++i)
            for (int k = 0; k <= order; ++k) jac(i, j)[k] = value[i][k].eps;
    }
    return jac;
}

} // namespace verlinde::testing
