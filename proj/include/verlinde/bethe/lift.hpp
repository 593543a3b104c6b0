#pragma once

#include "verlinde/algebra/series_matrix.hpp"
#include "verlinde/bethe/leading.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <thread>
#include <optional>

namespace verlinde::bethe {

/// log chi'_t(f_t) in units of full turns times 2 pi i: the constant part is the
/// rational vector h' y, the rest is a vector of series with zero constant term.
template <CoefficientField F>
struct ChiLog {
    RationalVector turns;
    std::vector<TruncatedSeries<F>> log_part;
};

/// e^alpha(f_t) and e^-alpha(f_t) for each positive root, in datum order.
template <CoefficientField F>
struct RootCharacters {
    std::vector<TruncatedSeries<F>> positive;
    std::vector<TruncatedSeries<F>> negative;
};

template <CoefficientField F>
RootCharacters<F> root_characters(const lie::RootDatum& datum, const F& field, const lie::SeriesTorusPoint<F>& f)
{
    RootCharacters<F> out;
    for (const auto& a : datum.positive_roots()) {
        IntVector neg = a;
        for (auto& x : neg) x = -x;
        out.positive.push_back(lie::evaluate_character(field, a, f));
        out.negative.push_back(lie::evaluate_character(field, neg, f));
    }
    return out;
}

/// h' eta + sum_{alpha > 0} alpha [log(1 - t e^alpha) - log(1 - t e^-alpha)], given the
/// series eta (which may carry a constant term) and the root characters.
template <CoefficientField F>
std::vector<TruncatedSeries<F>> chi_log_from(const lie::RootDatum& datum, const lie::LevelForm& level,
                                             const std::vector<TruncatedSeries<F>>& eta, const RootCharacters<F>& chars)
{
    const auto r = static_cast<std::size_t>(datum.rank());
    const F& field = eta.front().field();
    const int order = eta.front().order();
    std::vector<TruncatedSeries<F>> out(r, TruncatedSeries<F>(field, order));
    const auto& hp = level.h_prime_rational();
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            if (hp(i, j) != 0) out[i] += eta[j] * hp(i, j);
    for (std::size_t k = 0; k < datum.positive_roots().size(); ++k) {
        const auto& a = datum.positive_roots()[k];
        auto term = series_log1p(-chars.positive[k].shifted()) - series_log1p(-chars.negative[k].shifted());
        for (std::size_t i = 0; i < r; ++i)
            if (a[i] != 0) out[i] += term * Rational(static_cast<long>(a[i]));
    }
    return out;
}

/// eta_i(t) = sum_{k >= 1} t^k eta_{k,i}.
template <CoefficientField F>
std::vector<TruncatedSeries<F>> correction_series(const F& field, const lie::SeriesTorusPoint<F>& f)
{
    std::vector<TruncatedSeries<F>> eta(f.leading.rank(), TruncatedSeries<F>(field, f.order()));
    for (int k = 1; k <= f.order(); ++k)
        for (std::size_t i = 0; i < eta.size(); ++i) eta[i][k] = f.corrections[static_cast<std::size_t>(k - 1)][i];
    return eta;
}

template <CoefficientField F>
ChiLog<F> chi_prime_t_log(const lie::RootDatum& datum, const lie::LevelForm& level, const F& field,
                          const lie::SeriesTorusPoint<F>& f)
{
    ChiLog<F> out;
    out.turns = level.h_prime_rational().apply(f.leading.y());
    out.log_part = chi_log_from(datum, level, correction_series(field, f), root_characters(datum, field, f));
    return out;
}

/// Largest k <= T such that chi'_t(f_t) = e(rho) holds through order k; -1 if it
/// already fails at t = 0.
template <CoefficientField F>
int residual_check(const lie::RootDatum& datum, const lie::LevelForm& level, const F& field,
                   const lie::SeriesTorusPoint<F>& f)
{
    const auto chi = chi_prime_t_log(datum, level, field, f);
    for (std::size_t i = 0; i < chi.turns.size(); ++i)
        if (!is_integral(chi.turns[i] - datum.rho()[i])) return -1;
    int first_bad = f.order() + 1;
    for (const auto& s : chi.log_part) first_bad = std::min(first_bad, s.valuation());
    return first_bad - 1;
}

/// Order-by-order solution: the t^k coefficient of the root terms only involves
/// eta_1..eta_{k-1}, so eta_k = -h'^{-1} (that coefficient).
template <CoefficientField F>
lie::SeriesTorusPoint<F> lift_solution(const lie::RootDatum& datum, const lie::LevelForm& level, const F& field,
                                       const TorusPoint& f0, int order)
{
    const auto r = f0.rank();
    auto f = lie::SeriesTorusPoint<F>::unlifted(field, f0, 0);
    if (datum.positive_roots().empty()) return lie::SeriesTorusPoint<F>::unlifted(field, f0, order);
    const auto& inv = level.h_prime_inverse();
    for (int k = 1; k <= order; ++k) {
        f.corrections.push_back(std::vector<ElementOf<F>>(r, field.zero()));
        const auto residual = chi_log_from(datum, level, correction_series(field, f), root_characters(datum, field, f));
        auto& eta = f.corrections.back();
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j)
                if (inv(i, j) != 0) eta[i] = eta[i] - residual[j][k] * inv(i, j);
    }
    return f;
}

/// D_alpha = -t e^alpha / (1 - t e^alpha) - t e^-alpha / (1 - t e^-alpha).
template <CoefficientField F>
TruncatedSeries<F> root_derivative(const TruncatedSeries<F>& e_pos, const TruncatedSeries<F>& e_neg)
{
    const F& field = e_pos.field();
    const auto one = TruncatedSeries<F>::constant(field, e_pos.order(), field.one());
    auto tp = e_pos.shifted();
    auto tn = e_neg.shifted();
    return -(tp * series_inv(one - tp)) - tn * series_inv(one - tn);
}

/// Differential of log chi'_t at f_t: h' + sum_{alpha > 0} alpha alpha^T D_alpha.
template <CoefficientField F>
SeriesMatrix<F> jacobian_H(const lie::RootDatum& datum, const lie::LevelForm& level, const F& field,
                           const lie::SeriesTorusPoint<F>& f)
{
    const auto r = static_cast<std::size_t>(datum.rank());
    auto h = SeriesMatrix<F>::from_rational(field, level.h_prime_rational(), f.order());
    const auto chars = root_characters(datum, field, f);
    for (std::size_t k = 0; k < datum.positive_roots().size(); ++k) {
        const auto& a = datum.positive_roots()[k];
        const auto d = root_derivative(chars.positive[k], chars.negative[k]);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j)
                if (a[i] * a[j] != 0) h(i, j) += d * Rational(static_cast<long>(a[i] * a[j]));
    }
    return h;
}

/// h'^{-1} H: an endomorphism of the Lie algebra of T, identity at t = 0.
template <CoefficientField F>
SeriesMatrix<F> h_dagger(const lie::LevelForm& level, const SeriesMatrix<F>& h)
{
    return level.h_prime_inverse() * h;
}

/// prod over all roots (1 - e^alpha(f_t)) / (|det h'| det H^dagger).
template <CoefficientField F>
TruncatedSeries<F> theta_t(const lie::RootDatum& datum, const lie::LevelForm& level, const F& field,
                           const lie::SeriesTorusPoint<F>& f)
{
    if (!is_regular(datum, f.leading)) throw IrregularPoint("theta_t at irregular point " + f.leading.to_string());
    const auto one = TruncatedSeries<F>::constant(field, f.order(), field.one());
    auto num = one;
    for (const auto& a : datum.roots()) num = num * (one - lie::evaluate_character(field, a, f));
    auto den = series_det(h_dagger(level, jacobian_H(datum, level, field, f))) * Rational(level.isogeny_degree());
    return num * series_inv(den);
}

template <CoefficientField F>
struct LiftedSolution {
    lie::SeriesTorusPoint<F> point;
    std::size_t orbit_size = 1;
    int residual_order = 0;
    TruncatedSeries<F> theta;
};

template <CoefficientField F>
struct BetheSet {
    std::vector<TorusPoint> all_leading;
    std::vector<TorusPoint> regular;
    std::vector<Orbit> orbits;
    /// One entry per orbit, or per regular point when every point was lifted.
    std::vector<LiftedSolution<F>> solutions;
    Integer F_count;
    bool all_points_lifted = false;
};

struct SolveOptions {
    int order = 10;
    /// Lift every regular point instead of one per orbit.
    bool lift_all = false;
    bool parallel = true;
};

template <CoefficientField F>
LiftedSolution<F> lift_and_weigh(const lie::RootDatum& datum, const lie::LevelForm& level, const F& field,
                                 const TorusPoint& f0, std::size_t orbit_size, int order)
{
    auto point = lift_solution(datum, level, field, f0, order);
    const int residual = residual_check(datum, level, field, point);
    auto theta = theta_t(datum, level, field, point);
    return {std::move(point), orbit_size, residual, std::move(theta)};
}

/// Leading solutions, regular ones, orbits and lifts with their theta weights.
template <CoefficientField F>
BetheSet<F> solve_bethe(const lie::RootDatum& datum, const lie::LevelForm& level, const F& field,
                        const SolveOptions& options)
{
    BetheSet<F> out;
    out.all_leading = enumerate_leading(datum, level);
    out.regular = filter_regular(datum, out.all_leading);
    out.orbits = orbit_partition(datum, out.regular);
    out.F_count = level.isogeny_degree();
    out.all_points_lifted = options.lift_all;

    std::vector<std::pair<TorusPoint, std::size_t>> jobs;
    if (options.lift_all)
        for (const auto& p : out.regular) jobs.emplace_back(p, 1);
    else
        for (const auto& o : out.orbits) jobs.emplace_back(o.representative, o.size);

    std::vector<std::optional<LiftedSolution<F>>> results(jobs.size());
    auto work = [&](std::size_t i) {
        results[i] = lift_and_weigh(datum, level, field, jobs[i].first, jobs[i].second, options.order);
    };
    const std::size_t workers =
        options.parallel ? std::min<std::size_t>(jobs.size(), std::max(1u, std::thread::hardware_concurrency())) : 1;
    if (workers > 1) {
        std::atomic<std::size_t> next{0};
        std::vector<std::future<void>> pool;
        for (std::size_t w = 0; w < workers; ++w)
            pool.push_back(std::async(std::launch::async, [&] {
                for (std::size_t i; (i = next++) < jobs.size();) work(i);
            }));
        for (auto& fut : pool) fut.get();
    } else {
        for (std::size_t i = 0; i < jobs.size(); ++i) work(i);
    }
    for (auto& r : results) out.solutions.push_back(std::move(*r));
    return out;
}

} // namespace verlinde::bethe
