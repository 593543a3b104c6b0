#include "support/requests.hpp"

#include "verlinde/algebra/cyclotomic.hpp"
#include "verlinde/index/compute.hpp"
#include "verlinde/oracles/sl2_closed_form.hpp"

#include <doctest.h>

using namespace verlinde;
using namespace verlinde::index;
using verlinde::testing::bigfloat_options;
using verlinde::testing::gl2_request;
using verlinde::testing::sl2_request;
using verlinde::testing::sl3_request;

namespace {

std::vector<Rational> ints(std::initializer_list<long> xs)
{
    std::vector<Rational> out;
    for (long x : xs) out.emplace_back(x);
    return out;
}

IndexRequest torus1_request(long k, int genus, int order)
{
    return verlinde::testing::make_request(lie::GroupDescriptor::torus(1), lie::LevelSpec::of_scalar(k), genus, order);
}

} // namespace

TEST_CASE("sharp_L")
{
    auto s = sl2_request(1, 2, 4);
    CHECK(sharp_L(s) == -1);
    s.convention = Convention::nonreduced;
    CHECK(sharp_L(s) == -1);

    auto g = gl2_request(2, 1, 2, 4);
    CHECK(sharp_L(g) == -3);
    g.convention = Convention::nonreduced;
    CHECK(sharp_L(g) == -2);

    auto zero = verlinde::testing::with_generic_L(sl3_request(1, 3, 2), 2);
    zero.h1L = 0;
    CHECK(zero.chiL() == 0);
    CHECK(sharp_L(zero) == 0);
}

TEST_CASE("h1 defaults and validity")
{
    CHECK(default_h1L(2, 2, true) == 1);
    CHECK(default_h1L(2, 3, false) == 0);
    CHECK(default_h1L(3, 1, false) == 1);
    CHECK(default_h1L(3, 4, false) == 0);
    CHECK(default_h1L(1, 0, false) == 0);

    CHECK(dims_valid(sl2_request(1, 2, 2)));
    CHECK_FALSE(dims_valid(sl2_request(1, 1, 2)));
    CHECK(dims_valid(verlinde::testing::with_generic_L(sl2_request(1, 1, 2), 1)));
    CHECK_FALSE(dims_valid(verlinde::testing::with_generic_L(sl2_request(1, 2, 2), 2)));
    CHECK(dims_valid(verlinde::testing::with_generic_L(sl2_request(1, 2, 2), 3)));
}

TEST_CASE("mu from gamma")
{
    auto g = gl2_request(2, 1, 2, 2);
    auto zero = mu_from_gamma(g.datum, g.level, {0, 0});
    CHECK_FALSE(zero.vanishing);
    CHECK(*zero.mu == IntVector{0, 0});

    auto d1 = mu_from_gamma(g.datum, g.level, gamma_of_degree(g.datum, 1));
    CHECK(d1.vanishing);
    CHECK(d1.reason == "mu non-integral (d·h1 ≢ d·h2 mod n)");

    // d h1 = d h2 mod 2 holds for (3,1) at every degree.
    auto g31 = gl2_request(3, 1, 2, 2);
    auto m = mu_from_gamma(g31.datum, g31.level, gamma_of_degree(g31.datum, 1));
    CHECK_FALSE(m.vanishing);
    CHECK(*m.mu == IntVector{2, 2});
    auto d2 = mu_from_gamma(g.datum, g.level, gamma_of_degree(g.datum, 2));
    CHECK_FALSE(d2.vanishing);
    CHECK(*d2.mu == IntVector{3, 3});

    CHECK_THROWS_AS(mu_from_gamma(g.datum, g.level, {1, 0}), GammaNotCentral);
    auto s = sl2_request(1, 2, 2);
    CHECK_THROWS_AS(gamma_of_degree(s.datum, 1), RequestError);
    CHECK(gamma_of_degree(s.datum, 0) == RationalVector{0});
}

TEST_CASE("request validation")
{
    auto r = sl2_request(1, 2, 2);
    r.genus = -1;
    CHECK_THROWS_AS(resolve_mu(r), RequestError);
    r = sl2_request(1, 2, 2);
    r.gamma = RationalVector{0};
    r.mu = IntVector{0};
    CHECK_THROWS_AS(resolve_mu(r), RequestError);
    r = sl2_request(1, 2, 2);
    r.mu = IntVector{2};
    CHECK_THROWS_AS(resolve_mu(r), RequestError);
    r = sl2_request(1, 2, 2);
    r.order = -1;
    CHECK_THROWS_AS(resolve_mu(r), RequestError);
}

TEST_CASE("classical t^0 values")
{
    CHECK(classical_verlinde_t0(sl2_request(1, 2, 0)) == 4);
    CHECK(classical_verlinde_t0(sl2_request(1, 3, 0)) == 8);
    for (long h = 1; h <= 4; ++h) {
        CHECK(classical_verlinde_t0(sl2_request(h, 1, 0)) == h + 1);
        for (int g = 2; g <= 3; ++g) {
            const auto r = sl2_request(h, g, 2);
            CHECK(classical_verlinde_t0(r) == oracles::classical_sine_sum(h, g));
            CHECK(compute_index(r).exact_coefficients[0] == classical_verlinde_t0(r));
        }
    }
    auto g = gl2_request(3, 1, 2, 2);
    g.gamma = gamma_of_degree(g.datum, 1);
    CHECK(compute_index(g).exact_coefficients[0] == classical_verlinde_t0(g));
}

TEST_CASE("SL2 series")
{
    CHECK(compute_index(sl2_request(1, 2, 8)).exact_coefficients == ints({4, 0, 12, 0, 24, 0, 40, 0, 60}));
    CHECK(compute_index(sl2_request(2, 2, 8)).exact_coefficients == ints({10, 12, 40, 36, 90, 72, 160, 120, 250}));
    CHECK(compute_index(sl2_request(3, 3, 4)).exact_coefficients == ints({120, 576, 2184, 5360, 12576}));
    for (long h = 1; h <= 3; ++h)
        for (int g = 2; g <= 3; ++g) {
            CyclotomicField f(oracles::sl2_closed_form_conductor(h));
            auto oracle = oracles::sl2_closed_form(f, h, g, 6);
            auto mine = compute_index(sl2_request(h, g, 6)).exact_coefficients;
            for (int n = 0; n <= 6; ++n) CHECK(oracle[n].as_rational() == mine[static_cast<std::size_t>(n)]);
        }
}

TEST_CASE("GL2 and SL3 series")
{
    CHECK(compute_index(gl2_request(2, 1, 2, 8)).exact_coefficients == ints({9, 18, 54, 90, 180, 270, 450, 630, 945}));
    auto g = gl2_request(3, 1, 2, 8);
    g.gamma = gamma_of_degree(g.datum, 1);
    CHECK(compute_index(g).exact_coefficients == ints({24, 128, 328, 768, 1424, 2560, 4080, 6400, 9320}));
    CHECK(compute_index(sl3_request(1, 2, 6)).exact_coefficients == ints({9, 0, 27, 45, 54, 135, 225}));

    auto v = gl2_request(2, 1, 2, 4);
    v.gamma = gamma_of_degree(v.datum, 1);
    auto s = compute_index(v);
    CHECK(s.vanishing);
    CHECK(s.exact_coefficients == ints({0, 0, 0, 0, 0}));
}

TEST_CASE("torus examples")
{
    // g = 1, deg L = 0, h1 = 0: the sum is the number of points and sharp_L = 0.
    auto r = verlinde::testing::with_generic_L(torus1_request(2, 1, 3), 0);
    CHECK(r.h1L == 0);
    auto s = compute_index(r);
    CHECK(s.sharp_L == 0);
    CHECK(s.exact_coefficients == ints({2, 0, 0, 0}));

    // Same with L = K: h1 = 1 adds (1 - t)^{-1}.
    auto k = torus1_request(2, 1, 3);
    CHECK(compute_index(k).exact_coefficients == ints({2, 2, 2, 2}));

    // Genus 2: theta = 1/2 at each of the 2 points.
    CHECK(compute_index(torus1_request(2, 2, 0)).exact_coefficients == ints({4}));
}

TEST_CASE("convention ratio")
{
    auto s = convention_ratio(sl2_request(2, 2, 6));
    CHECK(s.delta == 0);
    CHECK(s.holds);
    CHECK(s.reduced.exact_coefficients == s.nonreduced.exact_coefficients);

    auto g = convention_ratio(gl2_request(3, 2, 2, 6));
    CHECK(g.delta == -1);
    CHECK(g.holds);

    auto big = verlinde::testing::with_generic_L(sl3_request(1, 2, 3), 3);
    CHECK(convention_ratio(big).delta == 0);
}

TEST_CASE("orbit representatives can be replaced")
{
    for (auto r : {sl2_request(2, 2, 5), gl2_request(3, 1, 2, 5), sl3_request(1, 2, 4)}) {
        const auto mu = resolve_mu(r).mu;
        auto lead = bethe::enumerate_leading(r.datum, r.level);
        CyclotomicField f(static_cast<int>(bethe::conductor_for(r.datum, lead)));
        auto set = bethe::solve_bethe(r.datum, r.level, f, bethe::SolveOptions{r.order, false, false});
        const auto reference = index_sum(r, mu, f, set);
        auto swapped = set;
        for (std::size_t i = 0; i < set.orbits.size(); ++i) {
            auto orbit = lie::weyl_orbit(r.datum, set.orbits[i].representative);
            swapped.solutions[i] = bethe::lift_and_weigh(r.datum, r.level, f, *orbit.rbegin(), orbit.size(), r.order);
        }
        CHECK(index_sum(r, mu, f, swapped) == reference);
    }
}

TEST_CASE("backends agree")
{
    const long bits = 256;
    const auto tol = verlinde::testing::power_of_two(-200, bits);
    for (auto r : {sl2_request(1, 2, 6), sl2_request(3, 3, 6), gl2_request(3, 2, 2, 6), sl3_request(1, 2, 4)}) {
        auto exact = compute_index(r);
        auto approx = compute_index(r, bigfloat_options(bits));
        CHECK(approx.bits == bits);
        CHECK_FALSE(tol < verlinde::testing::max_deviation(exact.exact_coefficients, approx.float_coefficients, bits));
    }
}

TEST_CASE("integrality on small genus and generic L")
{
    for (long h = 1; h <= 3; ++h)
        for (int g = 0; g <= 3; ++g)
            for (long d = 2 * g - 1; d <= 2 * g + 1; ++d) {
                if (d <= 0) continue;
                auto r = verlinde::testing::with_generic_L(sl2_request(h, g, 4), d);
                auto s = compute_index(r);
                for (const auto& c : s.exact_coefficients) {
                    CHECK(is_integral(c));
                    CHECK(c >= 0);
                }
            }
}

TEST_CASE("representations and twists")
{
    // The defining representation's trace vanishes at odd sl2 level by the
    // centre symmetry e(y) -> e(y + 1/2).
    auto r = sl2_request(1, 2, 4);
    r.rep = lie::defining_rep(r.datum);
    CHECK(compute_index(r).exact_coefficients == ints({0, 0, 0, 0, 0}));

    auto a = sl2_request(2, 2, 4);
    a.rep = lie::adjoint_rep(a.datum);
    auto s = compute_index(a);
    CHECK(s.exact_coefficients[0] == classical_verlinde_t0(a));
    for (const auto& c : s.exact_coefficients) CHECK(is_integral(c));
}

TEST_CASE("parabolic variant")
{
    for (long lambda = 0; lambda <= 2; ++lambda) {
        auto std_req = sl2_request(2, 2, 3);
        std_req.rep = lie::irreducible_rep(std_req.datum, {lambda});
        auto par = sl2_request(2, 2, 3);
        par.variant = Variant::parabolic;
        par.mu_B = {lambda};
        auto a = compute_index(std_req);
        auto b = compute_index(par);
        CHECK(a.exact_coefficients[0] == b.exact_coefficients[0]);
    }

    // Without the t factor the flag-variety sum reproduces the character:
    // sum over all regular points of theta e^lambda / prod(1 - e^-alpha)
    // equals the orbit sum of theta Tr V_lambda.
    auto base = sl2_request(2, 2, 4);
    auto lead = bethe::enumerate_leading(base.datum, base.level);
    CyclotomicField f(static_cast<int>(bethe::conductor_for(base.datum, lead)));
    auto all = bethe::solve_bethe(base.datum, base.level, f, bethe::SolveOptions{base.order, true, false});
    auto reps = bethe::solve_bethe(base.datum, base.level, f, bethe::SolveOptions{base.order, false, false});
    const auto one = TruncatedSeries<CyclotomicField>::constant(f, base.order, f.one());
    for (long lambda = 0; lambda <= 2; ++lambda) {
        TruncatedSeries<CyclotomicField> lhs(f, base.order), rhs(f, base.order);
        for (const auto& s : all.solutions) {
            auto den = one - lie::evaluate_character(f, IntVector{-2}, s.point);
            lhs += s.theta * lie::evaluate_character(f, IntVector{lambda}, s.point) * series_inv(den);
        }
        auto rep = lie::irreducible_rep(base.datum, {lambda});
        for (const auto& s : reps.solutions) rhs += s.theta * trace(rep, f, s.point);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("series report fields")
{
    auto s = compute_index(sl2_request(1, 2, 4));
    CHECK(s.kind == "dimension");
    CHECK(s.dims_valid);
    CHECK(s.leading_count == 6);
    CHECK(s.regular_count == 4);
    CHECK(s.regular_orbit_count == 2);
    CHECK(s.F_count == 6);
    CHECK(series_from_json(to_json(s)) == s);

    auto g1 = compute_index(sl2_request(1, 1, 2));
    CHECK(g1.kind == "index");

    auto b = compute_index(sl2_request(1, 2, 2), bigfloat_options(160));
    CHECK(series_from_json(to_json(b)) == b);
}
