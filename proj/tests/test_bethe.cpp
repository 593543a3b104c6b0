#include "support/brute_force.hpp"
#include "support/nilpotent_jacobian.hpp"

#include "verlinde/algebra/bigfloat.hpp"
#include "verlinde/algebra/cyclotomic.hpp"
#include "verlinde/bethe/lift.hpp"

#include <doctest.h>

using namespace verlinde;
using namespace verlinde::lie;
using namespace verlinde::bethe;

namespace {

struct Case {
    RootDatum datum;
    LevelForm level;
};

Case sl2(long h)
{
    auto d = build_root_datum(GroupDescriptor::sl(2));
    return {d, build_level(d, LevelSpec::of_scalar(h))};
}

Case gl2(long h1, long h2)
{
    auto d = build_root_datum(GroupDescriptor::gl(2));
    return {d, build_level(d, LevelSpec::of_pair(h1, h2))};
}

Case sl3(long h)
{
    auto d = build_root_datum(GroupDescriptor::sl(3));
    return {d, build_level(d, LevelSpec::of_scalar(h))};
}

Case torus1(long k)
{
    auto d = build_root_datum(GroupDescriptor::torus(1));
    return {d, build_level(d, LevelSpec::of_scalar(k))};
}

std::vector<Case> grid()
{
    return {sl2(1), sl2(2), sl2(3), gl2(2, 1), gl2(3, 1), gl2(3, 2), sl3(1)};
}

TorusPoint pt(std::initializer_list<Rational> y) { return TorusPoint(RationalVector(y)); }

CyclotomicField field_for(const Case& c)
{
    return CyclotomicField(static_cast<int>(conductor_for(c.datum, enumerate_leading(c.datum, c.level))));
}

} // namespace

TEST_CASE("leading solutions")
{
    auto c = sl2(1);
    auto lead = enumerate_leading(c.datum, c.level);
    REQUIRE(lead.size() == 6);
    for (int k = 0; k < 6; ++k) CHECK(lead[static_cast<std::size_t>(k)] == pt({ratio(k, 6)}));

    auto t = torus1(2);
    CHECK(enumerate_leading(t.datum, t.level) == std::vector<TorusPoint>{pt({0}), pt({ratio(1, 2)})});

    for (const auto& g : grid()) {
        auto mine = enumerate_leading(g.datum, g.level);
        CHECK(Integer(static_cast<long>(mine.size())) == g.level.isogeny_degree());
        CHECK(mine == testing::brute_force_leading(g.datum, g.level));
    }
    auto g = gl2(2, 1);
    CHECK(enumerate_leading(g.datum, g.level).size() == 9);
}

TEST_CASE("regular solutions and orbits")
{
    auto c = sl2(1);
    auto reg = filter_regular(c.datum, enumerate_leading(c.datum, c.level));
    CHECK(reg == std::vector<TorusPoint>{pt({ratio(1, 6)}), pt({ratio(1, 3)}), pt({ratio(2, 3)}), pt({ratio(5, 6)})});
    auto orbits = orbit_partition(c.datum, reg);
    REQUIRE(orbits.size() == 2);
    CHECK(orbits[0].representative == pt({ratio(1, 6)}));
    CHECK(orbits[1].representative == pt({ratio(1, 3)}));
    CHECK(orbits[0].size == 2);
    CHECK(orbits[1].size == 2);

    for (long h = 1; h <= 6; ++h) {
        auto s = sl2(h);
        auto lead = enumerate_leading(s.datum, s.level);
        CHECK(lead.size() == static_cast<std::size_t>(2 * (h + 2)));
        CHECK(orbit_partition(s.datum, filter_regular(s.datum, lead)).size() == static_cast<std::size_t>(h + 1));
    }

    auto t = torus1(3);
    auto tl = enumerate_leading(t.datum, t.level);
    CHECK(filter_regular(t.datum, tl) == tl);
    for (const auto& o : orbit_partition(t.datum, tl)) CHECK(o.size == 1);

    CHECK_THROWS_AS(orbit_partition(c.datum, {pt({ratio(1, 6)})}), InputNotWeylClosed);
}

TEST_CASE("orbit partition is a partition on the test grid")
{
    std::vector<Case> cases;
    for (long h = 1; h <= 4; ++h) cases.push_back(sl2(h));
    for (long h1 = 1; h1 <= 3; ++h1)
        for (long h2 = 0; h2 < h1; ++h2) cases.push_back(gl2(h1, h2));
    for (const auto& c : cases) {
        auto reg = filter_regular(c.datum, enumerate_leading(c.datum, c.level));
        std::set<TorusPoint> seen;
        std::size_t total = 0;
        for (const auto& o : orbit_partition(c.datum, reg)) {
            auto orbit = weyl_orbit(c.datum, o.representative);
            CHECK(orbit.size() == o.size);
            CHECK(c.datum.weyl_order() % o.size == 0);
            for (const auto& p : orbit) {
                CHECK(seen.insert(p).second);
                CHECK(weyl_orbit(c.datum, p) == orbit);
            }
            total += o.size;
        }
        CHECK(total == reg.size());
    }
}

TEST_CASE("chi log at t = 0 and on the torus")
{
    auto c = sl2(1);
    CyclotomicField f(6);
    auto p = SeriesTorusPoint<CyclotomicField>::unlifted(f, pt({ratio(1, 6)}), 0);
    auto chi = chi_prime_t_log(c.datum, c.level, f, p);
    CHECK(chi.turns == RationalVector{-1});
    CHECK(chi.log_part[0].is_zero());

    auto t = torus1(2);
    CyclotomicField g(2);
    auto lifted = lift_solution(t.datum, t.level, g, pt({ratio(1, 2)}), 5);
    for (const auto& eta : lifted.corrections) CHECK(g.is_zero(eta[0]));
    CHECK(residual_check(t.datum, t.level, g, lifted) == 5);
    auto theta = theta_t(t.datum, t.level, g, lifted);
    CHECK(theta == TruncatedSeries<CyclotomicField>::constant(g, 5, ratio(1, 2)));
}

TEST_CASE("SL2 chi log matches the scalar formula")
{
    // -2(h+2) eta + 2 [log(1 - t f^2) - log(1 - t f^-2)] with f^2 = e(2y) exp(2 eta)
    auto c = sl2(1);
    CyclotomicField f(6);
    auto p = lift_solution(c.datum, c.level, f, pt({ratio(1, 6)}), 4);
    p.corrections[3][0] = f.from_rational(7);
    auto chi = chi_prime_t_log(c.datum, c.level, f, p);
    auto eta = correction_series(f, p);
    auto f2 = series_exp(eta[0] * Rational(2)) * f.root_of_unity(ratio(1, 3));
    auto fm2 = series_exp(eta[0] * Rational(-2)) * f.root_of_unity(ratio(2, 3));
    auto expect = eta[0] * Rational(-6) + (series_log1p(-f2.shifted()) - series_log1p(-fm2.shifted())) * Rational(2);
    CHECK(chi.log_part[0] == expect);
}

TEST_CASE("lifting and residuals")
{
    auto c = sl2(1);
    CyclotomicField f(6);
    auto lifted = lift_solution(c.datum, c.level, f, pt({ratio(1, 6)}), 6);
    CHECK(residual_check(c.datum, c.level, f, lifted) == 6);
    auto bare = SeriesTorusPoint<CyclotomicField>::unlifted(f, pt({ratio(1, 6)}), 6);
    CHECK(residual_check(c.datum, c.level, f, bare) == 0);
    // 1/12 is not a solution: its turns differ from rho by a non-integer.
    CyclotomicField f12(12);
    auto off = SeriesTorusPoint<CyclotomicField>::unlifted(f12, pt({ratio(1, 12)}), 2);
    CHECK(residual_check(c.datum, c.level, f12, off) == -1);

    for (const auto& g : grid()) {
        auto field = field_for(g);
        auto set = solve_bethe(g.datum, g.level, field, SolveOptions{10, true, true});
        for (const auto& s : set.solutions) CHECK(s.residual_order == 10);
    }
}

TEST_CASE("Weyl equivariance of lifts and theta")
{
    for (const auto& g : grid()) {
        auto field = field_for(g);
        for (const auto& p : filter_regular(g.datum, enumerate_leading(g.datum, g.level))) {
            auto lp = lift_solution(g.datum, g.level, field, p, 5);
            auto theta = theta_t(g.datum, g.level, field, lp);
            for (std::size_t i = 0; i < g.datum.simple_reflections().size(); ++i) {
                const auto& s = g.datum.simple_reflections()[i];
                auto lq = lift_solution(g.datum, g.level, field, reflect(g.datum, i, p), 5);
                for (int k = 0; k < 5; ++k) {
                    const auto& eta = lp.corrections[static_cast<std::size_t>(k)];
                    for (std::size_t a = 0; a < eta.size(); ++a) {
                        auto img = field.zero();
                        for (std::size_t b = 0; b < eta.size(); ++b)
                            if (s(a, b) != 0) img = img + eta[b] * Rational(static_cast<long>(s(a, b)));
                        CHECK(img == lq.corrections[static_cast<std::size_t>(k)][a]);
                    }
                }
                CHECK(theta_t(g.datum, g.level, field, lq) == theta);
            }
        }
    }
}

TEST_CASE("Jacobian agrees with the nilpotent derivative")
{
    for (const auto& g : grid()) {
        auto field = field_for(g);
        auto set = solve_bethe(g.datum, g.level, field, SolveOptions{6, true, false});
        for (const auto& s : set.solutions) {
            auto h = jacobian_H(g.datum, g.level, field, s.point);
            CHECK(h == testing::nilpotent_jacobian(g.datum, g.level, field, s.point));
            auto hd = h_dagger(g.level, h);
            for (std::size_t i = 0; i < hd.size(); ++i)
                for (std::size_t j = 0; j < hd.size(); ++j) CHECK(hd(i, j)[0] == field.from_rational(i == j ? 1 : 0));
        }
    }
}

TEST_CASE("SL2 H dagger and theta")
{
    for (long h = 1; h <= 3; ++h) {
        auto c = sl2(h);
        CyclotomicField f(static_cast<int>(2 * (h + 2)));
        using S = TruncatedSeries<CyclotomicField>;
        for (const auto& p : filter_regular(c.datum, enumerate_leading(c.datum, c.level))) {
            auto lp = lift_solution(c.datum, c.level, f, p, 6);
            auto hd = h_dagger(c.level, jacobian_H(c.datum, c.level, f, lp));
            auto f2 = evaluate_character(f, IntVector{2}, lp);
            auto fm2 = evaluate_character(f, IntVector{-2}, lp);
            auto one = S::constant(f, 6, f.one());
            auto t = S::variable(f, 6);
            auto expect = one + (t * ratio(2, h + 2)) * (f2 - t * Rational(2) + fm2) *
                                    series_inv((one - t * f2) * (one - t * fm2));
            CHECK(hd(0, 0) == expect);
        }
    }
    auto c = sl2(1);
    CyclotomicField f(6);
    auto theta = theta_t(c.datum, c.level, f, lift_solution(c.datum, c.level, f, pt({ratio(1, 6)}), 3));
    CHECK(theta[0] == f.from_rational(ratio(1, 2)));
    CHECK_THROWS_AS(theta_t(c.datum, c.level, f, SeriesTorusPoint<CyclotomicField>::unlifted(f, pt({0}), 3)),
                    IrregularPoint);
}

TEST_CASE("bigfloat lifts agree with exact lifts")
{
    for (const auto& g : grid()) {
        auto field = field_for(g);
        BigFloatField bf(256);
        auto exact = solve_bethe(g.datum, g.level, field, SolveOptions{6, false, false});
        auto approx = solve_bethe(g.datum, g.level, bf, SolveOptions{6, false, false});
        REQUIRE(exact.solutions.size() == approx.solutions.size());
        for (std::size_t i = 0; i < exact.solutions.size(); ++i) {
            CHECK(approx.solutions[i].residual_order == 6);
            for (int k = 0; k <= 6; ++k) {
                auto diff = to_float(exact.solutions[i].theta[k], 256) - approx.solutions[i].theta[k];
                CHECK(diff.abs().to_double() < 1e-60);
            }
        }
    }
}
