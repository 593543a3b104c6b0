#include "verlinde/bethe/leading.hpp"

#include "verlinde/lie/smith.hpp"

#include <algorithm>
#include <set>

namespace verlinde::bethe {

std::vector<TorusPoint> enumerate_leading(const lie::RootDatum& datum, const lie::LevelForm& level)
{
    const auto r = static_cast<std::size_t>(datum.rank());
    const auto snf = lie::smith_normal_form(level.h_prime());

    // U h' V = D; with y = V z the congruence becomes D z = U rho mod Z^r.
    RationalVector u_rho(r, Rational(0));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) u_rho[i] += Rational(snf.U(i, j)) * datum.rho()[j];

    std::vector<long long> d(r);
    for (std::size_t i = 0; i < r; ++i) {
        if (snf.D(i, i) == 0) throw BetheError("h' is singular");
        d[i] = snf.D(i, i).get_si();
    }

    std::vector<TorusPoint> out;
    std::vector<long long> k(r, 0);
    while (true) {
        RationalVector z(r);
        for (std::size_t i = 0; i < r; ++i) z[i] = (u_rho[i] + Rational(static_cast<long>(k[i]))) / Rational(static_cast<long>(d[i]));
        RationalVector y(r, Rational(0));
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) y[i] += Rational(snf.V(i, j)) * z[j];
        out.emplace_back(std::move(y));

        std::size_t pos = 0;
        while (pos < r && ++k[pos] == d[pos]) k[pos++] = 0;
        if (pos == r) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_regular(const lie::RootDatum& datum, const TorusPoint& f)
{
    for (const auto& a : datum.positive_roots())
        if (is_integral(dot(a, f.y()))) return false;
    return true;
}

std::vector<TorusPoint> filter_regular(const lie::RootDatum& datum, const std::vector<TorusPoint>& points)
{
    std::vector<TorusPoint> out;
    std::copy_if(points.begin(), points.end(), std::back_inserter(out),
                 [&](const TorusPoint& p) { return is_regular(datum, p); });
    return out;
}

std::vector<Orbit> orbit_partition(const lie::RootDatum& datum, const std::vector<TorusPoint>& points)
{
    std::set<TorusPoint> remaining(points.begin(), points.end());
    std::vector<Orbit> out;
    while (!remaining.empty()) {
        const TorusPoint rep = *remaining.begin();
        const auto orbit = lie::weyl_orbit(datum, rep);
        for (const auto& p : orbit) {
            if (remaining.erase(p) == 0)
                throw InputNotWeylClosed("Weyl orbit of " + rep.to_string() + " leaves the input set at " + p.to_string());
        }
        out.push_back({*orbit.begin(), orbit.size()});
    }
    return out;
}

long long conductor_for(const lie::RootDatum& datum, const std::vector<TorusPoint>& points)
{
    long long m = 1;
    for (const auto& p : points) m = lcm(m, p.denominator());
    long long rho_den = 1;
    for (const auto& c : datum.rho()) {
        Rational twice = c * 2;
        rho_den = lcm(rho_den, twice.get_den().get_si());
    }
    return m * rho_den;
}

} // namespace verlinde::bethe
