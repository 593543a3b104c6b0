#pragma once

#include "verlinde/lie/level.hpp"
#include "verlinde/lie/torus.hpp"

#include <algorithm>
#include <vector>

namespace verlinde::testing {

/// Scans y in (1/q) Z^r / Z^r, q = |det h'| * den(rho), for h' y = rho mod Z^r.
inline std::vector<lie::TorusPoint> brute_force_leading(const lie::RootDatum& datum, const lie::LevelForm& level)
{
    const auto r = static_cast<std::size_t>(datum.rank());
    long long rho_den = 1;
    for (const auto& c : datum.rho()) rho_den = lcm(rho_den, c.get_den().get_si());
    const long long q = level.isogeny_degree().get_si() * rho_den;
    std::vector<lie::TorusPoint> out;
    std::vector<long long> k(r, 0);
    while (true) {
        RationalVector y(r);
        for (std::size_t i = 0; i < r; ++i) y[i] = ratio(static_cast<long>(k[i]), static_cast<long>(q));
        bool ok = true;
        for (std::size_t i = 0; i < r && ok; ++i) {
            Rational s = -datum.rho()[i];
            for (std::size_t j = 0; j < r; ++j) s += level.h_prime_rational()(i, j) * y[j];
            ok = is_integral(s);
        }
        if (ok) out.emplace_back(y);
        std::size_t pos = 0;
        while (pos < r && ++k[pos] == q) k[pos++] = 0;
        if (pos == r) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace verlinde::testing
