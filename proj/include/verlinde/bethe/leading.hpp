#pragma once

#include "verlinde/lie/level.hpp"
#include "verlinde/lie/root_datum.hpp"
#include "verlinde/lie/torus.hpp"

#include <stdexcept>
#include <vector>

namespace verlinde::bethe {

using lie::TorusPoint;

struct BetheError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InputNotWeylClosed : BetheError {
    using BetheError::BetheError;
};

struct IrregularPoint : BetheError {
    using BetheError::BetheError;
};

/// All y mod Z^r with h' y = rho mod Z^r, sorted; there are |det h'| of them.
std::vector<TorusPoint> enumerate_leading(const lie::RootDatum& datum, const lie::LevelForm& level);

/// e^alpha(f) != 1 for every root, i.e. <alpha, y> not an integer.
bool is_regular(const lie::RootDatum& datum, const TorusPoint& f);
std::vector<TorusPoint> filter_regular(const lie::RootDatum& datum, const std::vector<TorusPoint>& points);

struct Orbit {
    TorusPoint representative;
    std::size_t size = 0;
};

/// Splits a W-closed set into orbits; the representative is the smallest
/// canonical y. Orbits are returned in order of their representatives.
std::vector<Orbit> orbit_partition(const lie::RootDatum& datum, const std::vector<TorusPoint>& points);

/// Conductor of the cyclotomic field containing every character value at the
/// given points: lcm of coordinate denominators times the denominator of 2 rho.
long long conductor_for(const lie::RootDatum& datum, const std::vector<TorusPoint>& points);

} // namespace verlinde::bethe
