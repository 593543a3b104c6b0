#pragma once

#include "verlinde/index/series_result.hpp"

#include <mpfr.h>

namespace verlinde::testing {

inline index::IndexRequest make_request(const lie::GroupDescriptor& g, const lie::LevelSpec& level, int genus, int order)
{
    auto d = lie::build_root_datum(g);
    auto l = lie::build_level(d, level);
    index::IndexRequest r(std::move(d), std::move(l));
    r.genus = genus;
    r.order = order;
    index::set_canonical(r);
    return r;
}

inline index::IndexRequest sl2_request(long h, int genus, int order)
{
    return make_request(lie::GroupDescriptor::sl(2), lie::LevelSpec::of_scalar(h), genus, order);
}

inline index::IndexRequest gl2_request(long h1, long h2, int genus, int order)
{
    return make_request(lie::GroupDescriptor::gl(2), lie::LevelSpec::of_pair(h1, h2), genus, order);
}

inline index::IndexRequest sl3_request(long k, int genus, int order)
{
    return make_request(lie::GroupDescriptor::sl(3), lie::LevelSpec::of_scalar(k), genus, order);
}

inline index::IndexRequest with_generic_L(index::IndexRequest r, long degL)
{
    r.canonical = false;
    r.degL = degL;
    r.h1L = index::default_h1L(r.genus, degL, false);
    return r;
}

inline index::BackendOptions bigfloat_options(long bits = 256)
{
    index::BackendOptions o;
    o.backend = index::Backend::bigfloat;
    o.bits = bits;
    return o;
}

/// 2^e at the given precision.
inline BigReal power_of_two(long e, long bits)
{
    BigReal x(Rational(1), bits);
    mpfr_mul_2si(x.get(), x.get(), e, MPFR_RNDN);
    return x;
}

/// Largest |exact_n - float_n| over the coefficients (real and imaginary parts together).
inline BigReal max_deviation(const std::vector<Rational>& exact, const std::vector<BigComplex>& approx, long bits)
{
    BigReal worst(Rational(0), bits);
    for (std::size_t n = 0; n < exact.size() && n < approx.size(); ++n) {
        BigReal d = (to_float(exact[n], bits) - approx[n]).abs();
        if (worst < d) worst = d;
    }
    if (exact.size() != approx.size()) worst = BigReal(Rational(1'000'000), bits);
    return worst;
}

} // namespace verlinde::testing
