#include "verlinde/index/request.hpp"

#include <algorithm>

namespace verlinde::index {

std::string to_string(Convention c) { return c == Convention::reduced ? "reduced" : "nonreduced"; }
std::string to_string(Variant v) { return v == Variant::standard ? "standard" : "parabolic"; }

Convention parse_convention(const std::string& text)
{
    if (text == "reduced") return Convention::reduced;
    if (text == "nonreduced") return Convention::nonreduced;
    throw RequestError("convention must be 'reduced' or 'nonreduced', got '" + text + "'");
}

Variant parse_variant(const std::string& text)
{
    if (text == "standard") return Variant::standard;
    if (text == "parabolic") return Variant::parabolic;
    throw RequestError("variant must be 'standard' or 'parabolic', got '" + text + "'");
}

void set_canonical(IndexRequest& request)
{
    request.canonical = true;
    request.degL = 2L * request.genus - 2;
    request.h1L = 1;
}

long default_h1L(int genus, long degL, bool canonical)
{
    if (canonical) return 1;
    if (degL > 2L * genus - 2) return 0;
    return std::max(0L, genus - 1 - degL);
}

bool dims_valid(const IndexRequest& request)
{
    const long g = request.genus;
    return request.degL > std::max(0L, 2 * g - 2) || (request.canonical && g > 1);
}

long long sharp_L(const IndexRequest& request)
{
    const long long r = request.datum.rank();
    if (request.convention == Convention::reduced)
        return -r * request.chiL() - static_cast<long long>(request.datum.center_dim()) * request.h1L;
    return r * (request.genus - 1 - request.degL);
}

MuResolution mu_from_gamma(const lie::RootDatum& datum, const lie::LevelForm& level, const RationalVector& gamma)
{
    const auto r = static_cast<std::size_t>(datum.rank());
    if (gamma.size() != r) throw RequestError("gamma must have " + std::to_string(r) + " coordinates");
    for (const auto& a : datum.roots())
        if (dot(a, gamma) != 0) throw GammaNotCentral("gamma is not W-invariant (pairs nontrivially with a root)");

    MuResolution out;
    IntVector mu(r);
    bool integral = true;
    for (std::size_t i = 0; i < r; ++i) {
        Rational m = 0;
        for (std::size_t j = 0; j < r; ++j) m -= level.h()(i, j) * gamma[j];
        if (!is_integral(m)) {
            integral = false;
            break;
        }
        mu[i] = m.get_num().get_si();
    }
    if (integral) {
        out.mu = std::move(mu);
        return out;
    }
    out.vanishing = true;
    out.reason = datum.kind() == lie::GroupDescriptor::Kind::general_linear ? "mu non-integral (d·h1 ≢ d·h2 mod n)"
                                                                          : "mu non-integral";
    return out;
}

RationalVector gamma_of_degree(const lie::RootDatum& datum, const Rational& d)
{
    const auto r = static_cast<std::size_t>(datum.rank());
    if (datum.kind() == lie::GroupDescriptor::Kind::general_linear)
        return RationalVector(r, d / Rational(static_cast<long>(r)));
    if (datum.kind() == lie::GroupDescriptor::Kind::torus && r == 1) return RationalVector{d};
    if (datum.center_dim() == 0) {
        if (d != 0) throw RequestError("a semisimple group has only degree 0");
        return RationalVector(r, Rational(0));
    }
    throw RequestError("--gamma d=... needs gl(n) or a rank-one torus; give gamma as a rational vector");
}

MuResolution resolve_mu(const IndexRequest& request)
{
    const auto& datum = request.datum;
    const auto r = static_cast<std::size_t>(datum.rank());
    if (request.genus < 0) throw RequestError("genus must be nonnegative");
    if (request.h1L < 0) throw RequestError("h1L must be nonnegative");
    if (request.order < 0) throw RequestError("truncation order must be nonnegative");
    if (request.gamma && request.mu) throw RequestError("give gamma or mu, not both");
    if (request.variant == Variant::parabolic && request.mu_B.size() != r)
        throw RequestError("parabolic variant needs mu_B with " + std::to_string(r) + " coordinates");
    if (request.gamma) return mu_from_gamma(datum, request.level, *request.gamma);
    MuResolution out;
    if (request.mu) {
        if (request.mu->size() != r) throw RequestError("mu must have " + std::to_string(r) + " coordinates");
        for (const auto& co : datum.coroots())
            if (lie::pairing(*request.mu, co) != 0) throw RequestError("mu must be a Weyl-invariant weight");
        out.mu = request.mu;
    }
    return out;
}

} // namespace verlinde::index
