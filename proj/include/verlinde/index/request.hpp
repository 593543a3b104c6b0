#pragma once

#include "verlinde/lie/level.hpp"
#include "verlinde/lie/representation.hpp"
#include "verlinde/lie/root_datum.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace verlinde::index {

struct RequestError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GammaNotCentral : RequestError {
    using RequestError::RequestError;
};

enum class Convention { reduced, nonreduced };
enum class Variant { standard, parabolic };

std::string to_string(Convention c);
std::string to_string(Variant v);
Convention parse_convention(const std::string& text);
Variant parse_variant(const std::string& text);

/// All geometric inputs of one index computation.
struct IndexRequest {
    IndexRequest(lie::RootDatum d, lie::LevelForm l) : datum(std::move(d)), level(std::move(l)), rep(lie::trivial_rep(datum)) {}

    lie::RootDatum datum;
    lie::LevelForm level;
    int genus = 2;
    long degL = 2;
    long h1L = 1;
    /// L is the canonical bundle K.
    bool canonical = true;
    lie::RepSpec rep;
    /// Topological type gamma in pi_1(G)_Q (the W-invariant part of N_Q).
    std::optional<RationalVector> gamma;
    /// Explicit character twist; exclusive with gamma.
    std::optional<IntVector> mu;
    Convention convention = Convention::reduced;
    Variant variant = Variant::standard;
    /// Weight of B for the parabolic variant.
    IntVector mu_B;
    int order = 10;

    /// chi(L) = deg L + 1 - g.
    long chiL() const { return degL + 1 - genus; }
};

/// Canonical-bundle sugar: deg L = 2g - 2, h^1(L) = 1.
void set_canonical(IndexRequest& request);

/// 0 if deg L > 2g - 2, 1 for L = K, else max(0, g - 1 - deg L).
long default_h1L(int genus, long degL, bool canonical);

/// deg L > max(0, 2g - 2), or L = K with g > 1.
bool dims_valid(const IndexRequest& request);

/// Exponent of (1 - t): -rank chi(L) - dim(z) h^1(L) (reduced) or rank (g - 1 - deg L).
long long sharp_L(const IndexRequest& request);

struct MuResolution {
    std::optional<IntVector> mu;
    bool vanishing = false;
    std::string reason;
};

/// mu = -h gamma; vanishing (with a reason) when it is not integral.
MuResolution mu_from_gamma(const lie::RootDatum& datum, const lie::LevelForm& level, const RationalVector& gamma);

/// gamma for a degree-d bundle: (d/n, ..., d/n) for gl(n), or d times the
/// generator of the W-invariant line for groups with one-dimensional center.
RationalVector gamma_of_degree(const lie::RootDatum& datum, const Rational& d);

/// Resolves gamma or mu and validates the whole request.
MuResolution resolve_mu(const IndexRequest& request);

} // namespace verlinde::index
