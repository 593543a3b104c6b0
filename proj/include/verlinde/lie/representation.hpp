#pragma once

#include "verlinde/lie/root_datum.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace verlinde::lie {

struct RepresentationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct WeightMultiplicity {
    IntVector weight;
    long long multiplicity = 1;

    friend bool operator==(const WeightMultiplicity&, const WeightMultiplicity&) = default;
};

/// A finite-dimensional representation as a Weyl-invariant weight multiset,
/// sorted by weight with positive multiplicities.
struct RepSpec {
    std::vector<WeightMultiplicity> weights;
    std::string name = "trivial";

    long long dimension() const;
};

RepSpec trivial_rep(const RootDatum& datum);
/// Requires mu to pair to zero with every coroot.
RepSpec one_dim_rep(const RootDatum& datum, const IntVector& mu);
/// C^n for sl(n) and gl(n).
RepSpec defining_rep(const RootDatum& datum);
RepSpec adjoint_rep(const RootDatum& datum);
/// Irreducible representation of dominant highest weight lambda (Freudenthal).
RepSpec irreducible_rep(const RootDatum& datum, const IntVector& highest_weight,
                        long long max_dimension = 1000000);

/// Resolves "trivial", "defining", "adjoint", "one_dim(1,-1)", "irrep(2)" or
/// "highest_weight(1,0)".
RepSpec rep_weights(const RootDatum& datum, const std::string& name);

/// Merges duplicates, drops zero multiplicities, sorts, and checks Weyl invariance.
RepSpec normalized_rep(const RootDatum& datum, std::vector<WeightMultiplicity> weights, std::string name);

bool is_weyl_invariant(const RootDatum& datum, const std::vector<WeightMultiplicity>& weights);

} // namespace verlinde::lie
