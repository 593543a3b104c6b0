#pragma once

#include "verlinde/algebra/rational.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace verlinde::lie {

struct RootDatumError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using ReflectionMatrix = Matrix<long long>;

/// Default cap on |W| for breadth-first enumeration (10!).
inline constexpr std::size_t kDefaultWeylCap = 3628800;

/// Roots and coroots supplied directly (M- and N-coordinates, parallel lists).
struct ExplicitRootData {
    int rank = 0;
    std::vector<IntVector> roots;
    std::vector<IntVector> coroots;
    std::optional<std::vector<ReflectionMatrix>> reflections;
    std::optional<int> center_dim;
    std::string name = "explicit";
};

struct GroupDescriptor {
    enum class Kind { special_linear, general_linear, torus, explicit_data };
    Kind kind = Kind::special_linear;
    int n = 2;
    ExplicitRootData data;

    static GroupDescriptor sl(int n) { return {Kind::special_linear, n, {}}; }
    static GroupDescriptor gl(int n) { return {Kind::general_linear, n, {}}; }
    static GroupDescriptor torus(int r) { return {Kind::torus, r, {}}; }
    static GroupDescriptor from_data(ExplicitRootData d) { return {Kind::explicit_data, d.rank, std::move(d)}; }
};

/// Accepts sl2, sl(3), SL_4, gl2, gl(3), torus1, torus(2), pgl2 (rejected later).
GroupDescriptor parse_group_descriptor(const std::string& text);

/// Root datum of a connected reductive group with free pi_1. Torus points live in
/// N_Q / N (coordinates y), weights in M; the pairing is the dot product.
class RootDatum {
public:
    const std::string& name() const noexcept { return name_; }
    GroupDescriptor::Kind kind() const noexcept { return kind_; }
    int rank() const noexcept { return rank_; }
    const std::vector<IntVector>& roots() const noexcept { return roots_; }
    const std::vector<IntVector>& coroots() const noexcept { return coroots_; }
    const std::vector<IntVector>& positive_roots() const noexcept { return positive_roots_; }
    const std::vector<IntVector>& positive_coroots() const noexcept { return positive_coroots_; }
    const std::vector<IntVector>& simple_roots() const noexcept { return simple_roots_; }
    const std::vector<IntVector>& simple_coroots() const noexcept { return simple_coroots_; }
    /// s_i acting on N: xi -> xi - <alpha_i, xi> alpha_i^vee.
    const std::vector<ReflectionMatrix>& simple_reflections() const noexcept { return simple_reflections_; }
    const RationalVector& rho() const noexcept { return rho_; }
    int center_dim() const noexcept { return center_dim_; }
    int pi1_rank() const noexcept { return pi1_rank_; }
    std::size_t weyl_order() const noexcept { return weyl_order_; }
    /// Number of simple factors when semisimple part is irreducible, i.e. a simple group.
    bool is_simple() const noexcept { return simple_; }

    /// s_i on N_Q, not reduced mod 1.
    RationalVector reflect_coweight(std::size_t i, const RationalVector& y) const;
    /// s_i on M.
    IntVector reflect_weight(std::size_t i, const IntVector& w) const;
    RationalVector reflect_weight(std::size_t i, const RationalVector& w) const;

    friend RootDatum build_root_datum(const GroupDescriptor& spec, std::size_t weyl_cap);

private:
    RootDatum() = default;

    std::string name_;
    GroupDescriptor::Kind kind_ = GroupDescriptor::Kind::explicit_data;
    int rank_ = 0;
    std::vector<IntVector> roots_, coroots_;
    std::vector<IntVector> positive_roots_, positive_coroots_;
    std::vector<IntVector> simple_roots_, simple_coroots_;
    std::vector<ReflectionMatrix> simple_reflections_;
    RationalVector rho_;
    int center_dim_ = 0;
    int pi1_rank_ = 0;
    std::size_t weyl_order_ = 1;
    bool simple_ = false;
};

RootDatum build_root_datum(const GroupDescriptor& spec, std::size_t weyl_cap = kDefaultWeylCap);

long long pairing(const IntVector& weight, const IntVector& coweight);

/// JSON object {rank, roots, coroots, reflections?, center_dim?, name?}.
ExplicitRootData parse_explicit_root_data(const std::string& json_text);
std::string explicit_root_data_to_json(const ExplicitRootData& data);

} // namespace verlinde::lie
