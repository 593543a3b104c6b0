#pragma once

#include "verlinde/algebra/rational.hpp"
#include "verlinde/lie/root_datum.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace verlinde::lie {

struct LevelError : std::runtime_error {
    enum class Kind { not_negative_definite, not_integral, not_weyl_invariant, not_symmetric, bad_shape, unsupported_scalar };
    LevelError(Kind k, const std::string& what) : std::runtime_error(what), kind(k) {}
    Kind kind;
};

/// How the level was given. A scalar k means h = -k * (basic form) for simple
/// groups, normalized so that sl2 gives h' = -2(k+2); a pair (h1, h2) is the gl(n)
/// form -h1 sum x_i^2 - h2 sum_{i != j} x_i x_j; a matrix is the Gram matrix of h on N.
struct LevelSpec {
    enum class Kind { scalar, pair, matrix };
    Kind kind = Kind::scalar;
    Rational scalar = 1;
    Rational first = 0, second = 0;
    RationalMatrix matrix;
    /// Replaces the default basic level c = -sum_{alpha > 0} alpha alpha^T.
    std::optional<RationalMatrix> critical;

    static LevelSpec of_scalar(Rational k) { return {Kind::scalar, std::move(k), 0, 0, {}, std::nullopt}; }
    static LevelSpec of_pair(Rational h1, Rational h2) { return {Kind::pair, 1, std::move(h1), std::move(h2), {}, std::nullopt}; }
    static LevelSpec of_matrix(RationalMatrix m) { return {Kind::matrix, 1, 0, 0, std::move(m), std::nullopt}; }
};

/// Parses "3", "2,1" or a JSON matrix "[[-2,-1],[-1,-2]]".
LevelSpec parse_level_spec(const std::string& text);
RationalMatrix parse_rational_matrix(const std::string& json_text);

/// Gram matrices of h, c and h' = h + c on N. Immutable after construction.
class LevelForm {
public:
    const RationalMatrix& h() const noexcept { return h_; }
    const RationalMatrix& c() const noexcept { return c_; }
    /// h' with integer entries, negative definite.
    const IntegerMatrix& h_prime() const noexcept { return h_prime_; }
    const RationalMatrix& h_prime_rational() const noexcept { return h_prime_q_; }
    const RationalMatrix& h_prime_inverse() const noexcept { return h_prime_inv_; }
    /// |det h'|: the degree of the isogeny and the number of leading Bethe solutions.
    const Integer& isogeny_degree() const noexcept { return degree_; }

    friend LevelForm build_level(const RootDatum& datum, const LevelSpec& spec);

private:
    RationalMatrix h_, c_, h_prime_q_, h_prime_inv_;
    IntegerMatrix h_prime_;
    Integer degree_;
};

LevelForm build_level(const RootDatum& datum, const LevelSpec& spec);

/// -sum_{alpha > 0} alpha alpha^T: the level of K^{1/2}.
RationalMatrix basic_critical_level(const RootDatum& datum);

/// Invariant form on N with short coroots of square length 2 (simple groups only).
RationalMatrix normalized_basic_form(const RootDatum& datum);

} // namespace verlinde::lie
