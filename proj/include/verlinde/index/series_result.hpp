#pragma once

#include "verlinde/algebra/bigfloat.hpp"
#include "verlinde/index/request.hpp"

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace verlinde::index {

enum class Backend { exact, bigfloat };

std::string to_string(Backend b);
Backend parse_backend(const std::string& text);

struct BackendOptions {
    Backend backend = Backend::exact;
    long bits = kDefaultPrecisionBits;
    bool parallel = true;
    /// Keep a per-solution dump {y, corrections, residual_order, theta_coefficients}.
    bool dump_solutions = false;
};

/// An internal consistency check failed; carries a machine-readable record.
struct InvariantFailure : std::runtime_error {
    InvariantFailure(std::string check_name, const std::string& message, nlohmann::json detail = nlohmann::json::object())
        : std::runtime_error(message), check(std::move(check_name)), details(std::move(detail))
    {
    }
    std::string check;
    nlohmann::json details;
};

/// The output series c_0 + c_1 t + ... + c_T t^T with its metadata.
struct VerlindeSeries {
    Backend backend = Backend::exact;
    long bits = 0;
    long long conductor = 1;
    /// Exact backend: coefficients verified to lie in Q.
    std::vector<Rational> exact_coefficients;
    /// Bigfloat backend.
    std::vector<BigComplex> float_coefficients;

    long long sharp_L = 0;
    Integer F_count = 0;
    std::size_t leading_count = 0;
    std::size_t regular_count = 0;
    std::size_t regular_orbit_count = 0;
    bool dims_valid = false;
    /// "dimension" or "index".
    std::string kind = "index";
    bool vanishing = false;
    std::string vanishing_reason;
    std::vector<std::string> flags;
    nlohmann::json request = nlohmann::json::object();
    nlohmann::json solutions;
    std::optional<double> timing_ms;

    int order() const;
    /// Coefficient n as text: exact rationals, or the real part in decimal.
    std::string coefficient_text(int n) const;
};

bool operator==(const VerlindeSeries& a, const VerlindeSeries& b);

nlohmann::json to_json(const VerlindeSeries& s, bool include_timing = false);
VerlindeSeries series_from_json(const nlohmann::json& j);

nlohmann::json request_to_json(const IndexRequest& request, const MuResolution& mu);

/// Runs the whole pipeline on the chosen backend and checks the output invariants.
VerlindeSeries compute_index(const IndexRequest& request, const BackendOptions& options = {});

/// c_0 computed directly from the leading solutions: sum over regular orbits of
/// theta_0(f0)^{1-g} e^{-mu}(f0) Tr_U(f0), theta_0 = prod(1 - e^alpha(f0)) / |det h'|.
Rational classical_verlinde_t0(const IndexRequest& request);

struct ConventionComparison {
    long long delta = 0;
    bool holds = false;
    VerlindeSeries reduced;
    VerlindeSeries nonreduced;
};

/// delta = sharp_L(reduced) - sharp_L(nonreduced) and whether
/// series(reduced) = (1 - t)^delta series(nonreduced) through order T.
ConventionComparison convention_ratio(const IndexRequest& request, const BackendOptions& options = {});

} // namespace verlinde::index
