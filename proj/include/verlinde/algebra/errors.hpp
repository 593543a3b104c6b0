#pragma once

#include <stdexcept>
#include <string>

namespace verlinde {

struct AlgebraError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BackendMismatch : AlgebraError {
    using AlgebraError::AlgebraError;
};

struct NonUnitConstantTerm : AlgebraError {
    NonUnitConstantTerm() : AlgebraError("series constant term is not invertible") {}
};

struct NonzeroConstantTerm : AlgebraError {
    NonzeroConstantTerm() : AlgebraError("series constant term must vanish") {}
};

struct ConductorOverflow : AlgebraError {
    using AlgebraError::AlgebraError;
};

struct RoundingAmbiguous : AlgebraError {
    using AlgebraError::AlgebraError;
};

} // namespace verlinde
