#pragma once

#include "verlinde/algebra/rational.hpp"

namespace verlinde::lie {

/// U * A * V = D with U, V unimodular and D diagonal, d_i | d_{i+1}, d_i >= 0.
struct SmithForm {
    IntegerMatrix U;
    IntegerMatrix D;
    IntegerMatrix V;
};

SmithForm smith_normal_form(const IntegerMatrix& a);

/// Number of nonzero invariant factors.
std::size_t integer_rank(const IntegerMatrix& a);

} // namespace verlinde::lie
