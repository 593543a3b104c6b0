#pragma once

#include "verlinde/index/series_result.hpp"

#include <string>
#include <vector>

namespace verlinde::cli {

struct Comparison {
    std::string target;
    bool pass = false;
    /// Max coefficient deviation (or the convention exponent delta) as text.
    std::string deviation;
    std::string detail;
};

/// json (full record), csv ("n,c_n" rows) or pretty ("t^n: c_n" lines plus a summary).
std::string emit(const index::VerlindeSeries& series, const std::string& format,
                 const std::vector<Comparison>& comparisons = {}, bool timing = false);

/// Inverse of the json format.
index::VerlindeSeries parse_report(const std::string& json_text);

} // namespace verlinde::cli
