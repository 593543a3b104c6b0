#include "verlinde/cli/report.hpp"

#include <sstream>

namespace verlinde::cli {

namespace {

std::string comparison_line(const Comparison& c)
{
    std::string line = "compare " + c.target + ": " + (c.pass ? "PASS" : "FAIL") + " max_deviation=" + c.deviation;
    if (!c.detail.empty()) line += " (" + c.detail + ")";
    return line;
}

} // namespace

std::string emit(const index::VerlindeSeries& series, const std::string& format, const std::vector<Comparison>& comparisons,
                 bool timing)
{
    std::ostringstream out;
    if (format == "json") {
        auto j = index::to_json(series, timing);
        if (!comparisons.empty()) {
            auto arr = nlohmann::json::array();
            for (const auto& c : comparisons)
                arr.push_back({{"target", c.target}, {"pass", c.pass}, {"max_deviation", c.deviation}, {"detail", c.detail}});
            j["comparisons"] = arr;
        }
        out << j.dump(2) << "\n";
    } else if (format == "csv") {
        out << "n,c_n\n";
        for (int n = 0; n <= series.order(); ++n) out << n << "," << series.coefficient_text(n) << "\n";
        for (const auto& c : comparisons) out << "# " << comparison_line(c) << "\n";
    } else if (format == "pretty") {
        for (int n = 0; n <= series.order(); ++n) out << "t^" << n << ": " << series.coefficient_text(n) << "\n";
        out << "\n";
        out << "group " << series.request.value("group", "?") << ", genus " << series.request.value("genus", 0) << ", deg L "
            << series.request.value("degL", 0L) << ", h1(L) " << series.request.value("h1L", 0L) << "\n";
        out << "kind " << series.kind << (series.dims_valid ? " (dims_valid)" : "") << ", backend " << index::to_string(series.backend)
            << ", sharp_L " << series.sharp_L << "\n";
        out << "solutions: " << series.leading_count << " leading, " << series.regular_count << " regular, "
            << series.regular_orbit_count << " regular orbits\n";
        if (series.vanishing) out << "vanishing: " << series.vanishing_reason << "\n";
        for (const auto& f : series.flags) out << "note: " << f << "\n";
        if (timing && series.timing_ms) out << "time: " << *series.timing_ms << " ms\n";
        for (const auto& c : comparisons) out << comparison_line(c) << "\n";
    } else {
        throw std::invalid_argument("unknown output format '" + format + "'");
    }
    return out.str();
}

index::VerlindeSeries parse_report(const std::string& json_text)
{
    return index::series_from_json(nlohmann::json::parse(json_text));
}

} // namespace verlinde::cli
