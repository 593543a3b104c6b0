#pragma once

#include "verlinde/cli/report.hpp"
#include "verlinde/cli/run_config.hpp"
#include "verlinde/index/series_result.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace verlinde::cli {

enum ExitCode : int { exit_ok = 0, exit_parse = 2, exit_validation = 3, exit_invariant = 4 };

/// Semantic problem with a parsed config (exit 3).
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

index::IndexRequest build_request(const RunConfig& config);
index::BackendOptions backend_options(const RunConfig& config);

std::vector<Comparison> run_comparisons(const RunConfig& config, const index::IndexRequest& request,
                                        const index::VerlindeSeries& series, const index::BackendOptions& options);

/// Executes one config, writing the report to out and failure records to err.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Command-line entry point.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace verlinde::cli
