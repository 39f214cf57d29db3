#pragma once

/**
 * @file cli.hpp
 * @brief Drivers behind the `logchern` executable, callable in-process.
 *
 * Exit codes: 0 the checked identity holds, 1 it fails (a verified
 * mismatch), 2 input or validation error.
 */

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace logchern::cli {

enum ExitCode : int { kHolds = 0, kFails = 1, kInputError = 2 };

enum class OutputFormat { Text, Json };

struct RunConfig {
    std::optional<std::string> poly;
    std::optional<std::string> input_path;
    unsigned chart_retry_budget = 32;
    std::uint64_t rng_seed = 0;
    std::optional<unsigned> max_jet_order;
    OutputFormat output_format = OutputFormat::Text;
    std::optional<std::string> output_path;
};

struct CodimConfig {
    std::size_t ambient_dim = 0;
    std::vector<unsigned> degrees;
    OutputFormat output_format = OutputFormat::Text;
};

struct BatchConfig {
    std::vector<std::string> input_paths;
    unsigned chart_retry_budget = 32;
    std::uint64_t rng_seed = 0;
    std::optional<unsigned> max_jet_order;
    OutputFormat output_format = OutputFormat::Text;
    std::optional<std::string> output_path;
};

/// Reads a curve file: '#' starts a comment line, the remaining lines are
/// joined into one polynomial in x, y, z. Throws logchern::Error.
std::string read_polynomial_file(const std::string& path);

int run_analyze(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_codim(const CodimConfig& config, std::ostream& out, std::ostream& err);

/// Verifies every input independently (in parallel); output order follows
/// the input order. Exit code is the worst per-curve code.
int run_batch(const BatchConfig& config, std::ostream& out, std::ostream& err);

}  // namespace logchern::cli
