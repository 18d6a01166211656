#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "slopekit/integer_matrix.hpp"

namespace slopekit::cli {

enum class OutputFormat { automatic, text, json, csv };

/// Reserved --input name selecting the built-in Cartwright-Steger profile.
inline constexpr const char* kCartwrightSteger = "cartwright-steger";

struct RunConfig {
    std::string subcommand;
    std::optional<std::string> input;
    std::optional<long> max_order;
    std::optional<long> cyclic;
    std::optional<std::vector<long>> weights;
    std::optional<std::string> epimorphism_path;
    std::optional<std::string> character;
    std::optional<std::int64_t> d;
    std::optional<std::int64_t> k;
    std::optional<std::int64_t> q_cover;
    std::optional<std::string> target;
    std::optional<std::string> epsilon;
    std::optional<std::int64_t> max_denominator;
    std::int64_t exponent = 1;
    std::int64_t fiber_genus = 19;
    OutputFormat format = OutputFormat::automatic;
    std::optional<std::string> out_path;
    std::optional<std::string> plot_path;
    /// Worker cap for scans; 0 means hardware concurrency.
    unsigned threads = 0;
};

/// Parses argv into a RunConfig. Throws Error{"cli", "usage"} on bad flags.
/// Returns std::nullopt when help was requested (the text goes to `out`).
std::optional<RunConfig> parse_command_line(int argc, const char* const* argv, std::ostream& out);

/// Checks that every flag required by the subcommand is present.
void validate(const RunConfig& config);

/// Exact rational from "a/b", an integer, or a decimal such as "0.001".
Rational parse_rational(const std::string& text);

std::vector<long> parse_weights(const std::string& text);

/// Executes a validated config. Returns the process exit status: 0 on
/// success, 1 on a module error, 2 on usage errors, 3 when the two
/// cover-b1 routes disagree. Errors are written to `err` as one JSON line.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_command_line + run, with SLOPEKIT_THREADS applied.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace slopekit::cli
