#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "begdob/verify.hpp"

namespace begdob::cli {

class SpecParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Settings read from a flat `key = value` document. Every field is optional
/// so command-line flags can fill or override it.
///
///   # comment
///   d = 2
///   points = -6, 0; -5, 2          (x, y pairs separated by ';')
///   per_region = 20                (random points in each of A, B, C)
///   seed = 20240917
///   beta_grid = 0, 0.5, 1          (explicit grid), or
///   beta_min = 0.001 / beta_max = 50 / beta_steps = 40
///   checks = bounds | all | TVvsLemma1, DobrushinSatisfied, ...
///   output = report.json
///   workers = 4
struct VerifyConfig {
    std::optional<int> d;
    std::optional<std::vector<Point>> points;
    std::optional<int> per_region;
    std::optional<std::uint64_t> seed;
    std::optional<std::vector<double>> beta_grid;
    std::optional<double> beta_min;
    std::optional<double> beta_max;
    std::optional<int> beta_steps;
    std::optional<std::vector<Check>> checks;
    std::optional<std::string> output;
    std::optional<unsigned> workers;
};

/// Throws SpecParseError with the offending line number.
VerifyConfig parse_verify_config(std::istream& in);

/// Fields set in `overrides` replace those in `base`.
VerifyConfig merge(VerifyConfig base, const VerifyConfig& overrides);

std::vector<Check> parse_check_list(const std::string& text);

/// Resolves defaults: d = 2, no points, the 40-point log grid on [1e-3, 50],
/// the bound-domination checks.
SweepSpec build_sweep_spec(const VerifyConfig& config);

}  // namespace begdob::cli
