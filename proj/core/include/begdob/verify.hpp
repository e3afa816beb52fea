#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "begdob/model.hpp"
#include "begdob/specification.hpp"

namespace begdob {

/// Inequalities certified by a sweep.
///   TVvsLemma1         exact pair TV <= lemma1_bound, every pair
///   Lemma1vsLemma2     lemma1_bound <= lemma2_bound, |sigma_1| = |sigma~_1| pairs
///   Lemma1vsLemma3     lemma1_bound <= lemma3_bound, |sigma_1| != |sigma~_1| pairs
///   AllvsTheorem1      max(exact max TV, lemma2, lemma3) <= theorem1_bound
///   Theorem1vsOptimum  theorem1_bound <= r(a/b)
///   DobrushinSatisfied exact max TV < 1/(2d)
enum class Check {
    TVvsLemma1,
    Lemma1vsLemma2,
    Lemma1vsLemma3,
    AllvsTheorem1,
    Theorem1vsOptimum,
    DobrushinSatisfied,
};

inline constexpr std::array<Check, 6> kAllChecks = {
    Check::TVvsLemma1,    Check::Lemma1vsLemma2,    Check::Lemma1vsLemma3,
    Check::AllvsTheorem1, Check::Theorem1vsOptimum, Check::DobrushinSatisfied,
};

/// The bound-domination chain, without the Dobrushin condition itself.
inline constexpr std::array<Check, 5> kBoundChecks = {
    Check::TVvsLemma1,    Check::Lemma1vsLemma2,    Check::Lemma1vsLemma3,
    Check::AllvsTheorem1, Check::Theorem1vsOptimum,
};

std::string_view to_string(Check c);
std::optional<Check> parse_check(std::string_view name);

/// True for checks whose bounds only exist on A u B u C.
bool needs_u(Check c);

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point&, const Point&) = default;
};

struct SweepSpec {
    int d = 2;
    std::vector<Point> points;
    std::vector<double> beta_grid;
    std::vector<Check> checks;

    /// Throws DomainError for a non-increasing or negative grid, d < 1, or
    /// duplicated checks; CapacityError if d exceeds the enumeration limit.
    void validate() const;
};

struct Witness {
    Point point;
    double beta = 0.0;
    /// Boundary condition sigma and replacement sigma~_1 for per-pair checks.
    std::optional<NeighborConfig> config;
    std::optional<Spin> sigma1_tilde;
    double slack = 0.0;
};

struct CheckResult {
    Check check = Check::TVvsLemma1;
    std::size_t evaluated = 0;
    std::size_t failed = 0;
    /// Minimum of bound - exact over everything evaluated; +inf if nothing was.
    double worst_slack = 0.0;
    std::optional<Witness> worst;
    /// Failing evaluations, first kMaxWitnesses in sweep order.
    std::vector<Witness> witnesses;
    /// Points outside A u B u C for checks that need it.
    std::vector<Point> unclassified;
    bool pass = true;
};

struct FailureScan {
    Point point;
    std::optional<double> beta;
};

struct SweepReport {
    int d = 2;
    std::vector<double> beta_grid;
    std::vector<CheckResult> checks;
    /// Filled by callers that also run find_failure_beta.
    std::vector<FailureScan> failure_scans;

    bool all_passed() const;
    const CheckResult* find(Check c) const;
};

/// Bound checks tolerate this much round-off in analytically true inequalities.
inline constexpr double kSlackTolerance = 1e-12;
inline constexpr std::size_t kMaxWitnesses = 32;

/// Logarithmically spaced grid with `steps` points from lo to hi inclusive.
std::vector<double> log_grid(double lo, double hi, int steps);

/// 40 log-spaced points on [1e-3, 50].
std::vector<double> default_beta_grid();

/// `count` reproducible points inside sub-region A, B or C, kept at least 1e-3
/// away from the defining lines.
std::vector<Point> sample_points(SubRegion sub, int count, std::uint64_t seed);

inline constexpr std::uint64_t kDefaultSampleSeed = 20240917;

/// Points per region A, B, C (in that order) on the default grid, bound checks only.
SweepSpec default_certification_spec(int d = 2, int per_region = 20,
                                     std::uint64_t seed = kDefaultSampleSeed);

/// Number of workers from BEGDOB_WORKERS, else the hardware concurrency.
unsigned default_worker_count();

/// Evaluates every requested check at every (point, beta) by exhaustive
/// enumeration. Output depends only on the spec, not on `workers`
/// (0 selects default_worker_count()).
SweepReport run_sweep(const SweepSpec& spec, unsigned workers = 0);

/// Recomputes a witness slack from scratch.
double witness_slack(Check check, int d, const Witness& w);

struct FailureScanOptions {
    double beta_min = 1e-3;
    double beta_max = 100.0;
    int steps = 200;
    double beta_tolerance = 1e-6;
};

/// Smallest beta at which exact_max_tv >= 1/(2d): the first failing point of a
/// log grid, refined by bisection against the previous grid point. nullopt if
/// the condition holds on the whole grid.
std::optional<double> find_failure_beta(int d, double x, double y,
                                        const FailureScanOptions& options = {});

/// Git revision baked in at configure time.
std::string_view build_git_rev();

/// Serializes a report as JSON:
/// {meta: {d, grid, git_rev}, checks: [{name, pass, worst_slack, ...}], ...}.
std::string to_json(const SweepReport& report, int indent = 2);

}  // namespace begdob
