#include "begdob/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <limits>
#include <random>
#include <string>
#include <thread>

#include "begdob/bounds.hpp"
#include "begdob/errors.hpp"

namespace begdob {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Dobrushin needs strict inequality; bound checks absorb round-off.
bool is_failure(Check c, double slack) {
    if (c == Check::DobrushinSatisfied) return !(slack > 0.0);
    return !(slack >= -kSlackTolerance);
}

class Accumulator {
public:
    explicit Accumulator(Check c) { result_.check = c; result_.worst_slack = kInf; }

    void record(const Witness& w) {
        ++result_.evaluated;
        if (!result_.worst || w.slack < result_.worst_slack) {
            result_.worst_slack = w.slack;
            result_.worst = w;
        }
        if (is_failure(result_.check, w.slack)) {
            ++result_.failed;
            if (result_.witnesses.size() < kMaxWitnesses) result_.witnesses.push_back(w);
        }
    }

    void unclassified(const Point& p) { result_.unclassified.push_back(p); }

    // Appends a later partial result; earlier entries win ties.
    void merge(const CheckResult& other) {
        result_.evaluated += other.evaluated;
        result_.failed += other.failed;
        if (other.worst && (!result_.worst || other.worst_slack < result_.worst_slack)) {
            result_.worst_slack = other.worst_slack;
            result_.worst = other.worst;
        }
        for (const Witness& w : other.witnesses) {
            if (result_.witnesses.size() >= kMaxWitnesses) break;
            result_.witnesses.push_back(w);
        }
        result_.unclassified.insert(result_.unclassified.end(), other.unclassified.begin(),
                                    other.unclassified.end());
    }

    CheckResult finish() {
        result_.pass = result_.failed == 0;
        return std::move(result_);
    }

private:
    CheckResult result_;
};

double pair_slack(Check check, const ModelParams& params, const NeighborConfig& sigma,
                  Spin tilde) {
    const double l1 = lemma1_bound(sigma, tilde, params);
    switch (check) {
        case Check::TVvsLemma1: return l1 - pair_tv(params, sigma, tilde);
        case Check::Lemma1vsLemma2: return lemma2_bound(params) - l1;
        case Check::Lemma1vsLemma3: return lemma3_bound(params) - l1;
        default: break;
    }
    throw DomainError("not a per-pair check: " + std::string(to_string(check)));
}

double cell_slack(Check check, const ModelParams& params, double max_tv) {
    switch (check) {
        case Check::AllvsTheorem1:
            return theorem1_bound(params) -
                   std::max({max_tv, lemma2_bound(params), lemma3_bound(params)});
        case Check::Theorem1vsOptimum: {
            const ExponentPair ep = exponents(params);
            return r_of_t(ep.a / ep.b) - theorem1_bound(params);
        }
        case Check::DobrushinSatisfied: return 1.0 / (2.0 * params.d) - max_tv;
        default: break;
    }
    throw DomainError("not a per-cell check: " + std::string(to_string(check)));
}

bool is_pair_check(Check c) {
    return c == Check::TVvsLemma1 || c == Check::Lemma1vsLemma2 || c == Check::Lemma1vsLemma3;
}

bool pair_applies(Check c, const BoundaryPair& pair) {
    if (c == Check::Lemma1vsLemma2) return pair.equal_magnitude();
    if (c == Check::Lemma1vsLemma3) return !pair.equal_magnitude();
    return true;
}

std::vector<CheckResult> sweep_point(const SweepSpec& spec, const Point& point) {
    std::vector<Accumulator> acc;
    acc.reserve(spec.checks.size());
    for (Check c : spec.checks) acc.emplace_back(c);

    const bool in_u = sub_region(point.x, point.y) != SubRegion::OutsideU;
    std::vector<bool> active(spec.checks.size(), true);
    for (std::size_t i = 0; i < spec.checks.size(); ++i) {
        if (needs_u(spec.checks[i]) && !in_u) {
            active[i] = false;
            acc[i].unclassified(point);
        }
    }

    const std::uint64_t completions = completion_count(spec.d);
    for (double beta : spec.beta_grid) {
        const ModelParams params{.x = point.x, .y = point.y, .beta = beta, .d = spec.d};
        double max_tv = 0.0;
        std::optional<NeighborConfig> argmax;
        std::optional<Spin> argmax_tilde;
        for (std::uint64_t index = 0; index < completions; ++index) {
            const NeighborConfig base = neighbor_completion(spec.d, index, Spin::zero());
            for (const BoundaryPair& pair : kBoundaryPairs) {
                const NeighborConfig sigma = base.with_distinguished(pair.sigma1);
                const double tv = pair_tv(params, sigma, pair.sigma1_tilde);
                if (!argmax || tv > max_tv) {
                    max_tv = tv;
                    argmax = sigma;
                    argmax_tilde = pair.sigma1_tilde;
                }
                for (std::size_t i = 0; i < spec.checks.size(); ++i) {
                    const Check c = spec.checks[i];
                    if (!active[i] || !is_pair_check(c) || !pair_applies(c, pair)) continue;
                    acc[i].record(Witness{.point = point,
                                          .beta = beta,
                                          .config = sigma,
                                          .sigma1_tilde = pair.sigma1_tilde,
                                          .slack = pair_slack(c, params, sigma, pair.sigma1_tilde)});
                }
            }
        }
        for (std::size_t i = 0; i < spec.checks.size(); ++i) {
            const Check c = spec.checks[i];
            if (!active[i] || is_pair_check(c)) continue;
            // Only the Dobrushin check is attained at a particular pair.
            const bool dob = c == Check::DobrushinSatisfied;
            acc[i].record(Witness{.point = point,
                                  .beta = beta,
                                  .config = dob ? argmax : std::nullopt,
                                  .sigma1_tilde = dob ? argmax_tilde : std::nullopt,
                                  .slack = cell_slack(c, params, max_tv)});
        }
    }

    std::vector<CheckResult> out;
    out.reserve(acc.size());
    for (auto& a : acc) out.push_back(a.finish());
    return out;
}

}  // namespace

std::string_view to_string(Check c) {
    switch (c) {
        case Check::TVvsLemma1: return "TVvsLemma1";
        case Check::Lemma1vsLemma2: return "Lemma1vsLemma2";
        case Check::Lemma1vsLemma3: return "Lemma1vsLemma3";
        case Check::AllvsTheorem1: return "AllvsTheorem1";
        case Check::Theorem1vsOptimum: return "Theorem1vsOptimum";
        case Check::DobrushinSatisfied: return "DobrushinSatisfied";
    }
    return "?";
}

std::optional<Check> parse_check(std::string_view name) {
    for (Check c : kAllChecks) {
        if (to_string(c) == name) return c;
    }
    return std::nullopt;
}

bool needs_u(Check c) {
    return c == Check::Lemma1vsLemma2 || c == Check::Lemma1vsLemma3 ||
           c == Check::AllvsTheorem1 || c == Check::Theorem1vsOptimum;
}

void SweepSpec::validate() const {
    if (d < 1) throw DomainError("dimension must be >= 1");
    if (d > kMaxEnumerationDimension) {
        throw CapacityError("sweeps enumerate exhaustively and support d <= " +
                            std::to_string(kMaxEnumerationDimension));
    }
    for (std::size_t i = 0; i < beta_grid.size(); ++i) {
        if (!(beta_grid[i] >= 0.0) || !std::isfinite(beta_grid[i])) {
            throw DomainError("beta grid values must be finite and >= 0");
        }
        if (i > 0 && !(beta_grid[i] > beta_grid[i - 1])) {
            throw DomainError("beta grid must be strictly increasing");
        }
    }
    for (std::size_t i = 0; i < checks.size(); ++i) {
        for (std::size_t j = i + 1; j < checks.size(); ++j) {
            if (checks[i] == checks[j]) throw DomainError("duplicate check in sweep spec");
        }
    }
    for (const Point& p : points) {
        if (!std::isfinite(p.x) || !std::isfinite(p.y)) throw DomainError("non-finite point");
    }
}

bool SweepReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& r) { return r.pass; });
}

const CheckResult* SweepReport::find(Check c) const {
    for (const CheckResult& r : checks) {
        if (r.check == c) return &r;
    }
    return nullptr;
}

std::vector<double> log_grid(double lo, double hi, int steps) {
    if (!(lo > 0.0) || !(hi > lo) || steps < 2) {
        throw DomainError("log grid needs 0 < lo < hi and steps >= 2");
    }
    std::vector<double> grid(static_cast<std::size_t>(steps));
    const double span = std::log(hi / lo);
    for (int i = 0; i < steps; ++i) {
        grid[static_cast<std::size_t>(i)] = lo * std::exp(span * i / (steps - 1));
    }
    grid.front() = lo;
    grid.back() = hi;
    return grid;
}

std::vector<double> default_beta_grid() { return log_grid(1e-3, 50.0, 40); }

std::vector<Point> sample_points(SubRegion sub, int count, std::uint64_t seed) {
    if (sub == SubRegion::OutsideU) throw DomainError("cannot sample outside A u B u C");
    constexpr double kMargin = 1e-3;
    std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(sub) + 1)));
    std::uniform_real_distribution<double> depth(kMargin, 10.0);
    std::vector<Point> points;
    points.reserve(static_cast<std::size_t>(std::max(count, 0)));
    while (static_cast<int>(points.size()) < count) {
        Point p;
        switch (sub) {
            case SubRegion::A:
                p.y = std::uniform_real_distribution<double>(1.0, 6.0)(rng);
                p.x = -(p.y + 1.0) - depth(rng);
                break;
            case SubRegion::B:
                p.y = std::uniform_real_distribution<double>(-1.0 + kMargin, 1.0 - kMargin)(rng);
                p.x = -(p.y + 1.0) - depth(rng);
                break;
            case SubRegion::C:
                p.y = std::uniform_real_distribution<double>(-6.0, -1.0)(rng);
                p.x = -depth(rng);
                break;
            case SubRegion::OutsideU: break;
        }
        if (sub_region(p.x, p.y) == sub) points.push_back(p);
    }
    return points;
}

SweepSpec default_certification_spec(int d, int per_region, std::uint64_t seed) {
    SweepSpec spec;
    spec.d = d;
    for (SubRegion sub : {SubRegion::A, SubRegion::B, SubRegion::C}) {
        const auto pts = sample_points(sub, per_region, seed);
        spec.points.insert(spec.points.end(), pts.begin(), pts.end());
    }
    spec.beta_grid = default_beta_grid();
    spec.checks.assign(kBoundChecks.begin(), kBoundChecks.end());
    return spec;
}

unsigned default_worker_count() {
    if (const char* env = std::getenv("BEGDOB_WORKERS")) {
        char* end = nullptr;
        const long value = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && value > 0) return static_cast<unsigned>(value);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

SweepReport run_sweep(const SweepSpec& spec, unsigned workers) {
    spec.validate();
    if (workers == 0) workers = default_worker_count();

    const std::size_t n = spec.points.size();
    std::vector<std::vector<CheckResult>> partial(n);
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::atomic_flag error_set = ATOMIC_FLAG_INIT;

    const auto work = [&] {
        for (std::size_t i = next++; i < n && !failed; i = next++) {
            try {
                partial[i] = sweep_point(spec, spec.points[i]);
            } catch (...) {
                if (!error_set.test_and_set()) error = std::current_exception();
                failed = true;
            }
        }
    };
    const unsigned count = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(n, 1)));
    if (count <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(count);
        for (unsigned t = 0; t < count; ++t) pool.emplace_back(work);
    }
    if (error) std::rethrow_exception(error);

    std::vector<Accumulator> acc;
    for (Check c : spec.checks) acc.emplace_back(c);
    for (const auto& results : partial) {
        for (std::size_t i = 0; i < acc.size(); ++i) acc[i].merge(results[i]);
    }

    SweepReport report;
    report.d = spec.d;
    report.beta_grid = spec.beta_grid;
    for (auto& a : acc) report.checks.push_back(a.finish());
    return report;
}

double witness_slack(Check check, int d, const Witness& w) {
    const ModelParams params{.x = w.point.x, .y = w.point.y, .beta = w.beta, .d = d};
    if (is_pair_check(check)) {
        if (!w.config || !w.sigma1_tilde) {
            throw DomainError("per-pair witness needs a configuration and a replacement spin");
        }
        return pair_slack(check, params, *w.config, *w.sigma1_tilde);
    }
    const double max_tv = check == Check::Theorem1vsOptimum ? 0.0 : exact_max_tv(params).max_tv;
    return cell_slack(check, params, max_tv);
}

std::optional<double> find_failure_beta(int d, double x, double y,
                                        const FailureScanOptions& options) {
    const double threshold = 1.0 / (2.0 * d);
    const auto fails = [&](double beta) {
        return exact_max_tv(ModelParams{.x = x, .y = y, .beta = beta, .d = d}).max_tv >= threshold;
    };
    const std::vector<double> grid = log_grid(options.beta_min, options.beta_max, options.steps);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!fails(grid[i])) continue;
        if (i == 0) return grid[0];
        double lo = grid[i - 1];
        double hi = grid[i];
        while (hi - lo > options.beta_tolerance) {
            const double mid = 0.5 * (lo + hi);
            if (fails(mid)) {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        return hi;
    }
    return std::nullopt;
}

std::string_view build_git_rev() {
#ifdef BEGDOB_GIT_REV
    return BEGDOB_GIT_REV;
#else
    return "unknown";
#endif
}

}  // namespace begdob
