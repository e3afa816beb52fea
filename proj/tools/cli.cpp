#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "begdob/bounds.hpp"
#include "begdob/errors.hpp"
#include "begdob/model.hpp"
#include "begdob/region.hpp"
#include "begdob/specification.hpp"
#include "begdob/verify.hpp"
#include "spec_file.hpp"
#include "table.hpp"

namespace begdob::cli {

namespace {

struct OutputOptions {
    std::string format = "csv";
    std::string path;
    int digits = 9;
};

void add_output_options(CLI::App* cmd, OutputOptions& o) {
    cmd->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd->add_option("-o,--output", o.path, "Write to this file instead of stdout");
    cmd->add_option("--digits", o.digits, "Significant digits for numeric output")
        ->check(CLI::Range(1, 17))
        ->capture_default_str();
}

class OutputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void emit(const Table& table, const OutputOptions& o, std::ostream& out) {
    const Format format = o.format == "json" ? Format::Json : Format::Csv;
    if (o.path.empty()) {
        write_table(out, table, format, o.digits);
        return;
    }
    std::ofstream file(o.path);
    if (!file) throw OutputError("cannot open '" + o.path + "' for writing");
    write_table(file, table, format, o.digits);
    if (!file) throw OutputError("failed writing '" + o.path + "'");
}

Cell optional_cell(const std::optional<double>& v) {
    return v ? Cell{*v} : Cell{};
}

// ---- region ----------------------------------------------------------------

struct RegionArgs {
    int d = 2;
    double x = 0.0;
    double y = 0.0;
    OutputOptions out;
};

Table region_table(const RegionArgs& a) {
    const RegionLabel label = classify_region(a.x, a.y);
    Table t{{"d", "x", "y", "major", "sub", "curve_x", "inside"}, {}};
    t.rows.push_back({std::int64_t{a.d}, a.x, a.y, std::string(to_string(label.major)),
                      std::string(to_string(label.sub)), curve_x(a.d, a.y),
                      in_dobrushin_region(a.d, a.x, a.y)});
    return t;
}

// ---- curve -----------------------------------------------------------------

struct CurveArgs {
    int d = 2;
    double y_min = -5.0;
    double y_max = 5.0;
    int steps = 101;
    OutputOptions out;
};

Table curve_table(const CurveArgs& a) {
    Table t{{"y", "x_curve"}, {}};
    for (int i = 0; i < a.steps; ++i) {
        const double y =
            i == a.steps - 1 ? a.y_max : a.y_min + (a.y_max - a.y_min) * i / (a.steps - 1);
        t.rows.push_back({y, curve_x(a.d, y)});
    }
    return t;
}

// ---- bounds ----------------------------------------------------------------

struct BoundsArgs {
    int d = 2;
    double x = 0.0;
    double y = 0.0;
    double beta = 1.0;
    OutputOptions out;
};

Table bounds_table(const BoundsArgs& a) {
    const ModelParams params{.x = a.x, .y = a.y, .beta = a.beta, .d = a.d};
    params.validate();
    const SubRegion sub = sub_region(a.x, a.y);
    std::optional<double> ea, eb, bc, r, t1, l2, l3;
    if (sub != SubRegion::OutsideU) {
        const ExponentPair ep = exponents(params);
        ea = ep.a;
        eb = ep.b;
        bc = beta_critical(ep);
        r = r_of_t(ep.a / ep.b);
        t1 = theorem1_bound(params);
        l2 = lemma2_bound(params);
        l3 = lemma3_bound(params);
    }
    std::optional<double> max_tv;
    Cell satisfied;
    if (a.d <= kMaxEnumerationDimension) {
        const DobrushinReport rep = exact_max_tv(params);
        max_tv = rep.max_tv;
        satisfied = rep.satisfied;
    }
    Table t{{"d", "x", "y", "beta", "sub", "a", "b", "beta_c", "r_ab", "theorem1", "lemma2",
             "lemma3", "exact_max_tv", "threshold", "satisfied"},
            {}};
    t.rows.push_back({std::int64_t{a.d}, a.x, a.y, a.beta, std::string(to_string(sub)),
                      optional_cell(ea), optional_cell(eb), optional_cell(bc), optional_cell(r),
                      optional_cell(t1), optional_cell(l2), optional_cell(l3),
                      optional_cell(max_tv), 1.0 / (2.0 * a.d), satisfied});
    return t;
}

// ---- scan ------------------------------------------------------------------

struct ScanArgs {
    int d = 2;
    double x = 0.0;
    double y = 0.0;
    double beta_min = 1e-3;
    double beta_max = 50.0;
    int steps = 40;
    bool find_failure = false;
    OutputOptions out;
};

Table scan_table(const ScanArgs& a) {
    if (a.find_failure) {
        const auto beta = find_failure_beta(a.d, a.x, a.y);
        Table t{{"d", "x", "y", "failure_beta"}, {}};
        t.rows.push_back({std::int64_t{a.d}, a.x, a.y, optional_cell(beta)});
        return t;
    }
    const bool in_u = sub_region(a.x, a.y) != SubRegion::OutsideU;
    Table t{{"beta", "exact_max_tv", "threshold", "theorem1", "satisfied"}, {}};
    for (double beta : log_grid(a.beta_min, a.beta_max, a.steps)) {
        const ModelParams params{.x = a.x, .y = a.y, .beta = beta, .d = a.d};
        const DobrushinReport rep = exact_max_tv(params);
        t.rows.push_back({beta, rep.max_tv, 1.0 / (2.0 * a.d),
                          in_u ? Cell{theorem1_bound(params)} : Cell{}, rep.satisfied});
    }
    return t;
}

// ---- verify ----------------------------------------------------------------

struct VerifyArgs {
    std::string spec_path;
    VerifyConfig overrides;
    std::string checks;
};

int run_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
    VerifyConfig config;
    if (a.spec_path.empty()) {
        config.per_region = 20;
    } else {
        std::ifstream in(a.spec_path);
        if (!in) {
            err << "error: cannot read spec file '" << a.spec_path << "'\n";
            return kExitUsage;
        }
        config = parse_verify_config(in);
    }
    VerifyConfig overrides = a.overrides;
    if (!a.checks.empty()) overrides.checks = parse_check_list(a.checks);
    config = merge(std::move(config), overrides);

    const SweepSpec spec = build_sweep_spec(config);
    SweepReport report = run_sweep(spec, config.workers.value_or(0));

    // Locate the onset of failure for points where the condition breaks.
    if (const CheckResult* dob = report.find(Check::DobrushinSatisfied); dob && !dob->pass) {
        std::vector<Point> seen;
        for (const Witness& w : dob->witnesses) {
            if (std::find(seen.begin(), seen.end(), w.point) != seen.end()) continue;
            seen.push_back(w.point);
            report.failure_scans.push_back({w.point, find_failure_beta(spec.d, w.point.x, w.point.y)});
        }
    }

    const std::string json = to_json(report);
    if (config.output && !config.output->empty()) {
        std::ofstream file(*config.output);
        if (!file) {
            err << "error: cannot open '" << *config.output << "' for writing\n";
            return kExitUsage;
        }
        file << json << '\n';
    } else {
        out << json << '\n';
    }

    err << "verify: d=" << spec.d << " points=" << spec.points.size()
        << " betas=" << spec.beta_grid.size() << '\n';
    for (const CheckResult& r : report.checks) {
        err << (r.pass ? "PASS " : "FAIL ") << to_string(r.check) << " evaluated=" << r.evaluated
            << " failed=" << r.failed;
        if (r.worst) err << " worst_slack=" << format_number(r.worst_slack, 9);
        if (!r.unclassified.empty()) err << " unclassified=" << r.unclassified.size();
        err << '\n';
        if (!r.pass && r.worst) {
            const Witness& w = *r.worst;
            err << "  witness x=" << format_number(w.point.x, 9) << " y=" << format_number(w.point.y, 9)
                << " beta=" << format_number(w.beta, 9) << " slack=" << format_number(w.slack, 9)
                << '\n';
        }
    }
    for (const FailureScan& f : report.failure_scans) {
        err << "  failure onset x=" << format_number(f.point.x, 9)
            << " y=" << format_number(f.point.y, 9) << " beta="
            << (f.beta ? format_number(*f.beta, 9) : std::string("none")) << '\n';
    }
    return report.all_passed() ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Dobrushin uniqueness region of the Blume-Emery-Griffiths model", "begdob"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for every subcommand");

    RegionArgs region_args;
    auto* region = app.add_subcommand("region", "Classify (x, y) and test membership in the uniqueness region");
    region->add_option("-d,--dim", region_args.d, "Lattice dimension")->check(CLI::PositiveNumber)->capture_default_str();
    region->add_option("-x", region_args.x, "Coupling x")->required();
    region->add_option("-y", region_args.y, "Coupling y")->required();
    add_output_options(region, region_args.out);

    CurveArgs curve_args;
    auto* curve = app.add_subcommand("curve", "Export the uniqueness curve x(d, y)");
    curve->add_option("-d,--dim", curve_args.d, "Lattice dimension")->check(CLI::PositiveNumber)->capture_default_str();
    curve->add_option("--y-min", curve_args.y_min, "First y value")->capture_default_str();
    curve->add_option("--y-max", curve_args.y_max, "Last y value")->capture_default_str();
    curve->add_option("--steps", curve_args.steps, "Number of rows (>= 2)")->check(CLI::Range(2, 10000000))->capture_default_str();
    add_output_options(curve, curve_args.out);

    BoundsArgs bounds_args;
    auto* bounds = app.add_subcommand("bounds", "Evaluate the closed-form bounds and the exact Dobrushin quantity");
    bounds->add_option("-d,--dim", bounds_args.d, "Lattice dimension")->check(CLI::PositiveNumber)->capture_default_str();
    bounds->add_option("-x", bounds_args.x, "Coupling x")->required();
    bounds->add_option("-y", bounds_args.y, "Coupling y")->required();
    bounds->add_option("-b,--beta", bounds_args.beta, "Inverse temperature")->check(CLI::NonNegativeNumber)->capture_default_str();
    add_output_options(bounds, bounds_args.out);

    ScanArgs scan_args;
    auto* scan = app.add_subcommand("scan", "Scan the exact Dobrushin quantity over a log-spaced beta grid");
    scan->add_option("-d,--dim", scan_args.d, "Lattice dimension")->check(CLI::Range(1, kMaxEnumerationDimension))->capture_default_str();
    scan->add_option("-x", scan_args.x, "Coupling x")->required();
    scan->add_option("-y", scan_args.y, "Coupling y")->required();
    scan->add_option("--beta-min", scan_args.beta_min, "Smallest beta")->check(CLI::PositiveNumber)->capture_default_str();
    scan->add_option("--beta-max", scan_args.beta_max, "Largest beta")->check(CLI::PositiveNumber)->capture_default_str();
    scan->add_option("--steps", scan_args.steps, "Grid points (>= 2)")->check(CLI::Range(2, 10000000))->capture_default_str();
    scan->add_flag("--find-failure", scan_args.find_failure,
                   "Report the smallest beta where the condition fails instead of the table");
    add_output_options(scan, scan_args.out);

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "Certify the bound-domination chain on a grid");
    verify->add_option("spec", verify_args.spec_path, "Flat key = value sweep spec (default: 20 points per region)");
    verify->add_option("-d,--dim", verify_args.overrides.d, "Lattice dimension")->check(CLI::Range(1, kMaxEnumerationDimension));
    verify->add_option("--per-region", verify_args.overrides.per_region, "Random points per region A, B, C");
    verify->add_option("--seed", verify_args.overrides.seed, "Seed for sampled points");
    verify->add_option("--beta-min", verify_args.overrides.beta_min, "Smallest beta of the log grid");
    verify->add_option("--beta-max", verify_args.overrides.beta_max, "Largest beta of the log grid");
    verify->add_option("--beta-steps", verify_args.overrides.beta_steps, "Points in the log grid");
    verify->add_option("--checks", verify_args.checks, "'bounds', 'all' or a comma-separated list");
    verify->add_option("-o,--output", verify_args.overrides.output, "Report JSON path (default stdout)");
    verify->add_option("--workers", verify_args.overrides.workers,
                       "Worker threads (default: BEGDOB_WORKERS or hardware concurrency)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*region) emit(region_table(region_args), region_args.out, out);
        if (*curve) {
            if (curve_args.y_max < curve_args.y_min) {
                err << "error: --y-max must be >= --y-min\n";
                return kExitUsage;
            }
            emit(curve_table(curve_args), curve_args.out, out);
        }
        if (*bounds) emit(bounds_table(bounds_args), bounds_args.out, out);
        if (*scan) {
            if (scan_args.beta_max <= scan_args.beta_min) {
                err << "error: --beta-max must exceed --beta-min\n";
                return kExitUsage;
            }
            emit(scan_table(scan_args), scan_args.out, out);
        }
        if (*verify) return run_verify(verify_args, out, err);
    } catch (const SpecParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const CapacityError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const OutputError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitOk;
}

}  // namespace begdob::cli
