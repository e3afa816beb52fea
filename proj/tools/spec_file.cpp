#include "spec_file.hpp"

#include <algorithm>
#include <charconv>
#include <string_view>

namespace begdob::cli {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        parts.push_back(trim(s.substr(start, pos == std::string_view::npos ? pos : pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

template <typename T>
T parse_number(std::string_view text, std::string_view what) {
    text = trim(text);
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    T value{};
    const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
    if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
        throw SpecParseError("invalid " + std::string(what) + ": '" + std::string(text) + "'");
    }
    return value;
}

std::vector<Point> parse_points(std::string_view text) {
    std::vector<Point> points;
    if (trim(text).empty()) return points;
    for (std::string_view item : split(text, ';')) {
        if (item.empty()) continue;
        const auto xy = split(item, ',');
        if (xy.size() != 2) throw SpecParseError("point must be 'x, y': '" + std::string(item) + "'");
        points.push_back({parse_number<double>(xy[0], "x"), parse_number<double>(xy[1], "y")});
    }
    return points;
}

std::vector<double> parse_grid(std::string_view text) {
    std::vector<double> grid;
    if (trim(text).empty()) return grid;
    for (std::string_view item : split(text, ',')) grid.push_back(parse_number<double>(item, "beta"));
    return grid;
}

}  // namespace

std::vector<Check> parse_check_list(const std::string& text) {
    const std::string_view body = trim(text);
    if (body == "all") return {kAllChecks.begin(), kAllChecks.end()};
    if (body == "bounds") return {kBoundChecks.begin(), kBoundChecks.end()};
    std::vector<Check> checks;
    if (body.empty()) return checks;
    for (std::string_view name : split(body, ',')) {
        const auto check = parse_check(name);
        if (!check) throw SpecParseError("unknown check '" + std::string(name) + "'");
        if (std::find(checks.begin(), checks.end(), *check) == checks.end()) checks.push_back(*check);
    }
    return checks;
}

VerifyConfig parse_verify_config(std::istream& in) {
    VerifyConfig config;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view body = line;
        if (const auto hash = body.find('#'); hash != std::string_view::npos) body = body.substr(0, hash);
        body = trim(body);
        if (body.empty()) continue;
        const auto eq = body.find('=');
        if (eq == std::string_view::npos) {
            throw SpecParseError("line " + std::to_string(line_no) + ": expected 'key = value'");
        }
        const std::string key(trim(body.substr(0, eq)));
        const std::string_view value = trim(body.substr(eq + 1));
        try {
            if (key == "d") {
                config.d = parse_number<int>(value, "d");
            } else if (key == "points") {
                config.points = parse_points(value);
            } else if (key == "per_region") {
                config.per_region = parse_number<int>(value, "per_region");
            } else if (key == "seed") {
                config.seed = parse_number<std::uint64_t>(value, "seed");
            } else if (key == "beta_grid") {
                config.beta_grid = parse_grid(value);
            } else if (key == "beta_min") {
                config.beta_min = parse_number<double>(value, "beta_min");
            } else if (key == "beta_max") {
                config.beta_max = parse_number<double>(value, "beta_max");
            } else if (key == "beta_steps") {
                config.beta_steps = parse_number<int>(value, "beta_steps");
            } else if (key == "checks") {
                config.checks = parse_check_list(std::string(value));
            } else if (key == "output") {
                config.output = std::string(value);
            } else if (key == "workers") {
                config.workers = parse_number<unsigned>(value, "workers");
            } else {
                throw SpecParseError("unknown key '" + key + "'");
            }
        } catch (const SpecParseError& e) {
            throw SpecParseError("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return config;
}

VerifyConfig merge(VerifyConfig base, const VerifyConfig& o) {
    if (o.d) base.d = o.d;
    if (o.points) base.points = o.points;
    if (o.per_region) base.per_region = o.per_region;
    if (o.seed) base.seed = o.seed;
    if (o.beta_grid) base.beta_grid = o.beta_grid;
    if (o.beta_min) base.beta_min = o.beta_min;
    if (o.beta_max) base.beta_max = o.beta_max;
    if (o.beta_steps) base.beta_steps = o.beta_steps;
    if (o.checks) base.checks = o.checks;
    if (o.output) base.output = o.output;
    if (o.workers) base.workers = o.workers;
    return base;
}

SweepSpec build_sweep_spec(const VerifyConfig& config) {
    SweepSpec spec;
    spec.d = config.d.value_or(2);
    if (config.points) spec.points = *config.points;
    if (config.per_region && *config.per_region > 0) {
        const std::uint64_t seed = config.seed.value_or(kDefaultSampleSeed);
        for (SubRegion sub : {SubRegion::A, SubRegion::B, SubRegion::C}) {
            const auto pts = sample_points(sub, *config.per_region, seed);
            spec.points.insert(spec.points.end(), pts.begin(), pts.end());
        }
    }
    if (config.beta_grid) {
        spec.beta_grid = *config.beta_grid;
    } else if (config.beta_min || config.beta_max || config.beta_steps) {
        spec.beta_grid = log_grid(config.beta_min.value_or(1e-3), config.beta_max.value_or(50.0),
                                  config.beta_steps.value_or(40));
    } else {
        spec.beta_grid = default_beta_grid();
    }
    if (config.checks) {
        spec.checks = *config.checks;
    } else {
        spec.checks.assign(kBoundChecks.begin(), kBoundChecks.end());
    }
    return spec;
}

}  // namespace begdob::cli
