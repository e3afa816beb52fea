#include <cmath>

#include <json.hpp>

#include "begdob/verify.hpp"

namespace begdob {

namespace {

using nlohmann::json;

json number_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json point_json(const Point& p) { return json::array({p.x, p.y}); }

json witness_json(const Witness& w) {
    json out = {{"x", w.point.x}, {"y", w.point.y}, {"beta", w.beta},
                {"slack", number_or_null(w.slack)}};
    if (w.config) {
        json spins = json::array();
        for (Spin s : w.config->spins()) spins.push_back(s.value());
        out["neighbors"] = std::move(spins);
    }
    if (w.sigma1_tilde) out["sigma1_tilde"] = w.sigma1_tilde->value();
    return out;
}

}  // namespace

std::string to_json(const SweepReport& report, int indent) {
    json checks = json::array();
    for (const CheckResult& r : report.checks) {
        json witnesses = json::array();
        for (const Witness& w : r.witnesses) witnesses.push_back(witness_json(w));
        json unclassified = json::array();
        for (const Point& p : r.unclassified) unclassified.push_back(point_json(p));
        checks.push_back({
            {"name", std::string(to_string(r.check))},
            {"pass", r.pass},
            {"worst_slack", r.worst ? number_or_null(r.worst_slack) : json(nullptr)},
            {"evaluated", r.evaluated},
            {"failed", r.failed},
            {"worst", r.worst ? witness_json(*r.worst) : json(nullptr)},
            {"witnesses", std::move(witnesses)},
            {"unclassified", std::move(unclassified)},
        });
    }

    json doc = {
        {"meta", {{"d", report.d}, {"grid", report.beta_grid}, {"git_rev", std::string(build_git_rev())}}},
        {"checks", std::move(checks)},
        {"all_passed", report.all_passed()},
    };
    if (!report.failure_scans.empty()) {
        json scans = json::array();
        for (const FailureScan& f : report.failure_scans) {
            scans.push_back({{"x", f.point.x},
                             {"y", f.point.y},
                             {"beta", f.beta ? json(*f.beta) : json(nullptr)}});
        }
        doc["failure_betas"] = std::move(scans);
    }
    return doc.dump(indent);
}

}  // namespace begdob
