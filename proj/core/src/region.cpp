#include "begdob/region.hpp"

#include <array>
#include <atomic>
#include <cmath>
#include <string>

#include "begdob/bounds.hpp"
#include "begdob/errors.hpp"
#include "begdob/model.hpp"

namespace begdob {

namespace {

constexpr double kRootTolerance = 1e-12;
constexpr int kCachedDimensions = 64;

}  // namespace

double compute_t_d(int d) {
    if (d < 1) throw DomainError("dimension must be >= 1");
    const double target = 1.0 / (2.0 * d);
    // r(1) = 1 > 1/(2d); r decreases to 0.
    double lo = 1.0;
    double hi = 2.0;
    while (r_of_t(hi) >= target) {
        lo = hi;
        hi *= 2.0;
    }
    while (hi - lo > kRootTolerance) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (r_of_t(mid) >= target) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

double solve_t_d(int d) {
    if (d < 1) throw DomainError("dimension must be >= 1");
    if (d > kCachedDimensions) return compute_t_d(d);
    // Zero marks an empty slot (t_d > 1 always). Racing first callers compute
    // the same value, so the store is idempotent.
    static std::array<std::atomic<double>, kCachedDimensions + 1> cache{};
    auto& slot = cache[static_cast<std::size_t>(d)];
    double value = slot.load(std::memory_order_acquire);
    if (value == 0.0) {
        value = compute_t_d(d);
        slot.store(value, std::memory_order_release);
    }
    return value;
}

double curve_x(int d, double y) {
    const double t = solve_t_d(d);
    const double dd = d;
    if (y >= 1.0) return -((t + 2.0 * dd) / (2.0 * dd)) * (y + 1.0);
    if (y <= -1.0) return -(t / (2.0 * dd)) * (std::abs(y) + 1.0);
    return -(dd * (y + 1.0) + t) / dd;
}

BranchPair curve_branches_at(int d, double y_knot) {
    const double t = solve_t_d(d);
    const double dd = d;
    const double y = y_knot;
    const double middle = -(dd * (y + 1.0) + t) / dd;
    if (y_knot > 0.0) return {middle, -((t + 2.0 * dd) / (2.0 * dd)) * (y + 1.0)};
    return {-(t / (2.0 * dd)) * (std::abs(y) + 1.0), middle};
}

bool in_dobrushin_region(int d, double x, double y) {
    if (sub_region(x, y) == SubRegion::OutsideU) return false;
    return x < curve_x(d, y);
}

bool in_dobrushin_region_by_r(int d, double x, double y) {
    if (sub_region(x, y) == SubRegion::OutsideU) return false;
    const ExponentPair ep = exponents(ModelParams{.x = x, .y = y, .beta = 0.0, .d = d});
    return r_of_t(ep.a / ep.b) < 1.0 / (2.0 * d);
}

double blume_capel_xc(int d) {
    const double t = solve_t_d(d);
    return -(d + t) / d;
}

UniquenessCurve::UniquenessCurve(int d) : d_(d), t_d_(solve_t_d(d)) {}

}  // namespace begdob
