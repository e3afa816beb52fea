#include "begdob/specification.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "begdob/errors.hpp"

namespace begdob {

namespace {

// Normalizes exp(log_w) in a way that cannot overflow.
SpinDistribution normalize_log_weights(double lm, double l0, double lp) {
    const double top = std::max({lm, l0, lp});
    const double wm = std::exp(lm - top);
    const double w0 = std::exp(l0 - top);
    const double wp = std::exp(lp - top);
    const double z = wm + w0 + wp;
    return {wm / z, w0 / z, wp / z};
}

void check_dimension(const ModelParams& params, const NeighborConfig& nb) {
    if (nb.dimension() != params.d) {
        throw DomainError("neighbour configuration has " + std::to_string(2 * nb.dimension()) +
                          " spins, expected 2d = " + std::to_string(2 * params.d));
    }
}

}  // namespace

BoundaryPair BoundaryPair::normalized() const {
    if (sigma1_tilde.square() < sigma1.square()) return {sigma1_tilde, sigma1};
    if (equal_magnitude() && sigma1.square() == 1) return {Spin::minus(), Spin::plus()};
    return *this;
}

SpinDistribution conditional_distribution(const ModelParams& params, const NeighborConfig& nb) {
    params.validate();
    check_dimension(params, nb);
    // log h(xi) = beta xi^2 (2dx + y sigma^2) + beta xi S
    const double quad = params.beta * (2.0 * params.d * params.x + params.y * nb.sigma_sq());
    const double field = params.beta * nb.total();
    if (params.beta == 0.0) return {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};
    return normalize_log_weights(quad - field, 0.0, quad + field);
}

double total_variation(const SpinDistribution& p, const SpinDistribution& q) {
    return 0.5 * (std::abs(p.p_minus - q.p_minus) + std::abs(p.p_zero - q.p_zero) +
                  std::abs(p.p_plus - q.p_plus));
}

double pair_tv(const ModelParams& params, const NeighborConfig& nb, Spin sigma1_tilde) {
    return total_variation(conditional_distribution(params, nb),
                           conditional_distribution(params, nb.with_distinguished(sigma1_tilde)));
}

std::uint64_t completion_count(int d) {
    std::uint64_t count = 1;
    for (int i = 0; i < 2 * d - 1; ++i) count *= 3;
    return count;
}

NeighborConfig neighbor_completion(int d, std::uint64_t index, Spin sigma1) {
    std::vector<Spin> spins;
    spins.reserve(static_cast<std::size_t>(2 * d));
    spins.push_back(sigma1);
    for (int i = 1; i < 2 * d; ++i) {
        spins.push_back(kSpinValues[index % 3]);
        index /= 3;
    }
    return NeighborConfig(std::move(spins));
}

DobrushinReport exact_max_tv(const ModelParams& params) {
    params.validate();
    if (params.d > kMaxEnumerationDimension) {
        throw CapacityError("exact enumeration supports d <= " +
                            std::to_string(kMaxEnumerationDimension) + ", got d = " +
                            std::to_string(params.d));
    }

    DobrushinReport report{
        .max_tv = -1.0,
        .argmax_config = neighbor_completion(params.d, 0, kBoundaryPairs[0].sigma1),
        .argmax_tilde = kBoundaryPairs[0].sigma1_tilde,
    };
    const std::uint64_t total = completion_count(params.d);
    for (std::uint64_t index = 0; index < total; ++index) {
        NeighborConfig nb = neighbor_completion(params.d, index, Spin::zero());
        for (const BoundaryPair& pair : kBoundaryPairs) {
            NeighborConfig sigma = nb.with_distinguished(pair.sigma1);
            const double tv = pair_tv(params, sigma, pair.sigma1_tilde);
            if (tv > report.max_tv) {
                report.max_tv = tv;
                report.argmax_config = std::move(sigma);
                report.argmax_tilde = pair.sigma1_tilde;
            }
        }
    }
    report.row_sum = 2.0 * params.d * report.max_tv;
    report.satisfied = report.max_tv < 1.0 / (2.0 * params.d);
    return report;
}

std::vector<Spin> uniform_boundary(int box_side, Spin s) {
    return std::vector<Spin>(static_cast<std::size_t>(box_boundary_size(box_side)), s);
}

SpinDistribution finite_volume_marginal(const ModelParams& params, int box_side,
                                        std::span<const Spin> boundary) {
    params.validate();
    if (params.d != 2) throw DomainError("finite-volume marginal is implemented for d = 2 only");
    if (box_side < 1) throw DomainError("box side must be >= 1");
    if (box_side > kMaxBoxSide) {
        throw CapacityError("finite-volume enumeration supports box side <= " +
                            std::to_string(kMaxBoxSide));
    }
    const int side = box_side;
    if (boundary.size() != static_cast<std::size_t>(box_boundary_size(side))) {
        throw DomainError("boundary must have 4L = " + std::to_string(box_boundary_size(side)) +
                          " spins");
    }

    const auto south = [&](int col) { return boundary[static_cast<std::size_t>(col)]; };
    const auto north = [&](int col) { return boundary[static_cast<std::size_t>(side + col)]; };
    const auto west = [&](int row) { return boundary[static_cast<std::size_t>(2 * side + row)]; };
    const auto east = [&](int row) { return boundary[static_cast<std::size_t>(3 * side + row)]; };

    const int sites = side * side;
    const int center = ((side - 1) / 2) * side + (side - 1) / 2;
    std::uint64_t configs = 1;
    for (int i = 0; i < sites; ++i) configs *= 3;

    std::vector<Spin> cfg(static_cast<std::size_t>(sites));
    std::vector<double> log_weight(configs);
    std::vector<int> center_value(configs);
    const double x = params.x, y = params.y;

    for (std::uint64_t c = 0; c < configs; ++c) {
        std::uint64_t rest = c;
        for (int i = 0; i < sites; ++i) {
            cfg[static_cast<std::size_t>(i)] = kSpinValues[rest % 3];
            rest /= 3;
        }
        const auto at = [&](int row, int col) {
            return cfg[static_cast<std::size_t>(row * side + col)];
        };
        // Each bond with at least one endpoint in the box, counted once.
        double energy = 0.0;
        for (int row = 0; row < side; ++row) {
            for (int col = 0; col < side; ++col) {
                const Spin s = at(row, col);
                energy += pair_energy(s, col + 1 < side ? at(row, col + 1) : east(row), x, y);
                energy += pair_energy(s, row + 1 < side ? at(row + 1, col) : north(col), x, y);
                if (col == 0) energy += pair_energy(s, west(row), x, y);
                if (row == 0) energy += pair_energy(s, south(col), x, y);
            }
        }
        log_weight[c] = -params.beta * energy;
        center_value[c] = cfg[static_cast<std::size_t>(center)].value();
    }

    const double top = *std::max_element(log_weight.begin(), log_weight.end());
    std::array<double, 3> mass{};
    for (std::uint64_t c = 0; c < configs; ++c) {
        mass[static_cast<std::size_t>(center_value[c] + 1)] += std::exp(log_weight[c] - top);
    }
    const double z = mass[0] + mass[1] + mass[2];
    return {mass[0] / z, mass[1] / z, mass[2] / z};
}

}  // namespace begdob
