#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "begdob/model.hpp"

namespace begdob {

/// Probability vector over {-1, 0, +1}.
struct SpinDistribution {
    double p_minus = 0.0;
    double p_zero = 0.0;
    double p_plus = 0.0;

    double operator[](Spin s) const {
        return s.value() < 0 ? p_minus : (s.value() == 0 ? p_zero : p_plus);
    }
    double sum() const { return p_minus + p_zero + p_plus; }
    /// Distribution of -xi when xi has this distribution.
    SpinDistribution reversed() const { return {p_plus, p_zero, p_minus}; }

    friend bool operator==(const SpinDistribution&, const SpinDistribution&) = default;
};

/// The distinguished-neighbour values (sigma_1, sigma~_1) of two boundary
/// conditions that agree everywhere else.
struct BoundaryPair {
    Spin sigma1;
    Spin sigma1_tilde;

    /// Orders the pair so that |sigma~_1| >= |sigma_1|, with (-1, +1) on a tie.
    BoundaryPair normalized() const;
    bool equal_magnitude() const { return sigma1.square() == sigma1_tilde.square(); }

    friend bool operator==(const BoundaryPair&, const BoundaryPair&) = default;
};

/// The three unordered pairs in normalized form, in enumeration order.
inline constexpr BoundaryPair kBoundaryPairs[3] = {
    {Spin::minus(), Spin::plus()},
    {Spin::zero(), Spin::plus()},
    {Spin::zero(), Spin::minus()},
};

struct DobrushinReport {
    double max_tv = 0.0;
    /// Boundary condition sigma (with sigma_1 in place) attaining max_tv.
    NeighborConfig argmax_config;
    Spin argmax_tilde;
    double row_sum = 0.0;
    bool satisfied = true;
};

/// Largest d for which exact_max_tv enumerates (3^(2d-1) <= 10^7).
inline constexpr int kMaxEnumerationDimension = 7;
/// Largest box side accepted by finite_volume_marginal.
inline constexpr int kMaxBoxSide = 3;

/// Single-site conditional distribution of the origin given its 2d
/// neighbours. params.d must match nb.dimension().
SpinDistribution conditional_distribution(const ModelParams& params, const NeighborConfig& nb);

/// Half the L1 distance between two distributions.
double total_variation(const SpinDistribution& p, const SpinDistribution& q);

/// TV between the origin's conditionals under nb and under nb with its
/// distinguished spin replaced by sigma1_tilde.
double pair_tv(const ModelParams& params, const NeighborConfig& nb, Spin sigma1_tilde);

/// Number of assignments of neighbours 2..2d, i.e. 3^(2d-1).
std::uint64_t completion_count(int d);

/// The index-th assignment of neighbours 2..2d in balanced-ternary order
/// (neighbour 2 is the least significant digit, digit m -> spin m-1), with
/// sigma1 at the distinguished position.
NeighborConfig neighbor_completion(int d, std::uint64_t index, Spin sigma1);

/// Maximum pair TV over all boundary conditions differing at neighbour 1.
/// Throws CapacityError for d > kMaxEnumerationDimension.
DobrushinReport exact_max_tv(const ModelParams& params);

/// Number of outer-boundary sites of an L x L box in d = 2.
constexpr int box_boundary_size(int box_side) { return 4 * box_side; }

/// Boundary with every site set to s.
std::vector<Spin> uniform_boundary(int box_side, Spin s);

/// Exact marginal of the box site ((L-1)/2, (L-1)/2) under the finite-volume
/// Gibbs distribution of an L x L box in d = 2, by full enumeration of the
/// 3^(L*L) interior configurations. `boundary` lists the 4L outside
/// neighbours in the order: south row (y=-1, x=0..L-1), north row (y=L),
/// west column (x=-1, y=0..L-1), east column (x=L).
/// Throws CapacityError for L > kMaxBoxSide, DomainError for d != 2 or a
/// boundary of the wrong size.
SpinDistribution finite_volume_marginal(const ModelParams& params, int box_side,
                                        std::span<const Spin> boundary);

}  // namespace begdob
