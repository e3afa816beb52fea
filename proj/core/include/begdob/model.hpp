#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace begdob {

/// A spin-1 value in {-1, 0, +1}.
class Spin {
public:
    constexpr Spin() = default;

    /// Throws DomainError unless value is -1, 0 or +1.
    explicit Spin(int value);

    static constexpr Spin minus() { return Spin(std::int8_t{-1}, Unchecked{}); }
    static constexpr Spin zero() { return Spin(std::int8_t{0}, Unchecked{}); }
    static constexpr Spin plus() { return Spin(std::int8_t{1}, Unchecked{}); }

    constexpr int value() const { return value_; }
    constexpr int square() const { return value_ * value_; }
    constexpr Spin operator-() const { return Spin(static_cast<std::int8_t>(-value_), Unchecked{}); }

    friend constexpr bool operator==(Spin, Spin) = default;
    friend constexpr auto operator<=>(Spin, Spin) = default;

private:
    struct Unchecked {};
    constexpr Spin(std::int8_t v, Unchecked) : value_(v) {}

    std::int8_t value_ = 0;
};

inline constexpr Spin kSpinValues[3] = {Spin::minus(), Spin::zero(), Spin::plus()};

/// Couplings (x, y), inverse temperature beta and lattice dimension d.
struct ModelParams {
    double x = 0.0;
    double y = 0.0;
    double beta = 0.0;
    int d = 1;

    /// Throws DomainError if beta < 0 (or NaN) or d < 1.
    void validate() const;
};

/// The 2d nearest-neighbour spins of the origin. Position 0 holds the
/// distinguished neighbour (called "neighbour 1" in the usual notation);
/// positions 1..2d-1 hold neighbours 2..2d.
class NeighborConfig {
public:
    /// Throws DomainError unless spins.size() is even and >= 2.
    explicit NeighborConfig(std::vector<Spin> spins);

    /// Builds from integer values; convenient in tests and the CLI.
    static NeighborConfig from_values(std::span<const int> values);

    int dimension() const { return static_cast<int>(spins_.size() / 2); }
    std::span<const Spin> spins() const { return spins_; }
    Spin distinguished() const { return spins_.front(); }

    /// Number of nonzero spins among neighbours 2..2d.
    int k() const { return k_; }
    /// Sum of spins among neighbours 2..2d.
    int n() const { return n_; }
    /// Sum of squares over all 2d neighbours.
    int sigma_sq() const { return sigma_sq_; }
    /// Sum of all 2d spins.
    int total() const { return n_ + spins_.front().value(); }

    NeighborConfig with_distinguished(Spin s) const;
    NeighborConfig negated() const;

    friend bool operator==(const NeighborConfig& a, const NeighborConfig& b) {
        return a.spins_ == b.spins_;
    }

private:
    std::vector<Spin> spins_;
    int k_ = 0;
    int n_ = 0;
    int sigma_sq_ = 0;
};

enum class MajorRegion { Ferromagnetic, Disordered, Antiquadrupolar, Boundary };

/// Sub-regions of the disordered region on which the closed-form bounds hold.
/// OutsideU marks every point not in A u B u C.
enum class SubRegion { A, B, C, OutsideU };

struct RegionLabel {
    MajorRegion major = MajorRegion::Boundary;
    SubRegion sub = SubRegion::OutsideU;

    friend bool operator==(const RegionLabel&, const RegionLabel&) = default;
};

std::string_view to_string(MajorRegion r);
std::string_view to_string(SubRegion r);

inline constexpr double kBoundaryTolerance = 1e-12;

/// Energy of one nearest-neighbour bond: -(si sj + y si^2 sj^2 + x (si^2 + sj^2)).
constexpr double pair_energy(Spin si, Spin sj, double x, double y) {
    const double a = si.value();
    const double b = sj.value();
    return -(a * b + y * a * a * b * b + x * (a * a + b * b));
}

/// Exact (strict-inequality) membership in A, B or C. y >= 1 belongs to A and
/// y <= -1 to C; B is open.
SubRegion sub_region(double x, double y);

/// Classifies (x, y). Points within `tolerance` of a hyperplane that separates
/// two major regions are labelled Boundary.
RegionLabel classify_region(double x, double y, double tolerance = kBoundaryTolerance);

/// Unordered spin pair, stored with first <= second.
struct SpinPair {
    Spin first;
    Spin second;

    friend bool operator==(const SpinPair&, const SpinPair&) = default;
    friend auto operator<=>(const SpinPair&, const SpinPair&) = default;
};

/// Minimum-energy bond pairs, found by minimising pair_energy over all nine
/// ordered pairs. Throws DomainError when the minimum is degenerate across
/// classes (a boundary point).
std::vector<SpinPair> ground_pairs(double x, double y, double tolerance = kBoundaryTolerance);

}  // namespace begdob
