#include "begdob/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "begdob/errors.hpp"

namespace begdob {

Spin::Spin(int value) : value_(static_cast<std::int8_t>(value)) {
    if (value < -1 || value > 1) {
        throw DomainError("spin value must be -1, 0 or +1, got " + std::to_string(value));
    }
}

void ModelParams::validate() const {
    if (!(beta >= 0.0)) throw DomainError("inverse temperature must be >= 0");
    if (d < 1) throw DomainError("dimension must be >= 1");
}

NeighborConfig::NeighborConfig(std::vector<Spin> spins) : spins_(std::move(spins)) {
    if (spins_.size() < 2 || spins_.size() % 2 != 0) {
        throw DomainError("neighbour configuration needs 2d >= 2 spins, got " +
                          std::to_string(spins_.size()));
    }
    for (std::size_t i = 1; i < spins_.size(); ++i) {
        k_ += spins_[i].square();
        n_ += spins_[i].value();
    }
    sigma_sq_ = k_ + spins_.front().square();
}

NeighborConfig NeighborConfig::from_values(std::span<const int> values) {
    std::vector<Spin> spins;
    spins.reserve(values.size());
    for (int v : values) spins.emplace_back(v);
    return NeighborConfig(std::move(spins));
}

NeighborConfig NeighborConfig::with_distinguished(Spin s) const {
    NeighborConfig out = *this;
    out.sigma_sq_ += s.square() - out.spins_.front().square();
    out.spins_.front() = s;
    return out;
}

NeighborConfig NeighborConfig::negated() const {
    std::vector<Spin> flipped;
    flipped.reserve(spins_.size());
    for (Spin s : spins_) flipped.push_back(-s);
    return NeighborConfig(std::move(flipped));
}

std::string_view to_string(MajorRegion r) {
    switch (r) {
        case MajorRegion::Ferromagnetic: return "Ferromagnetic";
        case MajorRegion::Disordered: return "Disordered";
        case MajorRegion::Antiquadrupolar: return "Antiquadrupolar";
        case MajorRegion::Boundary: return "Boundary";
    }
    return "?";
}

std::string_view to_string(SubRegion r) {
    switch (r) {
        case SubRegion::A: return "A";
        case SubRegion::B: return "B";
        case SubRegion::C: return "C";
        case SubRegion::OutsideU: return "OutsideU";
    }
    return "?";
}

SubRegion sub_region(double x, double y) {
    if (!(x + y + 1.0 < 0.0) || !(x < 0.0)) return SubRegion::OutsideU;
    if (y >= 1.0) return SubRegion::A;
    if (y <= -1.0) return SubRegion::C;
    return SubRegion::B;
}

RegionLabel classify_region(double x, double y, double tolerance) {
    const double f1 = 1.0 + 2.0 * x + y;
    const double f2 = 1.0 + x + y;
    RegionLabel label;
    if (f1 > tolerance && f2 > tolerance) {
        label.major = MajorRegion::Ferromagnetic;
    } else if (f1 < -tolerance && x < -tolerance) {
        label.major = MajorRegion::Disordered;
        label.sub = sub_region(x, y);
    } else if (f2 < -tolerance && x > tolerance) {
        label.major = MajorRegion::Antiquadrupolar;
    }
    return label;
}

std::vector<SpinPair> ground_pairs(double x, double y, double tolerance) {
    double lowest = std::numeric_limits<double>::infinity();
    for (Spin a : kSpinValues)
        for (Spin b : kSpinValues) lowest = std::min(lowest, pair_energy(a, b, x, y));

    std::vector<SpinPair> pairs;
    for (Spin a : kSpinValues) {
        for (Spin b : kSpinValues) {
            if (b < a) continue;
            if (pair_energy(a, b, x, y) <= lowest + tolerance) pairs.push_back({a, b});
        }
    }

    const Spin m = Spin::minus(), z = Spin::zero(), p = Spin::plus();
    const std::vector<SpinPair> ferro = {{m, m}, {p, p}};
    const std::vector<SpinPair> disordered = {{z, z}};
    const std::vector<SpinPair> antiquad = {{m, z}, {z, p}};
    if (pairs != ferro && pairs != disordered && pairs != antiquad) {
        throw DomainError("degenerate ground state at (x, y) = (" + std::to_string(x) + ", " +
                          std::to_string(y) + ")");
    }
    return pairs;
}

}  // namespace begdob
