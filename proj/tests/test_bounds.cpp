#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "begdob/bounds.hpp"
#include "begdob/errors.hpp"
#include "begdob/verify.hpp"
#include "oracles.hpp"

using namespace begdob;

namespace {

NeighborConfig config(std::initializer_list<int> values) {
    const std::vector<int> v(values);
    return NeighborConfig::from_values(v);
}

// A few fixed points per sub-region plus sampled ones.
std::vector<Point> region_points(SubRegion sub, int sampled) {
    std::vector<Point> pts;
    switch (sub) {
        case SubRegion::A: pts = {{-5, 2}, {-2.001, 1}, {-10, 4}}; break;
        case SubRegion::B: pts = {{-3, 0}, {-1.5, 0.4}, {-0.2, -0.9}}; break;
        case SubRegion::C: pts = {{-1, -3}, {-0.05, -1}, {-4, -1.2}}; break;
        case SubRegion::OutsideU: break;
    }
    const auto more = sample_points(sub, sampled, 77);
    pts.insert(pts.end(), more.begin(), more.end());
    return pts;
}

constexpr SubRegion kRegions[] = {SubRegion::A, SubRegion::B, SubRegion::C};

}  // namespace

TEST_CASE("exponents per sub-region") {
    auto ep = exponents({.x = -5, .y = 2, .beta = 1, .d = 2});
    CHECK(ep.a == 8.0);
    CHECK(ep.b == 3.0);
    ep = exponents({.x = -3, .y = 0, .beta = 1, .d = 2});
    CHECK(ep.a == 8.0);
    CHECK(ep.b == 2.0);
    ep = exponents({.x = -1, .y = -3, .beta = 1, .d = 2});
    CHECK(ep.a == 4.0);
    CHECK(ep.b == 4.0);
    CHECK_THROWS_AS(exponents({.x = 1, .y = -3, .beta = 1, .d = 2}), DomainError);
    CHECK_THROWS_AS(exponents({.x = -0.5, .y = -0.4, .beta = 1, .d = 2}), DomainError);
}

TEST_CASE("exponents are positive on A u B u C") {
    for (SubRegion sub : kRegions) {
        for (const Point& p : region_points(sub, 50)) {
            for (int d = 1; d <= 4; ++d) {
                const auto ep = exponents({.x = p.x, .y = p.y, .beta = 1, .d = d});
                CHECK(ep.a > 0.0);
                CHECK(ep.b > 0.0);
            }
        }
    }
}

TEST_CASE("theorem1 bound vanishes at both temperature extremes") {
    CHECK(theorem1_bound({.x = -5, .y = 2, .beta = 0, .d = 2}) == 0.0);
    CHECK(theorem1_bound({.x = -5, .y = 2, .beta = 500, .d = 2}) == 0.0);
    CHECK(theorem1_bound({.x = -5, .y = 2, .beta = 1, .d = 2}) ==
          doctest::Approx(4 * std::exp(-8.0) * (1 - std::exp(-3.0))).epsilon(1e-14));
    CHECK_THROWS_AS(theorem1_bound({.x = 1, .y = 1, .beta = 1, .d = 2}), DomainError);
}

TEST_CASE("theorem1 bound at the critical beta equals r(a/b)") {
    const ModelParams base{.x = -5, .y = 2, .beta = 0, .d = 2};
    const double bc = beta_critical(exponents(base));
    ModelParams at = base;
    at.beta = bc;
    CHECK(std::abs(theorem1_bound(at) - r_of_t(8.0 / 3.0)) <= 1e-12);
}

TEST_CASE("beta_critical") {
    CHECK(beta_critical({1, 1}) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
    const ExponentPair ep{8, 3};
    const double bc = beta_critical(ep);
    CHECK(std::exp(-bc * ep.b) == doctest::Approx(ep.a / (ep.a + ep.b)).epsilon(1e-14));
    CHECK(std::abs(oracle::envelope(8, 3, bc) - r_of_t(8.0 / 3.0)) <= 1e-12);
    CHECK_THROWS_AS(beta_critical({0, 1}), DomainError);
    CHECK_THROWS_AS(beta_critical({1, -1}), DomainError);
}

TEST_CASE("the envelope never exceeds its value at beta_critical") {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> u(0.1, 20);
    for (int i = 0; i < 50; ++i) {
        const double a = u(rng), b = u(rng);
        const double bc = beta_critical({a, b});
        const double peak = tv_envelope(a, b, bc);
        const double scan = oracle::grid_max_envelope(a, b, 5 * bc, 10000);
        CHECK(scan <= peak + 1e-14);
        CHECK(tv_envelope(a, b, 0.5 * bc) < peak);
        CHECK(tv_envelope(a, b, 2 * bc) < peak);
    }
}

TEST_CASE("r(t) reference values") {
    CHECK(std::abs(r_of_t(1.0) - 1.0) <= 1e-14);
    CHECK(std::abs(r_of_t(5.39315) - 0.25) <= 1e-4);
    CHECK(std::abs(r_of_t(8.33383) - 1.0 / 6.0) <= 1e-4);
    CHECK_THROWS_AS(r_of_t(0.0), DomainError);
    CHECK_THROWS_AS(r_of_t(-1.0), DomainError);
}

TEST_CASE("r(t) is strictly decreasing") {
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> u(0.01, 100);
    for (int i = 0; i < 2000; ++i) {
        double t1 = u(rng), t2 = u(rng);
        if (t1 == t2) continue;
        if (t1 > t2) std::swap(t1, t2);
        CHECK(r_of_t(t1) > r_of_t(t2));
    }
}

TEST_CASE("theta vanishes at beta = 0 and rejects s = 0") {
    const auto nb = config({-1, 0, 1, 0});
    CHECK(theta(Spin::plus(), nb, Spin::plus(), {.x = -5, .y = 2, .beta = 0, .d = 2}) == 0.0);
    CHECK(theta(Spin::minus(), nb, Spin::zero(), {.x = -5, .y = 2, .beta = 0, .d = 2}) == 0.0);
    CHECK_THROWS_AS(theta(Spin::zero(), nb, Spin::plus(), {.x = -5, .y = 2, .beta = 1, .d = 2}),
                    DomainError);
    CHECK_THROWS_AS(theta(Spin::plus(), nb, Spin::minus(), {.x = -5, .y = 2, .beta = 1, .d = 2}),
                    DomainError);
}

TEST_CASE("theta hand evaluation") {
    // sigma = (-1, 0, 1, 0), sigma~_1 = +1: sigma^2 = 2, total spin 0,
    // y(sigma~_1^2 - sigma_1^2) = 0, so theta_+ = e^{beta(2dx + 2y)} (e^{2 beta} - 1).
    const ModelParams params{.x = -5, .y = 2, .beta = 0.5, .d = 2};
    const auto nb = config({-1, 0, 1, 0});
    CHECK(theta(Spin::plus(), nb, Spin::plus(), params) ==
          doctest::Approx(std::exp(-8.0) * (std::exp(1.0) - 1.0)).epsilon(1e-14));
    CHECK(theta(Spin::minus(), nb, Spin::plus(), params) ==
          doctest::Approx(std::exp(-8.0) * (std::exp(-1.0) - 1.0)).epsilon(1e-14));
}

TEST_CASE("theta with sigma_1 = -1, sigma~_1 = +1 has inner factor e^{2 beta s} - 1") {
    std::mt19937_64 rng(10);
    std::uniform_real_distribution<double> coupling(-4, 4), beta(0, 2);
    for (int i = 0; i < 200; ++i) {
        const ModelParams params{.x = coupling(rng), .y = coupling(rng), .beta = beta(rng), .d = 2};
        auto values = oracle::random_neighbors(rng, 2);
        values[0] = -1;
        const auto nb = NeighborConfig::from_values(values);
        for (int s : {-1, 1}) {
            const double expected = std::exp(params.beta * (4 * params.x + params.y * nb.sigma_sq())) *
                                    (std::exp(2 * params.beta * s) - 1) *
                                    std::exp(params.beta * s * nb.total());
            CHECK(theta(Spin(s), nb, Spin::plus(), params) == doctest::Approx(expected).epsilon(1e-12));
        }
    }
}

TEST_CASE("psi examples") {
    const auto nb = config({0, 1, 0, -1});
    CHECK(psi(nb, Spin::plus(), {.x = -2, .y = 1, .beta = 0, .d = 2}) == 0.0);

    const ModelParams params{.x = -2, .y = 0.7, .beta = 0.8, .d = 2};
    CHECK(std::abs(psi(nb, Spin::plus(), params)) ==
          doctest::Approx(std::abs(psi(nb, Spin::minus(), params))).epsilon(1e-15));
    CHECK(psi(nb, Spin::plus(), params) > 0.0);
    CHECK(psi(nb, Spin::minus(), params) < 0.0);

    // sigma_1 = -1, sigma~_1 = +1 with k nonzero spins among neighbours 2..2d.
    for (int k = 0; k <= 3; ++k) {
        std::vector<int> values = {-1, 0, 0, 0};
        for (int i = 1; i <= k; ++i) values[static_cast<std::size_t>(i)] = (i % 2) ? 1 : -1;
        const auto cfg = NeighborConfig::from_values(values);
        const double expected =
            2 * std::exp(params.beta * (8 * params.x + 2 * (k + 1) * params.y)) * std::sinh(2 * params.beta);
        CHECK(psi(cfg, Spin::plus(), params) == doctest::Approx(expected).epsilon(1e-13));
    }
}

TEST_CASE("theta/psi reconstruct the per-state differences") {
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> coupling(-3, 3), beta(0, 1.5);
    std::uniform_int_distribution<int> dim(1, 3);
    for (int i = 0; i < 2000; ++i) {
        const int d = dim(rng);
        const ModelParams params{.x = coupling(rng), .y = coupling(rng), .beta = beta(rng), .d = d};
        const auto values = oracle::random_neighbors(rng, d);
        const auto nb = NeighborConfig::from_values(values);
        for (Spin tilde : kSpinValues) {
            if (tilde == nb.distinguished()) continue;
            const BoundTerms t = bound_terms(nb, tilde, params);
            const double r0 = oracle::reconstruction_row(params, 0, values, tilde.value());
            const double rp = oracle::reconstruction_row(params, 1, values, tilde.value());
            const double rm = oracle::reconstruction_row(params, -1, values, tilde.value());
            const double scale = 1.0 + std::abs(r0) + std::abs(rp) + std::abs(rm);
            CHECK(std::abs(r0 - (t.theta_plus + t.theta_minus)) <= 1e-12 * scale);
            CHECK(std::abs(rp - (-t.theta_plus - t.psi)) <= 1e-12 * scale);
            CHECK(std::abs(rm - (-t.theta_minus + t.psi)) <= 1e-12 * scale);
        }
    }
}

TEST_CASE("lemma1 bound") {
    CHECK(lemma1_bound(config({0, 1, 1, -1}), Spin::plus(), {.x = -3, .y = 0, .beta = 0, .d = 2}) == 0.0);

    // sigma_1 = 0, sigma~_1 = 1, sigma^2 = 3, total spin 1, 2dx + y sigma^2 = -12:
    // |theta_+| = e^{-12}(e - 1)e, |theta_-| = e^{-12}(1 - e^{-1})e^{-1}, |psi| = 2e^{-24} sinh 1.
    const double e = std::exp(1.0);
    const double expected = std::exp(-12.0) * (e - 1) * e + std::exp(-12.0) * (1 - 1 / e) / e +
                            2 * std::exp(-24.0) * std::sinh(1.0);
    const double value =
        lemma1_bound(config({0, 1, 1, -1}), Spin::plus(), {.x = -3, .y = 0, .beta = 1, .d = 2});
    CHECK(value == doctest::Approx(expected).epsilon(1e-13));
    CHECK(value == doctest::Approx(3.0127118390969145e-05).epsilon(1e-13));
}

TEST_CASE("lemma1 bound normalizes the pair") {
    const ModelParams params{.x = -2, .y = 0.5, .beta = 0.7, .d = 2};
    const auto nb = config({1, 0, -1, 1});
    CHECK(lemma1_bound(nb, Spin::minus(), params) ==
          lemma1_bound(nb.with_distinguished(Spin::minus()), Spin::plus(), params));
    CHECK(lemma1_bound(nb, Spin::zero(), params) ==
          lemma1_bound(nb.with_distinguished(Spin::zero()), Spin::plus(), params));
}

TEST_CASE("lemma1 bound dominates the exact pair TV") {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> coupling(-5, 3), beta(0, 4);
    std::uniform_int_distribution<int> dim(1, 3);
    for (int i = 0; i < 10000; ++i) {
        const int d = dim(rng);
        const ModelParams params{.x = coupling(rng), .y = coupling(rng), .beta = beta(rng), .d = d};
        const auto values = oracle::random_neighbors(rng, d);
        const auto nb = NeighborConfig::from_values(values);
        for (Spin tilde : kSpinValues) {
            if (tilde == nb.distinguished()) continue;
            auto other = values;
            other[0] = tilde.value();
            const double exact = oracle::tv(oracle::full_hamiltonian_conditional(params, values),
                                            oracle::full_hamiltonian_conditional(params, other));
            CHECK(lemma1_bound(nb, tilde, params) >= exact - 1e-12);
        }
    }
}

TEST_CASE("lemma2 bound") {
    CHECK(lemma2_bound({.x = -5, .y = 2, .beta = 0, .d = 2}) == 0.0);
    CHECK(lemma2_bound({.x = -1, .y = -3, .beta = 1, .d = 2}) ==
          doctest::Approx(4 * std::exp(-6.0) * (1 - std::exp(-2.0))).epsilon(1e-14));
    CHECK_THROWS_AS(lemma2_bound({.x = 1, .y = -3, .beta = 1, .d = 2}), DomainError);

    for (double beta : {0.1, 1.0, 5.0}) {
        const ModelParams params{.x = -5, .y = 2, .beta = beta, .d = 2};
        const double bound = lemma2_bound(params);
        for (std::uint64_t idx = 0; idx < completion_count(2); ++idx) {
            const auto nb = neighbor_completion(2, idx, Spin::minus());
            CHECK(lemma1_bound(nb, Spin::plus(), params) <= bound + 1e-12);
        }
        // At (-5, 2) the equal-magnitude bound sits below the uniform one.
        CHECK(lemma2_bound(params) <= theorem1_bound(params));
    }
}

TEST_CASE("lemma3 bound") {
    CHECK(lemma3_bound({.x = -1, .y = -3, .beta = 0, .d = 2}) == 0.0);
    CHECK(lemma3_bound({.x = -1, .y = -3, .beta = 1, .d = 2}) ==
          doctest::Approx(3 * std::exp(-4.0) * (1 - std::exp(-4.0))).epsilon(1e-14));
    CHECK_THROWS_AS(lemma3_bound({.x = 0.5, .y = 0, .beta = 1, .d = 2}), DomainError);

    for (double beta : {0.1, 1.0, 5.0}) {
        const ModelParams params{.x = -1, .y = -3, .beta = beta, .d = 2};
        const double bound = lemma3_bound(params);
        for (std::uint64_t idx = 0; idx < completion_count(2); ++idx) {
            const auto nb = neighbor_completion(2, idx, Spin::zero());
            CHECK(lemma1_bound(nb, Spin::plus(), params) <= bound + 1e-12);
            CHECK(lemma1_bound(nb, Spin::minus(), params) <= bound + 1e-12);
        }
    }
}

TEST_CASE("case_bound dispatches on the pair class") {
    const ModelParams params{.x = -3, .y = 0.5, .beta = 0.4, .d = 2};
    CHECK(case_bound(params, {Spin::minus(), Spin::plus()}) == lemma2_bound(params));
    CHECK(case_bound(params, {Spin::zero(), Spin::minus()}) == lemma3_bound(params));
}

TEST_CASE("theta_sum_bound") {
    CHECK(theta_sum_bound({.x = -3, .y = 0.5, .beta = 0, .d = 2}, 1) == 0.0);
    CHECK_THROWS_AS(theta_sum_bound({.x = -3, .y = 0.5, .beta = 1, .d = 2}, 4), DomainError);
    CHECK_THROWS_AS(theta_sum_bound({.x = -3, .y = 0.5, .beta = 1, .d = 2}, -1), DomainError);

    // y = 1 continuity: the |y| < 1 branch evaluated at y -> 1 matches the y >= 1 branch.
    for (int k = 0; k <= 3; ++k) {
        const ModelParams at{.x = -4, .y = 1.0, .beta = 0.9, .d = 2};
        const ModelParams below{.x = -4, .y = std::nextafter(1.0, 0.0), .beta = 0.9, .d = 2};
        CHECK(theta_sum_bound(at, k) == doctest::Approx(theta_sum_bound(below, k)).epsilon(1e-14));
        const double expected = 2 * std::exp(0.9 * (-16 + 2 * (k + 1))) * (1 - std::exp(-1.8));
        CHECK(theta_sum_bound(at, k) == doctest::Approx(expected).epsilon(1e-14));
    }

    for (SubRegion sub : kRegions) {
        for (const Point& p : region_points(sub, 5)) {
            for (double beta : {0.05, 0.5, 2.0, 8.0}) {
                const ModelParams params{.x = p.x, .y = p.y, .beta = beta, .d = 2};
                for (std::uint64_t idx = 0; idx < completion_count(2); ++idx) {
                    const auto nb = neighbor_completion(2, idx, Spin::zero());
                    const double sum = std::abs(theta(Spin::plus(), nb, Spin::plus(), params)) +
                                       std::abs(theta(Spin::minus(), nb, Spin::plus(), params));
                    CHECK(sum <= theta_sum_bound(params, nb.k()) * (1 + 1e-12) + 1e-300);
                }
            }
        }
    }
}

TEST_CASE("psi_bound") {
    CHECK(psi_bound({.x = -3, .y = 0.5, .beta = 0, .d = 2}, 2) == 0.0);
    CHECK_THROWS_AS(psi_bound({.x = -3, .y = 0.5, .beta = 1, .d = 1}, 2), DomainError);

    for (double beta = 0.01; beta < 20; beta *= 1.37) {
        CHECK(std::abs(2 * std::sinh(beta) - std::exp(beta) * (1 - std::exp(-2 * beta))) <=
              1e-14 * std::max(1.0, std::exp(beta)));
    }

    for (SubRegion sub : kRegions) {
        for (const Point& p : region_points(sub, 5)) {
            for (double beta : {0.05, 0.5, 2.0, 8.0}) {
                const ModelParams params{.x = p.x, .y = p.y, .beta = beta, .d = 2};
                for (std::uint64_t idx = 0; idx < completion_count(2); ++idx) {
                    const auto nb = neighbor_completion(2, idx, Spin::zero());
                    for (Spin tilde : {Spin::plus(), Spin::minus()}) {
                        CHECK(std::abs(psi(nb, tilde, params)) <=
                              psi_bound(params, nb.k()) * (1 + 1e-12) + 1e-300);
                    }
                }
            }
        }
    }
}

TEST_CASE("domination chain on a small grid") {
    const auto grid = log_grid(1e-3, 50, 12);
    for (int d = 1; d <= 3; ++d) {
        for (SubRegion sub : kRegions) {
            for (const Point& p : region_points(sub, 3)) {
                for (double beta : grid) {
                    const ModelParams params{.x = p.x, .y = p.y, .beta = beta, .d = d};
                    const double l2 = lemma2_bound(params), l3 = lemma3_bound(params);
                    const double t1 = theorem1_bound(params);
                    const ExponentPair ep = exponents(params);
                    CHECK(std::max(l2, l3) <= t1 + 1e-12);
                    CHECK(t1 <= r_of_t(ep.a / ep.b) + 1e-12);
                    for (std::uint64_t idx = 0; idx < completion_count(d); ++idx) {
                        const auto base = neighbor_completion(d, idx, Spin::zero());
                        for (const auto& pair : kBoundaryPairs) {
                            const auto nb = base.with_distinguished(pair.sigma1);
                            const double l1 = lemma1_bound(nb, pair.sigma1_tilde, params);
                            CHECK(pair_tv(params, nb, pair.sigma1_tilde) <= l1 + 1e-12);
                            CHECK(l1 <= case_bound(params, pair) + 1e-12);
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("theorem1 bound is tight against r(a/b) only at beta_critical") {
    for (SubRegion sub : kRegions) {
        for (const Point& p : region_points(sub, 5)) {
            ModelParams params{.x = p.x, .y = p.y, .beta = 0, .d = 2};
            const ExponentPair ep = exponents(params);
            const double r = r_of_t(ep.a / ep.b);
            for (double beta : log_grid(1e-3, 50, 40)) {
                params.beta = beta;
                CHECK(theorem1_bound(params) <= r + 1e-12);
            }
            params.beta = beta_critical(ep);
            CHECK(std::abs(theorem1_bound(params) - r) <= 1e-10);
        }
    }
}

TEST_CASE("bounds stay finite at very low temperature") {
    const ModelParams params{.x = -40, .y = 3, .beta = 1000, .d = 3};
    CHECK(theorem1_bound(params) == 0.0);
    CHECK(lemma2_bound(params) == 0.0);
    const auto nb = config({0, 1, 1, 1, 1, 1});
    CHECK(std::isfinite(lemma1_bound(nb, Spin::plus(), params)));
}
