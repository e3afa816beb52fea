#include "begdob/bounds.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "begdob/errors.hpp"

namespace begdob {

namespace {

// log|e^u - 1|, finite for every finite u != 0.
double log_abs_expm1(double u) {
    if (u > 0.0) return u + std::log(-std::expm1(-u));
    return std::log(-std::expm1(u));
}

// log(2 sinh v) for v > 0.
double log_two_sinh(double v) { return v + std::log(-std::expm1(-2.0 * v)); }

// prefactor * e^{exponent} * (1 - e^{-gap}), gap >= 0, kept in log space so a
// huge exponent paired with a vanishing gap does not produce inf * 0.
double scaled_gap(double prefactor, double exponent, double gap) {
    if (gap <= 0.0) return 0.0;
    return prefactor * std::exp(exponent + std::log(-std::expm1(-gap)));
}

void check_pair(const NeighborConfig& nb, Spin sigma1_tilde, const ModelParams& params) {
    params.validate();
    if (nb.dimension() != params.d) {
        throw DomainError("neighbour configuration has " + std::to_string(2 * nb.dimension()) +
                          " spins, expected 2d = " + std::to_string(2 * params.d));
    }
    if (sigma1_tilde == nb.distinguished()) {
        throw DomainError("boundary conditions must differ at the distinguished neighbour");
    }
}

SubRegion require_u(const ModelParams& params) {
    params.validate();
    const SubRegion sub = sub_region(params.x, params.y);
    if (sub == SubRegion::OutsideU) {
        throw DomainError("(x, y) = (" + std::to_string(params.x) + ", " +
                          std::to_string(params.y) + ") is outside A u B u C");
    }
    return sub;
}

void require_k(const ModelParams& params, int k) {
    params.validate();
    if (k < 0 || k > 2 * params.d - 1) {
        throw DomainError("k must lie in [0, 2d-1], got " + std::to_string(k));
    }
}

// Gap of the y-regime factor shared by theta_sum_bound and psi_bound:
// y+1 for y >= 1, 2 for |y| < 1, 1-y for y <= -1.
double regime_gap(double y) {
    if (y >= 1.0) return y + 1.0;
    if (y <= -1.0) return 1.0 - y;
    return 2.0;
}

}  // namespace

ExponentPair exponents(const ModelParams& params) {
    const SubRegion sub = require_u(params);
    const double two_d = 2.0 * params.d;
    const double x = params.x, y = params.y;
    switch (sub) {
        case SubRegion::A: return {two_d * std::abs(x + y + 1.0), y + 1.0};
        case SubRegion::B: return {two_d * std::abs(x + y + 1.0), 2.0};
        case SubRegion::C: return {two_d * std::abs(x), std::abs(y) + 1.0};
        case SubRegion::OutsideU: break;
    }
    throw DomainError("unreachable");
}

double tv_envelope(double a, double b, double beta) {
    return scaled_gap(4.0, -a * beta, b * beta);
}

double theorem1_bound(const ModelParams& params) {
    const ExponentPair ep = exponents(params);
    return tv_envelope(ep.a, ep.b, params.beta);
}

double beta_critical(const ExponentPair& ep) {
    if (!(ep.a > 0.0) || !(ep.b > 0.0)) {
        throw DomainError("beta_critical needs a > 0 and b > 0");
    }
    return std::log1p(ep.b / ep.a) / ep.b;
}

double r_of_t(double t) {
    if (!(t > 0.0)) throw DomainError("r(t) is defined for t > 0");
    return 4.0 / (1.0 + t) * std::exp(-t * std::log1p(1.0 / t));
}

double theta(Spin s, const NeighborConfig& nb, Spin sigma1_tilde, const ModelParams& params) {
    if (s == Spin::zero()) throw DomainError("theta_s needs s in {-1, +1}");
    check_pair(nb, sigma1_tilde, params);
    const double beta = params.beta;
    const int sv = s.value();
    const double quad = 2.0 * params.d * params.x + params.y * nb.sigma_sq();
    const double inner = beta * (params.y * (sigma1_tilde.square() - nb.distinguished().square()) +
                                 sv * (sigma1_tilde.value() - nb.distinguished().value()));
    if (inner == 0.0) return 0.0;
    const double magnitude = std::exp(beta * (quad + sv * nb.total()) + log_abs_expm1(inner));
    return inner > 0.0 ? magnitude : -magnitude;
}

double psi(const NeighborConfig& nb, Spin sigma1_tilde, const ModelParams& params) {
    check_pair(nb, sigma1_tilde, params);
    const double beta = params.beta;
    const int delta = sigma1_tilde.value() - nb.distinguished().value();
    const double v = beta * std::abs(delta);
    if (v == 0.0) return 0.0;
    const double exponent =
        beta * (4.0 * params.d * params.x + 2.0 * params.y * nb.sigma_sq() +
                params.y * (sigma1_tilde.square() - nb.distinguished().square()));
    const double magnitude = std::exp(exponent + log_two_sinh(v));
    return delta > 0 ? magnitude : -magnitude;
}

BoundTerms bound_terms(const NeighborConfig& nb, Spin sigma1_tilde, const ModelParams& params) {
    return {theta(Spin::plus(), nb, sigma1_tilde, params),
            theta(Spin::minus(), nb, sigma1_tilde, params), psi(nb, sigma1_tilde, params)};
}

double lemma1_bound(const NeighborConfig& nb, Spin sigma1_tilde, const ModelParams& params) {
    check_pair(nb, sigma1_tilde, params);
    const BoundaryPair pair = BoundaryPair{nb.distinguished(), sigma1_tilde}.normalized();
    const BoundTerms t = bound_terms(nb.with_distinguished(pair.sigma1), pair.sigma1_tilde, params);
    return std::abs(t.theta_plus) + std::abs(t.theta_minus) + std::abs(t.psi);
}

double lemma2_bound(const ModelParams& params) {
    const SubRegion sub = require_u(params);
    const double beta = params.beta, two_d = 2.0 * params.d;
    const double x = params.x, y = params.y;
    if (sub == SubRegion::C) return scaled_gap(4.0, beta * (two_d * x + y + 1.0), 2.0 * beta);
    return scaled_gap(4.0, beta * (two_d * x + two_d * (y + 1.0)), 2.0 * beta);
}

double lemma3_bound(const ModelParams& params) {
    const SubRegion sub = require_u(params);
    const double beta = params.beta, two_d = 2.0 * params.d;
    const double x = params.x, y = params.y;
    switch (sub) {
        case SubRegion::A:
            return scaled_gap(3.0, beta * (two_d * x + two_d * (y + 1.0)), beta * (y + 1.0));
        case SubRegion::B:
            return scaled_gap(3.0, beta * (two_d * x + two_d * (y + 1.0)), 2.0 * beta);
        case SubRegion::C:
            return scaled_gap(3.0, beta * two_d * x, beta * (1.0 - y));
        case SubRegion::OutsideU: break;
    }
    throw DomainError("unreachable");
}

double case_bound(const ModelParams& params, const BoundaryPair& pair) {
    return pair.equal_magnitude() ? lemma2_bound(params) : lemma3_bound(params);
}

double theta_sum_bound(const ModelParams& params, int k) {
    require_k(params, k);
    const double beta = params.beta, two_d = 2.0 * params.d;
    const double x = params.x, y = params.y;
    const double weight = y <= -1.0 ? k * (y + 1.0) : (k + 1.0) * (y + 1.0);
    return scaled_gap(2.0, beta * (two_d * x + weight), beta * regime_gap(y));
}

double psi_bound(const ModelParams& params, int k) {
    require_k(params, k);
    const double beta = params.beta;
    const double exponent = beta * (4.0 * params.d * params.x + (2.0 * k + 1.0) * params.y + 1.0);
    return scaled_gap(1.0, exponent, beta * regime_gap(params.y));
}

}  // namespace begdob
