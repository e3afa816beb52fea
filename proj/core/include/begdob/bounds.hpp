#pragma once

#include "begdob/model.hpp"
#include "begdob/specification.hpp"

namespace begdob {

/// Exponents (a, b) of the uniform bound 4 e^{-beta a} (1 - e^{-beta b}).
struct ExponentPair {
    double a = 0.0;
    double b = 0.0;
};

/// The three terms whose absolute values bound a single pair TV.
struct BoundTerms {
    double theta_plus = 0.0;
    double theta_minus = 0.0;
    double psi = 0.0;
};

/// a = 2d|x+y+1| on A u B, 2d|x| on C; b = y+1 on A, 2 on B, |y|+1 on C.
/// Throws DomainError outside A u B u C.
ExponentPair exponents(const ModelParams& params);

/// w(a, b, beta) = 4 e^{-a beta} (1 - e^{-b beta}).
double tv_envelope(double a, double b, double beta);

/// Uniform bound on every pair TV: w(a(d,x,y), b(y), beta).
double theorem1_bound(const ModelParams& params);

/// The maximiser ln((a+b)/a)/b of w(a, b, .). Throws DomainError unless a, b > 0.
double beta_critical(const ExponentPair& ep);

/// r(t) = 4/(1+t) (1+1/t)^{-t}, the value of w at its maximum with t = a/b.
/// Strictly decreasing. Throws DomainError for t <= 0.
double r_of_t(double t);

// The per-configuration terms below take the boundary condition sigma (its
// distinguished spin is sigma_1) and the replacement sigma~_1 literally, without
// reordering the pair. They throw DomainError if sigma~_1 == sigma_1 or the
// configuration does not have 2d spins.

/// theta_s(sigma, sigma~_1) for s in {-1, +1}.
double theta(Spin s, const NeighborConfig& nb, Spin sigma1_tilde, const ModelParams& params);

/// psi(sigma, sigma~_1) = 2 e^{beta(4dx + 2y sigma^2)} e^{beta y (sigma~_1^2 - sigma_1^2)}
///                        sinh(beta (sigma~_1 - sigma_1)).
double psi(const NeighborConfig& nb, Spin sigma1_tilde, const ModelParams& params);

BoundTerms bound_terms(const NeighborConfig& nb, Spin sigma1_tilde, const ModelParams& params);

/// |theta_+| + |theta_-| + |psi| for the normalized form of the pair
/// (sigma_1, sigma~_1); unnormalized input is reordered first.
double lemma1_bound(const NeighborConfig& nb, Spin sigma1_tilde, const ModelParams& params);

/// Uniform bound for pairs with |sigma_1| = |sigma~_1|. Domain: A u B u C.
double lemma2_bound(const ModelParams& params);

/// Uniform bound for pairs with |sigma_1| != |sigma~_1|. Domain: A u B u C.
double lemma3_bound(const ModelParams& params);

/// lemma2_bound or lemma3_bound according to the class of the pair.
double case_bound(const ModelParams& params, const BoundaryPair& pair);

/// Bound on |theta_+| + |theta_-| for sigma_1 = 0, sigma~_1 = 1 and k nonzero
/// spins among neighbours 2..2d, by y-regime (y >= 1, |y| < 1, y <= -1).
/// Throws DomainError unless 0 <= k <= 2d-1.
double theta_sum_bound(const ModelParams& params, int k);

/// Bound on |psi| for sigma_1 = 0, sigma~_1 = +-1 and k nonzero spins among
/// neighbours 2..2d, by the same y-regimes as theta_sum_bound.
double psi_bound(const ModelParams& params, int k);

}  // namespace begdob
