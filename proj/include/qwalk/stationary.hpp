#pragma once

#include <array>
#include <functional>
#include <string>

#include "qwalk/coin.hpp"
#include "qwalk/evolution.hpp"

namespace qwalk {

// Closed-form eigenstate of the walk operator: a unit-modulus eigenvalue
// plus a rule giving the amplitude at any site. phi of such a state is
// uniform over Z with per-site value `site_measure`.
struct Eigenpair {
  cplx lambda;
  int dim = 2;
  std::string label;
  double site_measure = 0.0;
  std::function<std::vector<cplx>(site_t)> amp_at;
};

// a = 0 case: even sites carry [alpha, beta], odd sites
// [e^{i eta} beta / lambda, lambda e^{-i eta} alpha], with
// lambda = sign * i * e^{i xi / 2} (principal half-angle, xi in [0, 2pi)).
// Requires alpha, beta both nonzero.
Eigenpair eigen_a_zero(double eta, double xi, int sign, cplx alpha, cplx beta);

// b = 0 case: Psi^L(x) = (lambda e^{-i eta})^x alpha,
// Psi^R(x) = (conj(lambda) e^{i xi} e^{-i eta})^x beta, any unit lambda.
Eigenpair eigen_b_zero(double eta, double xi, cplx lambda, cplx alpha,
                       cplx beta);

// The four eigenvalues for which h(z) has a double root (abcd != 0):
// +-e^{i(+-phi + xi/2)} with cos phi = |a| and det U = e^{i xi}.
std::array<cplx, 4> double_root_lambdas(const Coin& coin);

// Double root of the difference-equation characteristic polynomial:
// gamma = (lambda + det U * conj(lambda)) / (2a). |gamma| = 1 at the four
// double-root eigenvalues.
cplx gamma_of(const Coin& coin, cplx lambda);

// abcd != 0 case: Psi^L(x) = A gamma^x,
// Psi^R(x) = (A/b)((lambda - det U * conj(lambda))/2) gamma^{x-1}.
// Per-site measure is exactly 2|A|^2.
Eigenpair eigen_generic(const Coin& coin, cplx lambda, cplx amplitude);

// Three-state Grover walk cases:
//   plus/minus: lambda = (-1 +- 2 sqrt(2) i)/3, (-1)^x psi0 [1, -+ sqrt(2) i, 1]
//   neg1:       lambda = -1, constant [L0, -(L0 + R0), R0]
//   pos1:       lambda = 1, constant psi [1, 1, 1]
enum class Grover3Case { plus, minus, neg1, pos1 };
Eigenpair eigen_grover3(Grover3Case c, cplx p, cplx q = 0.0);

// N-state Grover walk, trivial eigenvalue 1: every component psi at every
// site; per-site measure N |psi|^2.
Eigenpair eigen_groverN_trivial(int n, cplx psi);

WaveWindow materialize(const Eigenpair& ep, site_t lo, site_t hi);

// Materializes ep on [-W, W], applies one step, and returns the largest
// |step(Psi)(x) - lambda Psi(x)| over interior sites. Boundary sites are
// excluded because their neighbours are truncated.
double eigen_residual(const Coin& coin, const Eigenpair& ep,
                      site_t half_width);

// |B^2 - 4AC| of h(z) = z^2 - (1/d)(lambda + det U / lambda) z + a/d for
// 2-state coins, or of h_G(z) = z^2 + ((3 l^2 + 4 l + 3)/l) z + 1 for the
// 3-state Grover coin. Vanishes iff lambda admits a double root.
double h_polynomial_discriminant(const Coin& coin, cplx lambda);

}  // namespace qwalk
