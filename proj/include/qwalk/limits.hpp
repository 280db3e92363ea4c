#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "qwalk/coin.hpp"
#include "qwalk/evolution.hpp"

namespace qwalk {

// Konno density sqrt(1-r^2) / (pi (1-x^2) sqrt(r^2-x^2)) on (-r, r),
// zero outside. Requires 0 < r < 1.
double f_K(double x, double r);

// Skew coefficient |alpha|^2 - |beta|^2 + 2 Re(a alpha conj(b beta)) / |a|^2.
double konno_C(cplx a, cplx b, cplx alpha, cplx beta);

// Parameters of a closed-form limit measure: an optional point mass plus an
// absolutely continuous density. Derived coefficients are computed by the
// factories and never set directly.
struct DensityModel {
  enum class Kind { two_state_konno, grover3_weak, grover3_localization };

  Kind kind = Kind::two_state_konno;
  cplx alpha, beta, gamma;  // initial spinor (gamma unused for 2-state)
  cplx coin_a, coin_b;      // 2-state coin entries
  double r = 0.0;           // support radius of the density part
  double C = 0.0;           // Konno skew coefficient
  double delta_mass = 0.0;  // point mass at the origin (grover3 kinds)
  double c0 = 0.0, c1 = 0.0, c2 = 0.0;

  static DensityModel konno(cplx a, cplx b, cplx alpha, cplx beta);
  static DensityModel grover3(cplx alpha, cplx beta, cplx gamma);
  static DensityModel grover3_loc(cplx alpha, cplx beta, cplx gamma);
};

// {1 - C x} f_K(x; |a|), the weak limit density of X_n/n for abcd != 0.
double two_state_limit_density(const DensityModel& model, double x);

// Site-wise limit measure of the 3-state Grover walk started from the
// origin: geometric tails with ratio 49 - 20 sqrt(6) around a central value.
double grover3_localization(site_t x, cplx alpha, cplx beta, cplx gamma);

// Point mass at 0 of the 3-state Grover weak limit; equals the total mass
// of the localization measure.
double grover3_delta_mass(cplx alpha, cplx beta, cplx gamma);

// Absolutely continuous part of the 3-state Grover weak limit:
// sqrt(2)(c0 + c1 x + c2 x^2) / (pi (1-x^2) sqrt(1-3x^2)) on
// (-1/sqrt(3), 1/sqrt(3)).
double grover3_weak_density(double x, cplx alpha, cplx beta, cplx gamma);

// Density of the model's absolutely continuous part at x.
double model_density(const DensityModel& model, double x);

// F(t) = P(Z <= t) including any point mass.
double model_cdf(const DensityModel& model, double t);

// Closed forms for the a = 0 origin-start walk: the time-averaged measure
// (|beta|^2/2, 1/2, |alpha|^2/2) on {-1, 0, 1} and the X_n/n weak limit, a
// unit point mass at 0.
struct AZeroClosedForms {
  MeasureWindow time_avg;
  std::vector<std::pair<double, double>> weak_limit;  // (position, mass)
};
AZeroClosedForms a_zero_closed_forms(cplx alpha, cplx beta);

// Exact measure |alpha|^2 delta_{-n} + |beta|^2 delta_n of the b = 0
// origin-start walk at time n.
MeasureWindow b_zero_closed_forms(cplx alpha, cplx beta, long n);

// Atoms of the b = 0 weak limit: |alpha|^2 at -1, |beta|^2 at +1.
std::vector<std::pair<double, double>> b_zero_weak_limit(cplx alpha,
                                                         cplx beta);

// Sup distance between the empirical CDF of X_n/n (site probabilities
// mu_n(x)/total at abscissae x/n) and a model CDF given as atoms plus a
// density supported on (lo, hi). Atoms are placed exactly.
double ks_distance(const MeasureWindow& mu_n, long n,
                   const std::vector<std::pair<double, double>>& atoms,
                   const std::function<double(double)>& density, double lo,
                   double hi);

// KS distance of the simulated walk at time n against the model. Two
// conventions make the sup meaningful at finite n: the empirical law is the
// site-wise average of mu_n and mu_{n+1} (coined-walk measures alternate
// parity classes), and empirical mass within n^{-1/2} of a model atom is
// collapsed onto it (localized mass sits O(1) sites from the atom, i.e.
// O(1/n) on the X_n/n scale, and would otherwise hold the sup at a
// constant). ks_distance applies neither.
double empirical_vs_density(const Coin& coin, const WaveWindow& psi0, long n,
                            const DensityModel& model);

}  // namespace qwalk
