#include "qwalk/limits.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "qwalk/errors.hpp"

namespace qwalk {

namespace {

constexpr double kSqrt6 = 2.4494897427831780982;
constexpr double kDecayBase = 49.0 - 20.0 * kSqrt6;  // 0.010205...

double integrate(const std::function<double(double)>& f, double a, double b) {
  if (b <= a) return 0.0;
  static thread_local boost::math::quadrature::tanh_sinh<double> quad;
  return quad.integrate(f, a, b);
}

void require_unit_norm(double norm2) {
  if (std::abs(norm2 - 1.0) > 1e-12)
    throw std::invalid_argument("initial spinor must have unit norm");
}

}  // namespace

double f_K(double x, double r) {
  if (!(r > 0.0 && r < 1.0))
    throw std::invalid_argument("f_K needs r in (0, 1)");
  if (std::abs(x) >= r) return 0.0;
  return std::sqrt(1.0 - r * r) /
         (std::numbers::pi * (1.0 - x * x) * std::sqrt(r * r - x * x));
}

double konno_C(cplx a, cplx b, cplx alpha, cplx beta) {
  if (std::abs(a) == 0.0) throw wrong_case_error("konno_C needs a != 0");
  const cplx cross = a * alpha * std::conj(b * beta);
  return std::norm(alpha) - std::norm(beta) +
         2.0 * cross.real() / std::norm(a);
}

DensityModel DensityModel::konno(cplx a, cplx b, cplx alpha, cplx beta) {
  const double mod_a = std::abs(a);
  if (mod_a == 0.0)
    throw wrong_case_error("Konno model needs a != 0 (a=0 walks localize)");
  if (mod_a >= 1.0)
    throw wrong_case_error("Konno model needs |a| < 1 (b=0 walks are ballistic)");
  require_unit_norm(std::norm(alpha) + std::norm(beta));
  DensityModel m;
  m.kind = Kind::two_state_konno;
  m.alpha = alpha;
  m.beta = beta;
  m.coin_a = a;
  m.coin_b = b;
  m.r = mod_a;
  m.C = konno_C(a, b, alpha, beta);
  return m;
}

DensityModel DensityModel::grover3(cplx alpha, cplx beta, cplx gamma) {
  require_unit_norm(std::norm(alpha) + std::norm(beta) + std::norm(gamma));
  DensityModel m;
  m.kind = Kind::grover3_weak;
  m.alpha = alpha;
  m.beta = beta;
  m.gamma = gamma;
  m.r = 1.0 / std::sqrt(3.0);
  m.delta_mass = grover3_delta_mass(alpha, beta, gamma);
  m.c0 = std::norm(alpha + gamma) / 2.0 + std::norm(beta);
  m.c1 = -std::norm(alpha - beta) + std::norm(gamma - beta);
  m.c2 = std::norm(alpha - gamma) / 2.0 -
         ((2.0 * alpha + beta) * std::conj(2.0 * gamma + beta)).real();
  return m;
}

DensityModel DensityModel::grover3_loc(cplx alpha, cplx beta, cplx gamma) {
  DensityModel m = grover3(alpha, beta, gamma);
  m.kind = Kind::grover3_localization;
  return m;
}

double two_state_limit_density(const DensityModel& model, double x) {
  if (model.kind != DensityModel::Kind::two_state_konno)
    throw std::invalid_argument("model is not a two-state Konno density");
  return (1.0 - model.C * x) * f_K(x, model.r);
}

double grover3_localization(site_t x, cplx alpha, cplx beta, cplx gamma) {
  const double u = std::norm(2.0 * alpha + beta);
  const double v = std::norm(beta + 2.0 * gamma);
  const double w = std::norm(alpha + beta + gamma);
  if (x == 0) return (5.0 - 2.0 * kSqrt6) / 2.0 * (u + v);
  if (x >= 1)
    return ((3.0 + kSqrt6) * u + (3.0 - kSqrt6) * v - 2.0 * w) *
           std::pow(kDecayBase, static_cast<double>(x));
  return ((3.0 - kSqrt6) * u + (3.0 + kSqrt6) * v - 2.0 * w) *
         std::pow(kDecayBase, static_cast<double>(-x));
}

double grover3_delta_mass(cplx alpha, cplx beta, cplx gamma) {
  const double u = std::norm(2.0 * alpha + beta);
  const double v = std::norm(2.0 * gamma + beta);
  const double w = std::norm(alpha + beta + gamma);
  return (kSqrt6 - 2.0) / 4.0 * (u + v) - (5.0 * kSqrt6 - 12.0) / 6.0 * w;
}

double grover3_weak_density(double x, cplx alpha, cplx beta, cplx gamma) {
  if (std::abs(x) >= 1.0 / std::sqrt(3.0)) return 0.0;
  const double c0 = std::norm(alpha + gamma) / 2.0 + std::norm(beta);
  const double c1 = -std::norm(alpha - beta) + std::norm(gamma - beta);
  const double c2 = std::norm(alpha - gamma) / 2.0 -
                    ((2.0 * alpha + beta) * std::conj(2.0 * gamma + beta))
                        .real();
  return std::numbers::sqrt2 * (c0 + c1 * x + c2 * x * x) /
         (std::numbers::pi * (1.0 - x * x) * std::sqrt(1.0 - 3.0 * x * x));
}

double model_density(const DensityModel& model, double x) {
  switch (model.kind) {
    case DensityModel::Kind::two_state_konno:
      return two_state_limit_density(model, x);
    case DensityModel::Kind::grover3_weak:
      if (std::abs(x) >= model.r) return 0.0;
      return std::numbers::sqrt2 * (model.c0 + model.c1 * x + model.c2 * x * x) /
             (std::numbers::pi * (1.0 - x * x) *
              std::sqrt(1.0 - 3.0 * x * x));
    case DensityModel::Kind::grover3_localization:
      break;
  }
  throw std::invalid_argument(
      "localization models have no absolutely continuous density");
}

double model_cdf(const DensityModel& model, double t) {
  if (model.kind == DensityModel::Kind::grover3_localization)
    throw std::invalid_argument("localization models have no X_n/n CDF");
  double f = 0.0;
  if (t > -model.r)
    f = integrate([&](double x) { return model_density(model, x); }, -model.r,
                  std::min(t, model.r));
  if (model.kind == DensityModel::Kind::grover3_weak && t >= 0.0)
    f += model.delta_mass;
  return f;
}

AZeroClosedForms a_zero_closed_forms(cplx alpha, cplx beta) {
  AZeroClosedForms out;
  out.time_avg.offset = -1;
  out.time_avg.values = {std::norm(beta) / 2.0,
                         (std::norm(alpha) + std::norm(beta)) / 2.0,
                         std::norm(alpha) / 2.0};
  out.weak_limit = {{0.0, 1.0}};
  return out;
}

MeasureWindow b_zero_closed_forms(cplx alpha, cplx beta, long n) {
  if (n < 0) throw std::invalid_argument("time must be non-negative");
  MeasureWindow mu;
  if (n == 0) {
    mu.offset = 0;
    mu.values = {std::norm(alpha) + std::norm(beta)};
    return mu;
  }
  mu.offset = -n;
  mu.values.assign(2 * n + 1, 0.0);
  mu.values.front() = std::norm(alpha);
  mu.values.back() = std::norm(beta);
  return mu;
}

std::vector<std::pair<double, double>> b_zero_weak_limit(cplx alpha,
                                                         cplx beta) {
  return {{-1.0, std::norm(alpha)}, {1.0, std::norm(beta)}};
}

namespace {

// Sup of |F_emp - F_model| over jump points of either CDF, checking both
// one-sided limits. Empirical mass arrives as point masses; model mass as
// atoms plus a density on (lo, hi) integrated segment by segment.
double ks_from_points(const std::vector<std::pair<double, double>>& points,
                      const std::vector<std::pair<double, double>>& atoms,
                      const std::function<double(double)>& density, double lo,
                      double hi) {
  std::map<double, std::pair<double, double>> jumps;  // t -> (emp, atom)
  for (const auto& [t, p] : points)
    if (p > 0.0) jumps[t].first += p;
  for (const auto& [t, mass] : atoms) jumps[t].second += mass;

  double f_emp = 0.0, f_mod = 0.0, prev = 0.0, worst = 0.0;
  bool first = true;
  for (const auto& [t, jump] : jumps) {
    const double from = first ? lo : std::max(lo, prev);
    if (t > from) f_mod += integrate(density, from, std::min(hi, t));
    first = false;
    prev = t;
    worst = std::max(worst, std::abs(f_emp - f_mod));  // left limits
    f_emp += jump.first;
    f_mod += jump.second;
    worst = std::max(worst, std::abs(f_emp - f_mod));  // right values
  }
  return worst;
}

// empirical point masses of X_n/n, scaled by `weight`
void append_empirical(std::vector<std::pair<double, double>>& points,
                      const MeasureWindow& mu, long n, double weight) {
  const double total = mu.total();
  if (total <= 0.0) throw degenerate_input_error("empty empirical measure");
  for (std::size_t i = 0; i < mu.values.size(); ++i)
    if (mu.values[i] > 0.0)
      points.emplace_back(
          static_cast<double>(mu.offset + static_cast<site_t>(i)) / n,
          weight * mu.values[i] / total);
}

}  // namespace

double ks_distance(const MeasureWindow& mu_n, long n,
                   const std::vector<std::pair<double, double>>& atoms,
                   const std::function<double(double)>& density, double lo,
                   double hi) {
  if (n < 1) throw std::invalid_argument("KS comparison needs n >= 1");
  std::vector<std::pair<double, double>> points;
  append_empirical(points, mu_n, n, 1.0);
  return ks_from_points(points, atoms, density, lo, hi);
}

double empirical_vs_density(const Coin& coin, const WaveWindow& psi0, long n,
                            const DensityModel& model) {
  if (model.kind == DensityModel::Kind::grover3_localization)
    throw std::invalid_argument(
        "localization models compare site-wise, not by CDF");
  if (n < 1) throw std::invalid_argument("KS comparison needs n >= 1");

  // Parity smoothing: coined-walk measures oscillate between consecutive
  // times, so the comparison uses the site-wise average of mu_n and
  // mu_{n+1} at the X_n/n abscissa scale.
  const WaveWindow psi_n = evolve(coin, psi0, n);
  const MeasureWindow mu_a = phi_measure(psi_n);
  const MeasureWindow mu_b = phi_measure(step(coin, psi_n));
  MeasureWindow avg;
  avg.offset = mu_b.offset;
  avg.values.assign(mu_b.values.size(), 0.0);
  for (site_t x = avg.offset; x <= avg.last(); ++x)
    avg.values[x - avg.offset] = 0.5 * (mu_a.at(x) + mu_b.at(x));
  std::vector<std::pair<double, double>> points;
  append_empirical(points, avg, n, 1.0);

  std::vector<std::pair<double, double>> atoms;
  if (model.kind == DensityModel::Kind::grover3_weak)
    atoms.emplace_back(0.0, model.delta_mass);

  // Localized mass sits a bounded number of sites from a model atom, i.e.
  // within O(1/n) of it on the X_n/n scale. Collapsing empirical mass
  // inside a window w with 1/n << w << 1 onto the atom separates that mass
  // from the absolutely continuous part; w = n^{-1/2} splits the scales.
  if (!atoms.empty()) {
    const double w = 1.0 / std::sqrt(static_cast<double>(n));
    for (auto& [t, p] : points)
      for (const auto& [a, mass] : atoms)
        if (std::abs(t - a) <= w) {
          t = a;
          break;
        }
  }
  return ks_from_points(points, atoms,
                        [&](double x) { return model_density(model, x); },
                        -model.r, model.r);
}

}  // namespace qwalk
