#include "qwalk/uniform_window.hpp"

#include <cmath>
#include <stdexcept>

namespace qwalk {

WaveWindow truncated_initial_state(const Eigenpair& ep, site_t m) {
  if (m < 1) throw std::invalid_argument("window parameter M must be >= 1");
  return materialize(ep, -2 * m, 2 * m);
}

double amplitude_scale_for_probability(const std::string& label, site_t m) {
  if (m < 1) throw std::invalid_argument("window parameter M must be >= 1");
  const double c = 1.0 / static_cast<double>(2 * m + 1);
  if (label.rfind("generic", 0) == 0) return std::sqrt(c / 2.0);   // 2|A|^2 = c
  if (label.rfind("a_zero", 0) == 0) return std::sqrt(c / 2.0);    // alpha = beta
  if (label.rfind("b_zero", 0) == 0) return std::sqrt(c / 2.0);    // alpha = beta
  if (label == "grover3_plus" || label == "grover3_minus")
    return std::sqrt(c) / 2.0;                                     // 4|psi0|^2 = c
  if (label == "grover3_pos1") return std::sqrt(c / 3.0);          // 3|psi|^2 = c
  throw std::invalid_argument("no single-parameter amplitude scale for case " +
                              label);
}

UniformWindowReport uniform_probability_check(const Coin& coin,
                                              const Eigenpair& ep, site_t m) {
  if (coin.n != ep.dim)
    throw std::invalid_argument("coin and eigenstate dimensions differ");
  WaveWindow psi = truncated_initial_state(ep, m);
  psi = evolve(coin, psi, m);
  UniformWindowReport rep;
  rep.m = m;
  rep.mu = phi_measure(psi);
  const double target = 1.0 / static_cast<double>(2 * m + 1);
  double inside = 0.0;
  for (site_t x = -m; x <= m; ++x) {
    const double v = rep.mu.at(x);
    inside += v;
    rep.max_dev = std::max(rep.max_dev, std::abs(v - target));
  }
  rep.interval_mass = inside;
  rep.outside_mass = rep.mu.total() - inside;
  return rep;
}

}  // namespace qwalk
