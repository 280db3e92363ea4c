#pragma once

#include "qwalk/stationary.hpp"

namespace qwalk {

// Eigenstate amplitudes on |x| <= 2M, zero outside.
WaveWindow truncated_initial_state(const Eigenpair& ep, site_t m);

// Canonical amplitude parameter that makes the per-site measure 1/(2M+1):
// generic: A; a_zero/b_zero with alpha = beta: that common value;
// grover3 plus/minus: psi0; grover3 pos1: psi. Case tags whose measure is
// not fixed by a single scalar are rejected.
double amplitude_scale_for_probability(const std::string& label, site_t m);

struct UniformWindowReport {
  site_t m = 0;
  double max_dev = 0.0;        // max over |x| <= M of |mu_M(x) - 1/(2M+1)|
  double interval_mass = 0.0;  // total mass on [-M, M]
  double outside_mass = 0.0;   // mass outside the interval (unconstrained)
  MeasureWindow mu;            // full measure at time M
};

// Evolves the truncated state M steps and compares the measure on [-M, M]
// against the uniform probability value 1/(2M+1).
UniformWindowReport uniform_probability_check(const Coin& coin,
                                              const Eigenpair& ep, site_t m);

}  // namespace qwalk
