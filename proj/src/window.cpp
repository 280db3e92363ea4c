#include "qwalk/window.hpp"

#include <algorithm>
#include <stdexcept>

namespace qwalk {

WaveWindow WaveWindow::delta(site_t x, const std::vector<cplx>& components) {
  if (components.empty())
    throw std::invalid_argument("delta state needs at least one component");
  WaveWindow w(static_cast<int>(components.size()), x, 1);
  std::copy(components.begin(), components.end(), w.amps.begin());
  return w;
}

double WaveWindow::squared_norm() const {
  double s = 0.0;
  for (const cplx& a : amps) s += std::norm(a);
  return s;
}

double MeasureWindow::total() const {
  double s = 0.0;
  for (double v : values) s += v;
  return s;
}

MeasureWindow phi_measure(const WaveWindow& psi) {
  MeasureWindow mu;
  mu.offset = psi.offset;
  mu.values.resize(psi.site_count());
  const int n = psi.dim;
  for (std::size_t i = 0; i < mu.values.size(); ++i) {
    double s = 0.0;
    for (int c = 0; c < n; ++c) s += std::norm(psi.amps[i * n + c]);
    mu.values[i] = s;
  }
  return mu;
}

}  // namespace qwalk
