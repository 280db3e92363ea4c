#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace qwalk {

using cplx = std::complex<double>;
using site_t = std::int64_t;

// Finitely supported amplitude field over Z with `dim` complex components
// per site. Sites outside [offset, last()] are implicitly zero.
struct WaveWindow {
  int dim = 2;
  site_t offset = 0;
  std::vector<cplx> amps;  // site-major, size = dim * site_count()

  WaveWindow() = default;
  WaveWindow(int dim_, site_t offset_, std::size_t n_sites)
      : dim(dim_), offset(offset_),
        amps(static_cast<std::size_t>(dim_) * n_sites) {}

  // Single-site state at x (the usual origin delta initial condition).
  static WaveWindow delta(site_t x, const std::vector<cplx>& components);

  std::size_t site_count() const { return dim > 0 ? amps.size() / dim : 0; }
  site_t last() const { return offset + static_cast<site_t>(site_count()) - 1; }
  bool contains(site_t x) const { return x >= offset && x <= last(); }

  cplx* site(site_t x) { return amps.data() + (x - offset) * dim; }
  const cplx* site(site_t x) const { return amps.data() + (x - offset) * dim; }

  // Component c at site x; exact zero outside the window.
  cplx amp(site_t x, int c) const { return contains(x) ? site(x)[c] : cplx{}; }

  double squared_norm() const;
};

// Finitely supported nonnegative measure over Z.
struct MeasureWindow {
  site_t offset = 0;
  std::vector<double> values;

  site_t last() const { return offset + static_cast<site_t>(values.size()) - 1; }
  bool contains(site_t x) const { return x >= offset && x <= last(); }
  double at(site_t x) const { return contains(x) ? values[x - offset] : 0.0; }
  double total() const;
};

// The measure map: per-site sum of squared component moduli.
MeasureWindow phi_measure(const WaveWindow& psi);

}  // namespace qwalk
