#pragma once

// Shared test helpers: a dense-matrix evolution oracle, an independent
// quadrature oracle, and random draws. Everything here stays out of the
// library so the checks exercise a genuinely different code path.

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

#include "qwalk/coin.hpp"
#include "qwalk/evolution.hpp"

namespace qwalk_test {

using qwalk::Coin;
using qwalk::cplx;
using qwalk::site_t;
using qwalk::WaveWindow;

// ---------------------------------------------------------------------------
// Dense truncation of the one-step operator over sites [lo, hi]:
// B[(y,k),(x,j)] = U(k,j) when y = x + shift_k. Powers are taken by plain
// dense matrix multiplication, then applied to the embedded state.
// ---------------------------------------------------------------------------

struct DenseOperator {
  int n = 2;
  site_t lo = 0, hi = 0;
  std::vector<cplx> m;  // D x D row-major, D = (hi - lo + 1) * n

  std::size_t dim() const { return (hi - lo + 1) * n; }
};

inline DenseOperator dense_step_operator(const Coin& coin, site_t lo,
                                         site_t hi) {
  DenseOperator op;
  op.n = coin.n;
  op.lo = lo;
  op.hi = hi;
  const std::size_t d = op.dim();
  op.m.assign(d * d, cplx{});
  for (site_t x = lo; x <= hi; ++x) {
    for (int k = 0; k < coin.n; ++k) {
      const site_t y = x + coin.shifts[k];
      if (y < lo || y > hi) continue;
      for (int j = 0; j < coin.n; ++j)
        op.m[((y - lo) * coin.n + k) * d + ((x - lo) * coin.n + j)] =
            coin.entry(k, j);
    }
  }
  return op;
}

inline std::vector<cplx> dense_matmul(const std::vector<cplx>& a,
                                      const std::vector<cplx>& b,
                                      std::size_t d) {
  std::vector<cplx> out(d * d, cplx{});
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k) {
      const cplx aik = a[i * d + k];
      if (aik == cplx{}) continue;
      for (std::size_t j = 0; j < d; ++j) out[i * d + j] += aik * b[k * d + j];
    }
  return out;
}

// psi evolved n steps by the dense truncated operator; the range must be
// wide enough that nothing reaches the truncation boundary.
inline WaveWindow dense_evolve(const Coin& coin, const WaveWindow& psi,
                               long n, site_t lo, site_t hi) {
  DenseOperator op = dense_step_operator(coin, lo, hi);
  const std::size_t d = op.dim();
  std::vector<cplx> power(d * d, cplx{});
  for (std::size_t i = 0; i < d; ++i) power[i * d + i] = 1.0;
  for (long i = 0; i < n; ++i) power = dense_matmul(op.m, power, d);
  std::vector<cplx> vec(d, cplx{});
  for (site_t x = psi.offset; x <= psi.last(); ++x)
    for (int c = 0; c < coin.n; ++c)
      vec[(x - lo) * coin.n + c] = psi.amp(x, c);
  std::vector<cplx> out(d, cplx{});
  for (std::size_t i = 0; i < d; ++i) {
    cplx acc{};
    for (std::size_t j = 0; j < d; ++j) acc += power[i * d + j] * vec[j];
    out[i] = acc;
  }
  WaveWindow res(coin.n, lo, static_cast<std::size_t>(hi - lo + 1));
  res.amps = std::move(out);
  return res;
}

// ---------------------------------------------------------------------------
// Independent quadrature: adaptive Simpson. Densities with inverse-square-
// root endpoint singularities are integrated through the substitution
// x = r sin u, which makes the integrand smooth on [-pi/2, pi/2].
// ---------------------------------------------------------------------------

inline double adaptive_simpson(const std::function<double(double)>& f,
                               double a, double b, double fa, double fm,
                               double fb, double whole, double tol,
                               int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * tol)
    return left + right + (left + right - whole) / 15.0;
  return adaptive_simpson(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1) +
         adaptive_simpson(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1);
}

inline double simpson(const std::function<double(double)>& f, double a,
                      double b, double tol = 1e-10) {
  const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return adaptive_simpson(f, a, b, fa, fm, fb, whole, tol, 40);
}

// Integral of w(x) f_K(x; r) over (-r, r) without evaluating the singular
// endpoints: integrand becomes w(r sin u) sqrt(1-r^2)/(pi (1-r^2 sin^2 u)).
inline double integrate_against_konno(const std::function<double(double)>& w,
                                      double r, double tol = 1e-10) {
  const double s = std::sqrt(1.0 - r * r);
  auto g = [&](double u) {
    const double x = r * std::sin(u);
    return w(x) * s / (std::numbers::pi * (1.0 - x * x));
  };
  return simpson(g, -std::numbers::pi / 2.0, std::numbers::pi / 2.0, tol);
}

// ---------------------------------------------------------------------------
// Random draws
// ---------------------------------------------------------------------------

inline cplx random_phase(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 2.0 * std::numbers::pi);
  const double t = u(rng);
  return {std::cos(t), std::sin(t)};
}

// complex with modulus in [0.2, 1.2]; bounded away from zero so products
// of parameters stay well scaled
inline cplx random_amp(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.2, 1.2);
  return u(rng) * random_phase(rng);
}

// 2x2 unitary with all entries bounded away from zero:
// [[e^{i p} cos f, e^{i q} sin f], [-e^{i(x - q)} sin f, e^{i(x - p)} cos f]]
inline Coin random_generic_coin(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::uniform_real_distribution<double> mix(0.15, std::numbers::pi / 2.0 -
                                                       0.15);
  const double f = mix(rng), p = angle(rng), q = angle(rng), x = angle(rng);
  const double cf = std::cos(f), sf = std::sin(f);
  auto e = [](double t) { return cplx{std::cos(t), std::sin(t)}; };
  return qwalk::coin_explicit(
      2, {e(p) * cf, e(q) * sf, -e(x - q) * sf, e(x - p) * cf});
}

// Haar-ish N x N unitary via Gram-Schmidt on a complex Gaussian matrix.
inline Coin random_unitary_coin(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  std::vector<std::vector<cplx>> rows(n, std::vector<cplx>(n));
  for (auto& row : rows)
    for (auto& v : row) v = {g(rng), g(rng)};
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < i; ++j) {
      cplx proj{};
      for (int k = 0; k < n; ++k) proj += std::conj(rows[j][k]) * rows[i][k];
      for (int k = 0; k < n; ++k) rows[i][k] -= proj * rows[j][k];
    }
    double nrm = 0.0;
    for (int k = 0; k < n; ++k) nrm += std::norm(rows[i][k]);
    nrm = std::sqrt(nrm);
    for (int k = 0; k < n; ++k) rows[i][k] /= nrm;
  }
  std::vector<cplx> flat;
  for (const auto& row : rows) flat.insert(flat.end(), row.begin(), row.end());
  return qwalk::coin_explicit(n, std::move(flat));
}

// unit-norm spinor with `dim` components
inline std::vector<cplx> random_unit_spinor(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  std::vector<cplx> v(dim);
  double nrm = 0.0;
  for (auto& c : v) {
    c = {g(rng), g(rng)};
    nrm += std::norm(c);
  }
  nrm = std::sqrt(nrm);
  for (auto& c : v) c /= nrm;
  return v;
}

inline WaveWindow random_state(int dim, site_t offset, std::size_t sites,
                               std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  WaveWindow w(dim, offset, sites);
  for (auto& a : w.amps) a = {g(rng), g(rng)};
  return w;
}

}  // namespace qwalk_test
