#include "qwalk/evolution.hpp"

#include <stdexcept>

#include "qwalk/errors.hpp"

namespace qwalk {

std::vector<CoinPart> split_coin(const Coin& coin) {
  const int n = coin.n;
  std::vector<CoinPart> parts(n);
  for (int k = 0; k < n; ++k) {
    parts[k].shift = coin.shifts[k];
    parts[k].matrix.assign(static_cast<std::size_t>(n) * n, cplx{});
    for (int j = 0; j < n; ++j)
      parts[k].matrix[k * n + j] = coin.entry(k, j);
  }
  return parts;
}

WaveWindow step(const Coin& coin, const WaveWindow& psi) {
  if (coin.n != psi.dim)
    throw std::invalid_argument("coin and state chirality dimensions differ");
  const int n = coin.n;
  const int s = coin.max_shift();
  WaveWindow out(n, psi.offset - s, psi.site_count() + 2 * s);
  // Output component k at site x reads only input site x - shift_k.
  for (int k = 0; k < n; ++k) {
    const int sh = coin.shifts[k];
    const cplx* row = coin.entries.data() + static_cast<std::size_t>(k) * n;
    const cplx* in = psi.amps.data();
    cplx* dst = out.site(psi.offset + sh) + k;
    for (std::size_t i = 0; i < psi.site_count(); ++i, in += n, dst += n) {
      cplx acc{};
      for (int j = 0; j < n; ++j) acc += row[j] * in[j];
      *dst = acc;
    }
  }
  return out;
}

WaveWindow evolve(const Coin& coin, WaveWindow psi, long n) {
  if (n < 0) throw std::invalid_argument("step count must be non-negative");
  for (long i = 0; i < n; ++i) psi = step(coin, psi);
  return psi;
}

MeasureWindow measure_at(const Coin& coin, const WaveWindow& psi0, long n) {
  return phi_measure(evolve(coin, psi0, n));
}

MeasureWindow time_averaged_measure(const Coin& coin, const WaveWindow& psi0,
                                    long t_steps) {
  if (t_steps < 1) throw std::invalid_argument("time average needs T >= 1");
  const int s = coin.max_shift();
  MeasureWindow acc;
  acc.offset = psi0.offset - (t_steps - 1) * s;
  acc.values.assign(psi0.site_count() + 2 * (t_steps - 1) * s, 0.0);
  WaveWindow psi = psi0;
  for (long n = 0; n < t_steps; ++n) {
    if (n > 0) psi = step(coin, psi);
    const std::size_t base = psi.offset - acc.offset;
    for (std::size_t i = 0; i < psi.site_count(); ++i) {
      double m = 0.0;
      for (int c = 0; c < psi.dim; ++c)
        m += std::norm(psi.amps[i * psi.dim + c]);
      acc.values[base + i] += m;
    }
  }
  for (double& v : acc.values) v /= static_cast<double>(t_steps);
  return acc;
}

MeasureWindow normalized_distribution(const MeasureWindow& mu) {
  const double total = mu.total();
  if (total <= 0.0)
    throw degenerate_input_error("cannot normalize a zero measure");
  MeasureWindow out = mu;
  for (double& v : out.values) v /= total;
  return out;
}

}  // namespace qwalk
