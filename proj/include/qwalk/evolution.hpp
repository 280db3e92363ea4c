#pragma once

#include "qwalk/coin.hpp"
#include "qwalk/window.hpp"

namespace qwalk {

// One row of the coin with its displacement. The matrix keeps the coin's
// row k and zeros elsewhere, so the parts sum to the coin.
struct CoinPart {
  int shift = 0;
  std::vector<cplx> matrix;  // n x n, row-major
};

std::vector<CoinPart> split_coin(const Coin& coin);

// Psi'(x) = sum_k U_k Psi(x - shift_k). The window widens by max|shift| on
// each side; the evolution never truncates.
WaveWindow step(const Coin& coin, const WaveWindow& psi);

// n-fold application of step; n = 0 returns psi unchanged.
WaveWindow evolve(const Coin& coin, WaveWindow psi, long n);

// mu_n = phi(evolve(psi0, n)).
MeasureWindow measure_at(const Coin& coin, const WaveWindow& psi0, long n);

// (1/T) sum_{n=0}^{T-1} mu_n on the union window.
MeasureWindow time_averaged_measure(const Coin& coin, const WaveWindow& psi0,
                                    long t_steps);

// Values divided by the total mass; throws degenerate_input_error when the
// total is zero.
MeasureWindow normalized_distribution(const MeasureWindow& mu);

}  // namespace qwalk
