#pragma once

#include <string>
#include <vector>

#include "qwalk/window.hpp"

namespace qwalk {

// Displacement carried by each chirality row.
// N=2: {-1,+1}; N=2M+1: {-M,...,M}; N=2M with M>=2: {-M,...,-1,1,...,M}.
std::vector<int> standard_shifts(int n);

// N x N unitary coin together with its per-row shift decomposition.
struct Coin {
  int n = 2;
  std::vector<cplx> entries;  // row-major
  std::vector<int> shifts;    // displacement of row k
  std::string kind = "explicit";
  double p0 = 0.0, p1 = 0.0;  // constructor parameters: (theta) or (eta, xi)

  cplx entry(int i, int j) const { return entries[i * n + j]; }
  int max_shift() const;
  cplx det2() const;  // 2x2 determinant

  // 2x2 entry aliases following the usual [[a,b],[c,d]] layout.
  cplx a() const { return entries[0]; }
  cplx b() const { return entries[1]; }
  cplx c() const { return entries[2]; }
  cplx d() const { return entries[3]; }
};

// [[cos t, sin t], [sin t, -cos t]]; t = pi/4 gives the Hadamard walk.
Coin coin_from_theta(double theta);

// Antidiagonal coin with a = d = 0: b = e^{i eta}, c = -e^{i xi} e^{-i eta},
// so det = e^{i xi}.
Coin coin_a_zero(double eta, double xi);

// Diagonal coin with b = c = 0: a = e^{i eta}, d = e^{i xi} e^{-i eta}.
Coin coin_b_zero(double eta, double xi);

// Grover matrix: diagonal 2/N - 1, off-diagonal 2/N. Requires N >= 2.
Coin grover_coin(int n);

// Arbitrary entries with the standard shift rule; rejects non-unitary input.
Coin coin_explicit(int n, std::vector<cplx> entries);

// max |U U^dagger - I| <= tol, entrywise.
bool check_unitary(const Coin& coin, double tol);

bool is_grover_coin(const Coin& coin, double tol = 1e-12);

// JSON form: { "kind": "theta"|"a_zero"|"b_zero"|"grover"|"explicit",
//              parameters...; "entries": row-major [re, im] pairs when
//              explicit }.
std::string coin_to_json(const Coin& coin);
Coin coin_from_json(const std::string& text);

}  // namespace qwalk
