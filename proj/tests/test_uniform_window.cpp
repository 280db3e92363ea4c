#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qwalk/uniform_window.hpp"
#include "test_support.hpp"

using namespace qwalk;
using doctest::Approx;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("truncated initial state covers |x| <= 2M") {
  const Eigenpair ep = eigen_grover3(Grover3Case::pos1, 1.0);
  const WaveWindow w = truncated_initial_state(ep, 1);
  CHECK(w.offset == -2);
  CHECK(w.site_count() == 5);
  CHECK_THROWS_AS(truncated_initial_state(ep, 0), std::invalid_argument);

  const Coin h = coin_from_theta(kPi / 4.0);
  const cplx l2 = double_root_lambdas(h)[1];
  const cplx a{0.5, 0.25};
  const Eigenpair gen = eigen_generic(h, l2, a);
  const WaveWindow t = truncated_initial_state(gen, 2);
  CHECK(t.offset == -4);
  CHECK(t.last() == 4);
  const cplx i{0.0, 1.0};
  cplx ix{1.0, 0.0};
  for (site_t x = 0; x <= 4; ++x) {
    CHECK(std::abs(t.amp(x, 0) - a * ix) < 1e-14);
    ix *= i;
  }
  // total measure = (4M+1) * per-site constant
  CHECK(phi_measure(t).total() ==
        Approx(9.0 * gen.site_measure).epsilon(1e-13));
}

TEST_CASE("amplitude scale inverts the per-site constants") {
  CHECK(amplitude_scale_for_probability("generic_k2", 1) ==
        Approx(1.0 / std::sqrt(6.0)));
  const double a = amplitude_scale_for_probability("a_zero_plus", 1);
  CHECK(a * a == Approx(1.0 / 6.0));
  const double p = amplitude_scale_for_probability("grover3_pos1", 2);
  CHECK(p * p == Approx(1.0 / 15.0));
  const double q = amplitude_scale_for_probability("grover3_plus", 3);
  CHECK(4.0 * q * q == Approx(1.0 / 7.0));
  CHECK(amplitude_scale_for_probability("b_zero", 5) ==
        Approx(std::sqrt(1.0 / 22.0)));
  CHECK_THROWS_AS(amplitude_scale_for_probability("grover3_neg1", 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(amplitude_scale_for_probability("groverN_trivial", 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(amplitude_scale_for_probability("generic_k1", 0),
                  std::invalid_argument);
}

TEST_CASE("uniform probability window: Hadamard generic case") {
  const Coin h = coin_from_theta(kPi / 4.0);
  const cplx l2 = double_root_lambdas(h)[1];
  const site_t m = 10;
  const double a = amplitude_scale_for_probability("generic_k2", m);
  const auto rep = uniform_probability_check(h, eigen_generic(h, l2, a), m);
  CHECK(rep.max_dev < 1e-12);
  CHECK(rep.interval_mass == Approx(1.0).epsilon(1e-12));
  CHECK(rep.mu.at(0) == Approx(1.0 / 21.0).epsilon(1e-12));
  CHECK(rep.mu.at(m) == Approx(1.0 / 21.0).epsilon(1e-12));
}

TEST_CASE("uniform probability window: Grover-3 lambda_+ case") {
  const site_t m = 5;
  const double psi0 = amplitude_scale_for_probability("grover3_plus", m);
  const auto rep = uniform_probability_check(
      grover_coin(3), eigen_grover3(Grover3Case::plus, psi0), m);
  CHECK(rep.max_dev < 1e-12);
  for (site_t x = -m; x <= m; ++x)
    CHECK(rep.mu.at(x) == Approx(1.0 / 11.0).epsilon(1e-12));
}

TEST_CASE("uniform probability window: two-state Grover at M=1") {
  const double s = amplitude_scale_for_probability("a_zero_plus", 1);
  const auto rep = uniform_probability_check(
      coin_a_zero(0.0, kPi), eigen_a_zero(0.0, kPi, +1, s, s), 1);
  CHECK(rep.max_dev < 1e-13);
  for (site_t x = -1; x <= 1; ++x)
    CHECK(rep.mu.at(x) == Approx(1.0 / 3.0).epsilon(1e-13));
}

TEST_CASE("truncation is invisible inside the light cone") {
  const Coin g3 = grover_coin(3);
  const Eigenpair ep = eigen_grover3(Grover3Case::minus, cplx{0.4, 0.1});
  const site_t m = 6;
  for (long n : {1L, 3L, 6L}) {
    const WaveWindow trunc =
        evolve(g3, truncated_initial_state(ep, m), n);
    const WaveWindow wide = evolve(
        g3, materialize(ep, -(2 * m + n + 2), 2 * m + n + 2), n);
    const MeasureWindow mt = phi_measure(trunc), mw = phi_measure(wide);
    for (site_t x = -m; x <= m; ++x)
      CHECK(std::abs(mt.at(x) - mw.at(x)) < 1e-13);
  }
}

TEST_CASE("M sweep stays uniform for three cases") {
  const Coin h = coin_from_theta(kPi / 4.0);
  const Coin g2 = coin_a_zero(0.0, kPi);
  const Coin g3 = grover_coin(3);
  for (site_t m : {1, 2, 5}) {
    const double target = 1.0 / (2.0 * m + 1.0);
    {
      const double a = amplitude_scale_for_probability("generic_k1", m);
      const auto rep = uniform_probability_check(
          h, eigen_generic(h, double_root_lambdas(h)[0], a), m);
      CHECK(rep.max_dev < 1e-12);
      CHECK(rep.mu.at(-m) == Approx(target).epsilon(1e-12));
    }
    {
      const double s = amplitude_scale_for_probability("a_zero_minus", m);
      const auto rep = uniform_probability_check(
          g2, eigen_a_zero(0.0, kPi, -1, s, s), m);
      CHECK(rep.max_dev < 1e-12);
    }
    {
      const double s = amplitude_scale_for_probability("grover3_pos1", m);
      const auto rep = uniform_probability_check(
          g3, eigen_grover3(Grover3Case::pos1, s), m);
      CHECK(rep.max_dev < 1e-12);
    }
  }
}
