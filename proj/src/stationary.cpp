#include "qwalk/stationary.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qwalk/errors.hpp"

namespace qwalk {

namespace {

constexpr double kZeroTol = 1e-12;  // entry-is-zero threshold for case routing

cplx expi(double t) { return {std::cos(t), std::sin(t)}; }

// Integer power by squaring; more accurate than exp(log) for unit-modulus
// bases raised to window-sized exponents.
cplx ipow(cplx z, long long k) {
  if (k < 0) {
    z = 1.0 / z;
    k = -k;
  }
  cplx r{1.0, 0.0};
  while (k > 0) {
    if (k & 1) r *= z;
    z *= z;
    k >>= 1;
  }
  return r;
}

// arg mapped to [0, 2pi)
double phase_of(cplx z) {
  double t = std::arg(z);
  if (t < 0) t += 2.0 * std::numbers::pi;
  return t;
}

bool even_site(site_t x) { return ((x % 2) + 2) % 2 == 0; }

const cplx kGrover3LambdaPlus{-1.0 / 3.0, 2.0 * std::numbers::sqrt2 / 3.0};
const cplx kGrover3LambdaMinus{-1.0 / 3.0, -2.0 * std::numbers::sqrt2 / 3.0};

}  // namespace

Eigenpair eigen_a_zero(double eta, double xi, int sign, cplx alpha,
                       cplx beta) {
  if (alpha == 0.0 || beta == 0.0)
    throw std::invalid_argument("a=0 eigenstate requires alpha*beta != 0");
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("sign must be +1 or -1");
  const cplx lambda = double(sign) * cplx{0.0, 1.0} * expi(xi / 2.0);
  const cplx odd_l = expi(eta) * beta / lambda;
  const cplx odd_r = lambda * expi(-eta) * alpha;
  Eigenpair ep;
  ep.lambda = lambda;
  ep.dim = 2;
  ep.label = sign > 0 ? "a_zero_plus" : "a_zero_minus";
  ep.site_measure = std::norm(alpha) + std::norm(beta);
  ep.amp_at = [alpha, beta, odd_l, odd_r](site_t x) -> std::vector<cplx> {
    if (even_site(x)) return {alpha, beta};
    return {odd_l, odd_r};
  };
  return ep;
}

Eigenpair eigen_b_zero(double eta, double xi, cplx lambda, cplx alpha,
                       cplx beta) {
  if (std::abs(std::abs(lambda) - 1.0) > 1e-10)
    throw std::invalid_argument("b=0 eigenstate requires |lambda| = 1");
  if (alpha == 0.0 || beta == 0.0)
    throw std::invalid_argument("b=0 eigenstate requires alpha*beta != 0");
  const cplx base_l = lambda * expi(-eta);
  const cplx base_r = std::conj(lambda) * expi(xi) * expi(-eta);
  Eigenpair ep;
  ep.lambda = lambda;
  ep.dim = 2;
  ep.label = "b_zero";
  ep.site_measure = std::norm(alpha) + std::norm(beta);
  ep.amp_at = [base_l, base_r, alpha, beta](site_t x) -> std::vector<cplx> {
    return {ipow(base_l, x) * alpha, ipow(base_r, x) * beta};
  };
  return ep;
}

std::array<cplx, 4> double_root_lambdas(const Coin& coin) {
  if (coin.n != 2)
    throw wrong_case_error("double-root eigenvalues need a 2x2 coin");
  for (const cplx& e : coin.entries)
    if (std::abs(e) <= kZeroTol)
      throw wrong_case_error(
          "double-root eigenvalues need all coin entries nonzero "
          "(route a=0/b=0 coins to their own constructors)");
  const double mod_a = std::abs(coin.a());
  if (mod_a >= 1.0 - kZeroTol)
    throw wrong_case_error("|a| must lie strictly inside (0, 1)");
  const double phi = std::acos(mod_a);
  const double xi = phase_of(coin.det2());
  const cplx l1 = expi(phi + xi / 2.0);
  const cplx l2 = expi(-phi + xi / 2.0);
  return {l1, l2, -l1, -l2};
}

cplx gamma_of(const Coin& coin, cplx lambda) {
  if (coin.n != 2 || std::abs(coin.a()) <= kZeroTol)
    throw wrong_case_error("gamma is defined for 2x2 coins with a != 0");
  return (lambda + coin.det2() * std::conj(lambda)) / (2.0 * coin.a());
}

Eigenpair eigen_generic(const Coin& coin, cplx lambda, cplx amplitude) {
  if (coin.n != 2)
    throw wrong_case_error("generic eigenstate needs a 2x2 coin");
  for (const cplx& e : coin.entries)
    if (std::abs(e) <= kZeroTol)
      throw wrong_case_error(
          "generic eigenstate needs all coin entries nonzero");
  if (amplitude == 0.0)
    throw std::invalid_argument("amplitude scale must be nonzero");
  if (h_polynomial_discriminant(coin, lambda) > 1e-8)
    throw std::invalid_argument(
        "lambda is not a double-root eigenvalue of this coin");
  const cplx delta = coin.det2();
  const cplx gamma = (lambda + delta * std::conj(lambda)) / (2.0 * coin.a());
  const cplx r0 =
      amplitude / coin.b() * (lambda - delta * std::conj(lambda)) / 2.0;
  Eigenpair ep;
  ep.lambda = lambda;
  ep.dim = 2;
  // label by the nearest of the four double-root eigenvalues
  const auto ls = double_root_lambdas(coin);
  int best = 0;
  for (int k = 1; k < 4; ++k)
    if (std::abs(ls[k] - lambda) < std::abs(ls[best] - lambda)) best = k;
  ep.label = std::string("generic_k") + char('1' + best);
  ep.site_measure = 2.0 * std::norm(amplitude);
  ep.amp_at = [amplitude, r0, gamma](site_t x) -> std::vector<cplx> {
    return {amplitude * ipow(gamma, x), r0 * ipow(gamma, x - 1)};
  };
  return ep;
}

Eigenpair eigen_grover3(Grover3Case c, cplx p, cplx q) {
  Eigenpair ep;
  ep.dim = 3;
  switch (c) {
    case Grover3Case::plus:
    case Grover3Case::minus: {
      if (p == 0.0)
        throw std::invalid_argument("grover3 plus/minus requires psi0 != 0");
      const bool plus = c == Grover3Case::plus;
      ep.lambda = plus ? kGrover3LambdaPlus : kGrover3LambdaMinus;
      ep.label = plus ? "grover3_plus" : "grover3_minus";
      ep.site_measure = 4.0 * std::norm(p);
      const cplx mid = cplx{0.0, plus ? -std::numbers::sqrt2
                                      : std::numbers::sqrt2} *
                       p;
      ep.amp_at = [p, mid](site_t x) -> std::vector<cplx> {
        const double sgn = even_site(x) ? 1.0 : -1.0;
        return {sgn * p, sgn * mid, sgn * p};
      };
      break;
    }
    case Grover3Case::neg1: {
      if (p == 0.0 && q == 0.0)
        throw std::invalid_argument(
            "grover3 lambda=-1 requires a nonzero boundary pair");
      ep.lambda = -1.0;
      ep.label = "grover3_neg1";
      const cplx mid = -(p + q);
      ep.site_measure = std::norm(p) + std::norm(mid) + std::norm(q);
      ep.amp_at = [p, mid, q](site_t) -> std::vector<cplx> {
        return {p, mid, q};
      };
      break;
    }
    case Grover3Case::pos1: {
      if (p == 0.0)
        throw std::invalid_argument("grover3 lambda=1 requires psi != 0");
      ep.lambda = 1.0;
      ep.label = "grover3_pos1";
      ep.site_measure = 3.0 * std::norm(p);
      ep.amp_at = [p](site_t) -> std::vector<cplx> { return {p, p, p}; };
      break;
    }
  }
  return ep;
}

Eigenpair eigen_groverN_trivial(int n, cplx psi) {
  if (n < 2) throw std::invalid_argument("Grover walk needs N >= 2");
  if (psi == 0.0) throw std::invalid_argument("psi must be nonzero");
  Eigenpair ep;
  ep.lambda = 1.0;
  ep.dim = n;
  ep.label = "groverN_trivial";
  ep.site_measure = n * std::norm(psi);
  ep.amp_at = [n, psi](site_t) { return std::vector<cplx>(n, psi); };
  return ep;
}

WaveWindow materialize(const Eigenpair& ep, site_t lo, site_t hi) {
  if (hi < lo) throw std::invalid_argument("empty materialization range");
  WaveWindow w(ep.dim, lo, static_cast<std::size_t>(hi - lo + 1));
  for (site_t x = lo; x <= hi; ++x) {
    const std::vector<cplx> a = ep.amp_at(x);
    if (static_cast<int>(a.size()) != ep.dim)
      throw std::invalid_argument("eigenstate rule returned wrong dimension");
    std::copy(a.begin(), a.end(), w.site(x));
  }
  return w;
}

double eigen_residual(const Coin& coin, const Eigenpair& ep,
                      site_t half_width) {
  if (coin.n != ep.dim)
    throw std::invalid_argument("coin and eigenstate dimensions differ");
  const int s = coin.max_shift();
  if (half_width < s + 1)
    throw std::invalid_argument("half width must exceed the coin's reach");
  const WaveWindow psi = materialize(ep, -half_width, half_width);
  const WaveWindow next = step(coin, psi);
  double worst = 0.0;
  for (site_t x = -half_width + s; x <= half_width - s; ++x)
    for (int c = 0; c < coin.n; ++c)
      worst = std::max(worst,
                       std::abs(next.amp(x, c) - ep.lambda * psi.amp(x, c)));
  return worst;
}

double h_polynomial_discriminant(const Coin& coin, cplx lambda) {
  if (coin.n == 2) {
    const cplx d = coin.d();
    if (std::abs(d) <= kZeroTol || std::abs(coin.a()) <= kZeroTol)
      throw wrong_case_error("h(z) needs a 2x2 coin with a, d nonzero");
    const cplx b = -(lambda + coin.det2() * std::conj(lambda)) / d;
    const cplx c = coin.a() / d;
    return std::abs(b * b - 4.0 * c);
  }
  if (coin.n == 3 && is_grover_coin(coin)) {
    const cplx b = (3.0 * lambda * lambda + 4.0 * lambda + 3.0) / lambda;
    return std::abs(b * b - 4.0);
  }
  throw std::invalid_argument(
      "h discriminant is defined for 2-state coins and the 3-state Grover "
      "coin");
}

}  // namespace qwalk
