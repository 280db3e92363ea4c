#include "qwalk/coin.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include <json.hpp>

namespace qwalk {

std::vector<int> standard_shifts(int n) {
  if (n < 2) throw std::invalid_argument("coin size must be at least 2");
  std::vector<int> s(n);
  const int m = n / 2;
  if (n % 2 == 1) {
    for (int k = 0; k < n; ++k) s[k] = -m + k;
  } else {
    // even N skips displacement 0
    for (int k = 0; k < m; ++k) s[k] = -m + k;
    for (int k = m; k < n; ++k) s[k] = -m + k + 1;
  }
  return s;
}

int Coin::max_shift() const {
  int s = 0;
  for (int v : shifts) s = std::max(s, std::abs(v));
  return s;
}

cplx Coin::det2() const {
  if (n != 2) throw std::invalid_argument("det2 is defined for 2x2 coins");
  return entries[0] * entries[3] - entries[1] * entries[2];
}

namespace {

cplx expi(double t) { return {std::cos(t), std::sin(t)}; }

Coin make(int n, std::vector<cplx> entries, std::string kind, double p0 = 0.0,
          double p1 = 0.0) {
  Coin c;
  c.n = n;
  c.entries = std::move(entries);
  c.shifts = standard_shifts(n);
  c.kind = std::move(kind);
  c.p0 = p0;
  c.p1 = p1;
  return c;
}

}  // namespace

Coin coin_from_theta(double theta) {
  const double ct = std::cos(theta), st = std::sin(theta);
  return make(2, {ct, st, st, -ct}, "theta", theta);
}

Coin coin_a_zero(double eta, double xi) {
  return make(2, {0.0, expi(eta), -expi(xi) * expi(-eta), 0.0}, "a_zero", eta,
              xi);
}

Coin coin_b_zero(double eta, double xi) {
  return make(2, {expi(eta), 0.0, 0.0, expi(xi) * expi(-eta)}, "b_zero", eta,
              xi);
}

Coin grover_coin(int n) {
  if (n < 2) throw std::invalid_argument("Grover coin needs N >= 2");
  std::vector<cplx> e(static_cast<std::size_t>(n) * n, 2.0 / n);
  for (int i = 0; i < n; ++i) e[i * n + i] = (2.0 - n) / n;
  return make(n, std::move(e), "grover", n);
}

Coin coin_explicit(int n, std::vector<cplx> entries) {
  if (n < 2) throw std::invalid_argument("coin size must be at least 2");
  if (entries.size() != static_cast<std::size_t>(n) * n)
    throw std::invalid_argument("explicit coin needs N*N entries");
  Coin c = make(n, std::move(entries), "explicit");
  if (!check_unitary(c, 1e-12))
    throw std::invalid_argument("explicit coin entries are not unitary");
  return c;
}

bool check_unitary(const Coin& coin, double tol) {
  if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
  const int n = coin.n;
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      cplx s = 0.0;
      for (int k = 0; k < n; ++k)
        s += coin.entry(i, k) * std::conj(coin.entry(j, k));
      if (i == j) s -= 1.0;
      worst = std::max(worst, std::abs(s));
    }
  }
  return worst <= tol;
}

bool is_grover_coin(const Coin& coin, double tol) {
  const int n = coin.n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double want = (i == j) ? 2.0 / n - 1.0 : 2.0 / n;
      if (std::abs(coin.entry(i, j) - want) > tol) return false;
    }
  return true;
}

std::string coin_to_json(const Coin& coin) {
  nlohmann::json j;
  j["kind"] = coin.kind;
  if (coin.kind == "theta") {
    j["theta"] = coin.p0;
  } else if (coin.kind == "a_zero" || coin.kind == "b_zero") {
    j["eta"] = coin.p0;
    j["xi"] = coin.p1;
  } else if (coin.kind == "grover") {
    j["size"] = coin.n;
  } else {
    j["size"] = coin.n;
    nlohmann::json rows = nlohmann::json::array();
    for (const cplx& e : coin.entries)
      rows.push_back({e.real(), e.imag()});
    j["entries"] = rows;
  }
  return j.dump();
}

Coin coin_from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "theta") return coin_from_theta(j.at("theta").get<double>());
  if (kind == "a_zero")
    return coin_a_zero(j.at("eta").get<double>(), j.at("xi").get<double>());
  if (kind == "b_zero")
    return coin_b_zero(j.at("eta").get<double>(), j.at("xi").get<double>());
  if (kind == "grover") return grover_coin(j.at("size").get<int>());
  if (kind == "explicit") {
    const int n = j.at("size").get<int>();
    std::vector<cplx> entries;
    for (const auto& pair : j.at("entries"))
      entries.emplace_back(pair.at(0).get<double>(), pair.at(1).get<double>());
    return coin_explicit(n, std::move(entries));
  }
  throw std::invalid_argument("unknown coin kind: " + kind);
}

}  // namespace qwalk
