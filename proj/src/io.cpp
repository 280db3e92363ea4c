#include "qwalk/io.hpp"

#include <cstdio>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

namespace qwalk {

std::string state_to_json(const WaveWindow& psi) {
  nlohmann::json j;
  j["offset"] = psi.offset;
  nlohmann::json sites = nlohmann::json::array();
  for (std::size_t i = 0; i < psi.site_count(); ++i) {
    nlohmann::json comps = nlohmann::json::array();
    for (int c = 0; c < psi.dim; ++c) {
      const cplx& a = psi.amps[i * psi.dim + c];
      comps.push_back({a.real(), a.imag()});
    }
    sites.push_back(std::move(comps));
  }
  j["amps"] = std::move(sites);
  return j.dump();
}

WaveWindow state_from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  const auto& sites = j.at("amps");
  if (!sites.is_array() || sites.empty())
    throw std::invalid_argument("state needs a non-empty amps array");
  const int dim = static_cast<int>(sites.front().size());
  if (dim < 1) throw std::invalid_argument("state sites need components");
  WaveWindow w(dim, j.at("offset").get<site_t>(), sites.size());
  std::size_t i = 0;
  for (const auto& comps : sites) {
    if (static_cast<int>(comps.size()) != dim)
      throw std::invalid_argument("inconsistent component count across sites");
    for (int c = 0; c < dim; ++c)
      w.amps[i * dim + c] = {comps[c].at(0).get<double>(),
                             comps[c].at(1).get<double>()};
    ++i;
  }
  return w;
}

void write_measure_csv(std::ostream& os, const MeasureWindow& mu,
                       const std::string& column, double trim_below) {
  std::size_t lo = 0, hi = mu.values.size();
  while (lo < hi && mu.values[lo] < trim_below) ++lo;
  while (hi > lo && mu.values[hi - 1] < trim_below) --hi;
  os << "x," << column << "\n";
  char buf[64];
  for (std::size_t i = lo; i < hi; ++i) {
    std::snprintf(buf, sizeof buf, "%lld,%.17g",
                  static_cast<long long>(mu.offset + static_cast<site_t>(i)),
                  mu.values[i]);
    os << buf << "\n";
  }
}

}  // namespace qwalk
