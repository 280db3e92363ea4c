// qwalk: one-dimensional discrete-time quantum walk toolkit.
//
// Subcommands: evolve, stationary, uniform-window, density, timeavg.
// Exit codes: 0 success / checks passed, 1 a numerical check failed,
// 2 invalid input.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qwalk/evolution.hpp"
#include "qwalk/io.hpp"
#include "qwalk/limits.hpp"
#include "qwalk/stationary.hpp"
#include "qwalk/uniform_window.hpp"

using namespace qwalk;
using nlohmann::json;

namespace {

// ---------------------------------------------------------------------------
// value parsing
// ---------------------------------------------------------------------------

// decimal literal, or a pi fraction: "pi", "3pi/2", "-pi/4", "0.5pi"
double parse_angle(std::string s) {
  s.erase(std::remove_if(s.begin(), s.end(), ::isspace), s.end());
  if (s.empty()) throw std::invalid_argument("empty angle");
  const std::size_t pos = s.find("pi");
  if (pos == std::string::npos) {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument("bad angle: " + s);
    return v;
  }
  double coeff = 1.0;
  std::string head = s.substr(0, pos);
  if (head == "-") coeff = -1.0;
  else if (!head.empty() && head != "+") coeff = std::stod(head);
  double divisor = 1.0;
  std::string tail = s.substr(pos + 2);
  if (!tail.empty()) {
    if (tail[0] != '/') throw std::invalid_argument("bad angle: " + s);
    divisor = std::stod(tail.substr(1));
  }
  return coeff * std::numbers::pi / divisor;
}

// "1", "-0.5", "i", "-i", "2i", "1+2i", "0.3-0.4i"
cplx parse_complex(std::string s) {
  s.erase(std::remove_if(s.begin(), s.end(), ::isspace), s.end());
  if (s.empty()) throw std::invalid_argument("empty complex literal");
  auto parse_part = [](std::string p) -> double {
    if (p.empty() || p == "+") return 1.0;
    if (p == "-") return -1.0;
    std::size_t used = 0;
    const double v = std::stod(p, &used);
    if (used != p.size()) throw std::invalid_argument("bad number: " + p);
    return v;
  };
  if (s.back() == 'i' || s.back() == 'I') {
    s.pop_back();
    // split a trailing imaginary part from an optional real head
    for (std::size_t k = s.size(); k-- > 1;) {
      if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E')
        return {parse_part(s.substr(0, k)), parse_part(s.substr(k))};
    }
    return {0.0, parse_part(s)};
  }
  return {parse_part(s), 0.0};
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

// "theta:pi/4" | "a0:eta,xi" | "b0:eta,xi" | "grover:N"
Coin parse_coin_spec(const std::string& spec) {
  const std::size_t colon = spec.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("coin spec needs kind:args, got " + spec);
  const std::string kind = spec.substr(0, colon);
  const auto args = split(spec.substr(colon + 1), ',');
  if (kind == "theta" && args.size() == 1)
    return coin_from_theta(parse_angle(args[0]));
  if (kind == "a0" && args.size() == 2)
    return coin_a_zero(parse_angle(args[0]), parse_angle(args[1]));
  if (kind == "b0" && args.size() == 2)
    return coin_b_zero(parse_angle(args[0]), parse_angle(args[1]));
  if (kind == "grover" && args.size() == 1)
    return grover_coin(std::stoi(args[0]));
  throw std::invalid_argument("unknown coin spec: " + spec);
}

// "origin:a,b[,c...]" with complex component literals
WaveWindow parse_init_spec(const std::string& spec) {
  if (spec.rfind("origin:", 0) != 0)
    throw std::invalid_argument("initial state spec must be origin:components");
  std::vector<cplx> comps;
  for (const std::string& part : split(spec.substr(7), ','))
    comps.push_back(parse_complex(part));
  if (comps.size() < 2)
    throw std::invalid_argument("origin state needs at least two components");
  return WaveWindow::delta(0, comps);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// ---------------------------------------------------------------------------
// output
// ---------------------------------------------------------------------------

struct OutSink {
  std::optional<std::ofstream> file;
  std::ostream& stream() { return file ? *file : std::cout; }
  explicit OutSink(const std::string& path) {
    if (!path.empty()) {
      file.emplace(path);
      if (!*file) throw std::invalid_argument("cannot write " + path);
    }
  }
};

void emit_measure(const std::string& out_path, bool as_json,
                  const MeasureWindow& mu, const std::string& column) {
  OutSink sink(out_path);
  if (as_json) {
    json rows = json::array();
    for (site_t x = mu.offset; x <= mu.last(); ++x)
      rows.push_back({x, mu.at(x)});
    json j;
    j[column] = rows;
    sink.stream() << j.dump() << "\n";
  } else {
    write_measure_csv(sink.stream(), mu, column);
  }
}

// ---------------------------------------------------------------------------
// stationary / uniform-window case construction
// ---------------------------------------------------------------------------

struct CaseArgs {
  std::string tag;
  std::string theta = "pi/4";
  std::string eta = "0";
  std::string xi = "pi";
  std::string sign = "plus";
  std::string lambda = "1";
  std::string amp = "1";  // --A
  std::string alpha = "1", beta = "1", gamma = "0";
  std::string psi0 = "1", psi = "1";
  std::string psi_l = "1", psi_r = "1";
  int k = 1;
  int n_states = 3;
  std::string coin_override;  // full coin spec, optional
};

std::string canonical_tag(const CaseArgs& a) {
  std::string t = a.tag;
  for (char& c : t)
    if (c == '-') c = '_';
  if (t == "generic") return "generic_k" + std::to_string(a.k);
  if (t == "a0" || t == "a_zero")
    return a.sign == "minus" ? "a_zero_minus" : "a_zero_plus";
  if (t == "b0") return "b_zero";
  if (t == "groverN" || t == "grovern" || t == "groverN_trivial" ||
      t == "grovern_trivial")
    return "groverN_trivial";
  return t;  // generic_kK, a_zero_plus, grover3_plus, ...
}

struct BuiltCase {
  Coin coin;
  Eigenpair ep;
};

// amplitude_override, when set, replaces every free amplitude parameter by
// the given scalar (used by uniform-window's auto scaling)
BuiltCase build_case(const CaseArgs& a,
                     std::optional<double> amplitude_override = {}) {
  const std::string tag = canonical_tag(a);
  auto amp_or = [&](const std::string& lit) {
    return amplitude_override ? cplx{*amplitude_override, 0.0}
                              : parse_complex(lit);
  };
  if (tag.rfind("generic_k", 0) == 0) {
    const int k = tag[9] - '0';
    if (k < 1 || k > 4)
      throw std::invalid_argument("generic case index must be 1..4");
    const Coin coin = a.coin_override.empty()
                          ? coin_from_theta(parse_angle(a.theta))
                          : parse_coin_spec(a.coin_override);
    const cplx lambda = double_root_lambdas(coin)[k - 1];
    return {coin, eigen_generic(coin, lambda, amp_or(a.amp))};
  }
  if (tag == "a_zero_plus" || tag == "a_zero_minus") {
    const double eta = parse_angle(a.eta), xi = parse_angle(a.xi);
    return {coin_a_zero(eta, xi),
            eigen_a_zero(eta, xi, tag == "a_zero_plus" ? +1 : -1,
                         amp_or(a.alpha), amp_or(a.beta))};
  }
  if (tag == "b_zero") {
    const double eta = parse_angle(a.eta), xi = parse_angle(a.xi);
    return {coin_b_zero(eta, xi),
            eigen_b_zero(eta, xi, parse_complex(a.lambda), amp_or(a.alpha),
                         amp_or(a.beta))};
  }
  if (tag == "grover3_plus" || tag == "grover3_minus")
    return {grover_coin(3),
            eigen_grover3(tag == "grover3_plus" ? Grover3Case::plus
                                                : Grover3Case::minus,
                          amp_or(a.psi0))};
  if (tag == "grover3_neg1")
    return {grover_coin(3),
            eigen_grover3(Grover3Case::neg1, parse_complex(a.psi_l),
                          parse_complex(a.psi_r))};
  if (tag == "grover3_pos1")
    return {grover_coin(3), eigen_grover3(Grover3Case::pos1, amp_or(a.psi))};
  if (tag == "groverN_trivial")
    return {grover_coin(a.n_states),
            eigen_groverN_trivial(a.n_states, amp_or(a.psi))};
  throw std::invalid_argument("unknown case tag: " + a.tag);
}

void add_case_options(CLI::App* cmd, CaseArgs& a) {
  cmd->add_option("--case", a.tag,
                  "case tag: generic, a0, b0, grover3-plus, grover3-minus, "
                  "grover3-neg1, grover3-pos1, groverN (canonical labels "
                  "also accepted)")
      ->required();
  cmd->add_option("--theta", a.theta, "coin angle for the generic case");
  cmd->add_option("--k", a.k, "which double-root eigenvalue (1..4)");
  cmd->add_option("--A", a.amp, "amplitude scale of the generic eigenstate");
  cmd->add_option("--eta", a.eta, "coin phase eta");
  cmd->add_option("--xi", a.xi, "determinant phase xi");
  cmd->add_option("--sign", a.sign, "a=0 eigenvalue sign: plus or minus");
  cmd->add_option("--lambda", a.lambda, "b=0 eigenvalue (unit complex)");
  cmd->add_option("--alpha", a.alpha, "first amplitude parameter");
  cmd->add_option("--beta", a.beta, "second amplitude parameter");
  cmd->add_option("--psi0", a.psi0, "grover3 plus/minus amplitude");
  cmd->add_option("--psiL", a.psi_l, "grover3 lambda=-1 left amplitude");
  cmd->add_option("--psiR", a.psi_r, "grover3 lambda=-1 right amplitude");
  cmd->add_option("--psi", a.psi, "uniform amplitude parameter");
  cmd->add_option("--N", a.n_states, "chirality count for groverN");
  cmd->add_option("--coin", a.coin_override,
                  "coin spec overriding --theta for the generic case");
}

// ---------------------------------------------------------------------------
// --config expansion: a JSON object mirroring the flags
// ---------------------------------------------------------------------------

std::vector<std::string> expand_config(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) {
    std::string tok = argv[i];
    std::string path;
    if (tok == "--config" && i + 1 < argc) {
      path = argv[++i];
    } else if (tok.rfind("--config=", 0) == 0) {
      path = tok.substr(9);
    } else {
      args.push_back(std::move(tok));
      continue;
    }
    const json cfg = json::parse(read_file(path));
    if (!cfg.is_object())
      throw std::invalid_argument("config must be a JSON object of flags");
    for (const auto& [key, value] : cfg.items()) {
      const std::string flag = "--" + key;
      if (value.is_boolean()) {
        if (value.get<bool>()) args.push_back(flag);
      } else if (value.is_string()) {
        args.push_back(flag);
        args.push_back(value.get<std::string>());
      } else {
        args.push_back(flag);
        args.push_back(value.dump());
      }
    }
  }
  return args;
}

// ---------------------------------------------------------------------------
// subcommand handlers
// ---------------------------------------------------------------------------

struct EvolveArgs {
  std::string coin_spec, init_spec, init_file, steps = "0", out;
  bool as_json = false;
};

int run_evolve(const EvolveArgs& a) {
  const Coin coin = a.coin_spec.rfind(".json") != std::string::npos &&
                            a.coin_spec.find(':') == std::string::npos
                        ? coin_from_json(read_file(a.coin_spec))
                        : parse_coin_spec(a.coin_spec);
  WaveWindow psi0 = a.init_file.empty() ? parse_init_spec(a.init_spec)
                                        : state_from_json(read_file(a.init_file));
  if (coin.n != psi0.dim)
    throw std::invalid_argument("coin and initial state dimensions differ");

  const auto parts = split(a.steps, ':');
  long from = 0, to = 0, stride = 1;
  if (parts.size() == 1) {
    from = to = std::stol(parts[0]);
  } else if (parts.size() == 2 || parts.size() == 3) {
    from = std::stol(parts[0]);
    to = std::stol(parts[1]);
    if (parts.size() == 3) stride = std::stol(parts[2]);
  } else {
    throw std::invalid_argument("--steps takes N or FROM:TO[:STRIDE]");
  }
  if (from < 0 || to < from || stride < 1)
    throw std::invalid_argument("bad step range");
  const bool range = parts.size() > 1;
  if (range && a.out.find("{n}") == std::string::npos)
    throw std::invalid_argument(
        "a step range needs --out with an {n} placeholder");

  WaveWindow psi = evolve(coin, psi0, from);
  for (long n = from; n <= to; n += stride) {
    std::string path = a.out;
    if (range) path.replace(path.find("{n}"), 3, std::to_string(n));
    emit_measure(path, a.as_json, phi_measure(psi), "value");
    for (long i = 0; i < stride && n + i < to; ++i) psi = step(coin, psi);
  }
  return 0;
}

struct StationaryArgs {
  CaseArgs c;
  long half_width = 100, steps = 50;
  double tol = 1e-10;
  std::string out;
};

int run_stationary(const StationaryArgs& a) {
  const BuiltCase built = build_case(a.c);
  const double residual = eigen_residual(built.coin, built.ep, a.half_width);

  WaveWindow psi = materialize(built.ep, -a.half_width, a.half_width);
  psi = evolve(built.coin, psi, a.steps);
  const MeasureWindow mu = phi_measure(psi);
  const site_t reach = a.steps * built.coin.max_shift();
  double max_dev = 0.0;
  for (site_t x = -a.half_width + reach; x <= a.half_width - reach; ++x)
    max_dev = std::max(max_dev, std::abs(mu.at(x) - built.ep.site_measure));

  json j;
  j["case"] = built.ep.label;
  j["lambda"] = {built.ep.lambda.real(), built.ep.lambda.imag()};
  j["residual"] = residual;
  j["per_site_measure"] = built.ep.site_measure;
  j["max_dev"] = max_dev;
  j["W"] = a.half_width;
  j["steps"] = a.steps;
  OutSink sink(a.out);
  sink.stream() << j.dump() << "\n";
  return residual <= a.tol && max_dev <= a.tol ? 0 : 1;
}

struct UniformWindowArgs {
  CaseArgs c;
  long m = 0;
  std::string out;
  bool as_json = false;
  double tol = 1e-10;
};

int run_uniform_window(const UniformWindowArgs& a) {
  if (a.m < 1) throw std::invalid_argument("--M must be at least 1");
  const double scale =
      amplitude_scale_for_probability(canonical_tag(a.c), a.m);
  const BuiltCase built = build_case(a.c, scale);
  const UniformWindowReport rep =
      uniform_probability_check(built.coin, built.ep, a.m);
  emit_measure(a.out, a.as_json, rep.mu, "mu_M");
  json j;
  j["M"] = rep.m;
  j["max_dev"] = rep.max_dev;
  j["interval_mass"] = rep.interval_mass;
  std::cout << j.dump() << "\n";
  return rep.max_dev <= a.tol ? 0 : 1;
}

struct DensityArgs {
  std::string model = "konno";
  std::string theta = "pi/4";
  std::string alpha = "1", beta = "0", gamma = "0";
  long grid = 0;
  long xmax = 20;
  long compare = 0;
  std::string out;
  bool as_json = false;
};

int run_density(const DensityArgs& a) {
  cplx alpha = parse_complex(a.alpha), beta = parse_complex(a.beta),
       gamma = parse_complex(a.gamma);
  const bool grover = a.model.rfind("grover3", 0) == 0;
  double norm2 = std::norm(alpha) + std::norm(beta);
  if (grover) norm2 += std::norm(gamma);
  if (std::abs(norm2 - 1.0) > 1e-9)
    throw std::invalid_argument("initial amplitudes must have unit norm");
  const double rescale = 1.0 / std::sqrt(norm2);
  alpha *= rescale;
  beta *= rescale;
  gamma *= rescale;

  Coin coin = grover ? grover_coin(3) : coin_from_theta(parse_angle(a.theta));
  DensityModel model =
      a.model == "konno"
          ? DensityModel::konno(coin.a(), coin.b(), alpha, beta)
      : a.model == "grover3" ? DensityModel::grover3(alpha, beta, gamma)
      : a.model == "grover3-loc" || a.model == "grover3_localization"
          ? DensityModel::grover3_loc(alpha, beta, gamma)
          : throw std::invalid_argument("unknown model: " + a.model);

  OutSink sink(a.out);
  char buf[80];
  if (model.kind == DensityModel::Kind::grover3_localization) {
    if (a.xmax < 1) throw std::invalid_argument("--xmax must be at least 1");
    MeasureWindow grid_mu;
    grid_mu.offset = -a.xmax;
    for (site_t x = -a.xmax; x <= a.xmax; ++x)
      grid_mu.values.push_back(grover3_localization(x, alpha, beta, gamma));
    emit_measure(a.out, a.as_json, grid_mu, "f");
  } else {
    if (a.grid < 1) throw std::invalid_argument("--grid must be at least 1");
    if (a.as_json) {
      json rows = json::array();
      for (long i = 0; i <= a.grid; ++i) {
        const double x = model.r * (2.0 * i - a.grid) / a.grid;
        rows.push_back({x, model_density(model, x)});
      }
      json j;
      j["f"] = rows;
      sink.stream() << j.dump() << "\n";
    } else {
      sink.stream() << "x,f\n";
      for (long i = 0; i <= a.grid; ++i) {
        const double x = model.r * (2.0 * i - a.grid) / a.grid;
        std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", x,
                      model_density(model, x));
        sink.stream() << buf;
      }
    }
  }

  json summary;
  bool have_summary = false;
  if (grover) {
    summary["delta_mass"] = grover3_delta_mass(alpha, beta, gamma);
    have_summary = true;
  }
  if (a.compare > 0) {
    std::vector<cplx> comps = {alpha, beta};
    if (grover) comps.push_back(gamma);
    const WaveWindow psi0 = WaveWindow::delta(0, comps);
    summary["delta_mass"] = grover ? grover3_delta_mass(alpha, beta, gamma)
                                   : 0.0;
    summary["n"] = a.compare;
    if (model.kind == DensityModel::Kind::grover3_localization) {
      // site-wise comparison, two-step averaged against parity oscillation
      const WaveWindow psi = evolve(coin, psi0, a.compare);
      const MeasureWindow m0 = phi_measure(psi);
      const MeasureWindow m1 = phi_measure(step(coin, psi));
      double dev = 0.0;
      for (site_t x = -3; x <= 3; ++x)
        dev = std::max(dev, std::abs(0.5 * (m0.at(x) + m1.at(x)) -
                                     grover3_localization(x, alpha, beta,
                                                          gamma)));
      summary["max_dev"] = dev;
    } else {
      summary["ks_distance"] = empirical_vs_density(coin, psi0, a.compare,
                                                    model);
    }
    have_summary = true;
  }
  if (have_summary) std::cout << summary.dump() << "\n";
  return 0;
}

struct TimeavgArgs {
  std::string coin_spec, init_spec, init_file, out;
  long t_steps = 1;
  bool as_json = false;
};

int run_timeavg(const TimeavgArgs& a) {
  const Coin coin = parse_coin_spec(a.coin_spec);
  const WaveWindow psi0 = a.init_file.empty()
                              ? parse_init_spec(a.init_spec)
                              : state_from_json(read_file(a.init_file));
  if (a.t_steps < 1) throw std::invalid_argument("--T must be at least 1");
  const MeasureWindow avg = time_averaged_measure(coin, psi0, a.t_steps);
  emit_measure(a.out, a.as_json, avg, "value");
  json j;
  j["T"] = a.t_steps;
  j["total_mass"] = avg.total();
  std::cout << j.dump() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"one-dimensional discrete-time quantum walk toolkit"};
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

  EvolveArgs ev;
  CLI::App* evolve_cmd =
      app.add_subcommand("evolve", "evolve a state and emit the measure");
  evolve_cmd->add_option("--coin", ev.coin_spec,
                         "coin spec (theta:T, a0:eta,xi, b0:eta,xi, "
                         "grover:N) or a coin JSON file")
      ->required();
  evolve_cmd->add_option("--init", ev.init_spec,
                         "initial state: origin:components");
  evolve_cmd->add_option("--init-file", ev.init_file,
                         "initial state JSON file");
  evolve_cmd->add_option("--steps", ev.steps, "step count N or FROM:TO[:STRIDE]")
      ->required();
  evolve_cmd->add_option("--out", ev.out, "output CSV path ({n} for ranges)");
  evolve_cmd->add_flag("--json", ev.as_json, "emit JSON instead of CSV");

  StationaryArgs st;
  CLI::App* stationary_cmd = app.add_subcommand(
      "stationary", "build an eigenstate and verify stationarity");
  add_case_options(stationary_cmd, st.c);
  stationary_cmd->add_option("--W", st.half_width, "materialization half width");
  stationary_cmd->add_option("--steps", st.steps, "evolution steps to check");
  stationary_cmd->add_option("--tol", st.tol, "pass/fail tolerance");
  stationary_cmd->add_option("--out", st.out, "write the JSON report here");

  UniformWindowArgs uw;
  CLI::App* uniform_cmd = app.add_subcommand(
      "uniform-window",
      "truncate an eigenstate to |x| <= 2M, evolve M steps, check "
      "uniformity on [-M, M]");
  add_case_options(uniform_cmd, uw.c);
  uniform_cmd->add_option("--M", uw.m, "window parameter")->required();
  uniform_cmd->add_option("--out", uw.out, "output CSV path");
  uniform_cmd->add_flag("--json", uw.as_json, "emit JSON instead of CSV");
  uniform_cmd->add_option("--tol", uw.tol, "pass/fail tolerance");

  DensityArgs de;
  CLI::App* density_cmd = app.add_subcommand(
      "density", "evaluate a closed-form limit density on a grid");
  density_cmd->add_option("--model", de.model,
                          "konno, grover3, or grover3-loc")
      ->required();
  density_cmd->add_option("--theta", de.theta, "coin angle (konno model)");
  density_cmd->add_option("--alpha", de.alpha, "initial amplitude");
  density_cmd->add_option("--beta", de.beta, "initial amplitude");
  density_cmd->add_option("--gamma", de.gamma, "initial amplitude (grover3)");
  density_cmd->add_option("--grid", de.grid, "grid cell count");
  density_cmd->add_option("--xmax", de.xmax, "site range for grover3-loc");
  density_cmd->add_option("--compare", de.compare,
                          "also simulate to time N and report the distance");
  density_cmd->add_option("--out", de.out, "output CSV path");
  density_cmd->add_flag("--json", de.as_json, "emit JSON instead of CSV");

  TimeavgArgs ta;
  CLI::App* timeavg_cmd = app.add_subcommand(
      "timeavg", "partial time average (1/T) sum of mu_n, n < T");
  timeavg_cmd->add_option("--coin", ta.coin_spec, "coin spec")->required();
  timeavg_cmd->add_option("--init", ta.init_spec, "initial state");
  timeavg_cmd->add_option("--init-file", ta.init_file,
                          "initial state JSON file");
  timeavg_cmd->add_option("--T", ta.t_steps, "number of times averaged")
      ->required();
  timeavg_cmd->add_option("--out", ta.out, "output CSV path");
  timeavg_cmd->add_flag("--json", ta.as_json, "emit JSON instead of CSV");

  std::vector<std::string> args;
  try {
    args = expand_config(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(evolve_cmd)) return run_evolve(ev);
    if (app.got_subcommand(stationary_cmd)) return run_stationary(st);
    if (app.got_subcommand(uniform_cmd)) return run_uniform_window(uw);
    if (app.got_subcommand(density_cmd)) return run_density(de);
    if (app.got_subcommand(timeavg_cmd)) return run_timeavg(ta);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
