#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qwalk/errors.hpp"
#include "qwalk/evolution.hpp"
#include "qwalk/io.hpp"
#include "qwalk/limits.hpp"
#include "qwalk/stationary.hpp"
#include "qwalk/uniform_window.hpp"

namespace py = pybind11;
using namespace qwalk;

PYBIND11_MODULE(_core, m) {
  m.doc() = "one-dimensional discrete-time quantum walks: evolution, "
            "stationary eigenstates, uniform windows, and limit measures";

  py::register_exception<wrong_case_error>(m, "WrongCaseError",
                                           PyExc_ValueError);
  py::register_exception<degenerate_input_error>(m, "DegenerateInputError",
                                                 PyExc_ValueError);

  py::class_<Coin>(m, "Coin")
      .def_readonly("n", &Coin::n)
      .def_readonly("kind", &Coin::kind)
      .def_readonly("shifts", &Coin::shifts)
      .def("entry", &Coin::entry)
      .def_property_readonly("entries",
                             [](const Coin& c) { return c.entries; })
      .def("max_shift", &Coin::max_shift)
      .def("to_json", &coin_to_json)
      .def_static("from_json", &coin_from_json)
      .def("__repr__", [](const Coin& c) {
        return "<Coin " + c.kind + " n=" + std::to_string(c.n) + ">";
      });

  m.def("coin_from_theta", &coin_from_theta, py::arg("theta"));
  m.def("coin_a_zero", &coin_a_zero, py::arg("eta"), py::arg("xi"));
  m.def("coin_b_zero", &coin_b_zero, py::arg("eta"), py::arg("xi"));
  m.def("grover_coin", &grover_coin, py::arg("n"));
  m.def("coin_explicit", &coin_explicit, py::arg("n"), py::arg("entries"));
  m.def("check_unitary", &check_unitary, py::arg("coin"), py::arg("tol"));

  py::class_<WaveWindow>(m, "WaveWindow")
      .def(py::init([](int dim, site_t offset,
                       const std::vector<cplx>& amps) {
             if (dim < 1 || amps.size() % dim != 0 || amps.empty())
               throw std::invalid_argument(
                   "amps length must be a positive multiple of dim");
             WaveWindow w(dim, offset, amps.size() / dim);
             w.amps = amps;
             return w;
           }),
           py::arg("dim"), py::arg("offset"), py::arg("amps"))
      .def_static("delta", &WaveWindow::delta, py::arg("x"),
                  py::arg("components"))
      .def_readonly("dim", &WaveWindow::dim)
      .def_readonly("offset", &WaveWindow::offset)
      .def_property_readonly("amps",
                             [](const WaveWindow& w) { return w.amps; })
      .def("site_count", &WaveWindow::site_count)
      .def("amp", py::overload_cast<site_t, int>(&WaveWindow::amp, py::const_),
           py::arg("x"), py::arg("component"))
      .def("squared_norm", &WaveWindow::squared_norm)
      .def("to_json", &state_to_json)
      .def_static("from_json", &state_from_json);

  py::class_<MeasureWindow>(m, "MeasureWindow")
      .def_readonly("offset", &MeasureWindow::offset)
      .def_property_readonly(
          "values", [](const MeasureWindow& m_) { return m_.values; })
      .def("at", &MeasureWindow::at, py::arg("x"))
      .def("total", &MeasureWindow::total)
      .def("to_dict", [](const MeasureWindow& m_) {
        py::dict d;
        for (site_t x = m_.offset; x <= m_.last(); ++x)
          d[py::int_(x)] = m_.at(x);
        return d;
      });

  m.def("phi_measure", &phi_measure, py::arg("psi"));
  m.def("split_coin", [](const Coin& c) {
    std::vector<std::pair<int, std::vector<cplx>>> parts;
    for (const CoinPart& p : split_coin(c))
      parts.emplace_back(p.shift, p.matrix);
    return parts;
  });
  m.def("step", &step, py::arg("coin"), py::arg("psi"));
  m.def("evolve", &evolve, py::arg("coin"), py::arg("psi"), py::arg("n"));
  m.def("measure_at", &measure_at, py::arg("coin"), py::arg("psi0"),
        py::arg("n"));
  m.def("time_averaged_measure", &time_averaged_measure, py::arg("coin"),
        py::arg("psi0"), py::arg("T"));
  m.def("normalized_distribution", &normalized_distribution, py::arg("mu"));

  py::class_<Eigenpair>(m, "Eigenpair")
      .def_readonly("lambda_", &Eigenpair::lambda)
      .def_readonly("dim", &Eigenpair::dim)
      .def_readonly("label", &Eigenpair::label)
      .def_readonly("site_measure", &Eigenpair::site_measure)
      .def("amp_at",
           [](const Eigenpair& ep, site_t x) { return ep.amp_at(x); },
           py::arg("x"))
      .def("__repr__", [](const Eigenpair& ep) {
        return "<Eigenpair " + ep.label + ">";
      });

  m.def("eigen_a_zero", &eigen_a_zero, py::arg("eta"), py::arg("xi"),
        py::arg("sign"), py::arg("alpha"), py::arg("beta"));
  m.def("eigen_b_zero", &eigen_b_zero, py::arg("eta"), py::arg("xi"),
        py::arg("lambda_"), py::arg("alpha"), py::arg("beta"));
  m.def("double_root_lambdas", &double_root_lambdas, py::arg("coin"));
  m.def("gamma_of", &gamma_of, py::arg("coin"), py::arg("lambda_"));
  m.def("eigen_generic", &eigen_generic, py::arg("coin"), py::arg("lambda_"),
        py::arg("amplitude"));

  py::enum_<Grover3Case>(m, "Grover3Case")
      .value("plus", Grover3Case::plus)
      .value("minus", Grover3Case::minus)
      .value("neg1", Grover3Case::neg1)
      .value("pos1", Grover3Case::pos1);
  m.def("eigen_grover3", &eigen_grover3, py::arg("case_"), py::arg("p"),
        py::arg("q") = cplx{0.0, 0.0});
  m.def("eigen_groverN_trivial", &eigen_groverN_trivial, py::arg("n"),
        py::arg("psi"));
  m.def("materialize", &materialize, py::arg("eigenpair"), py::arg("lo"),
        py::arg("hi"));
  m.def("eigen_residual", &eigen_residual, py::arg("coin"),
        py::arg("eigenpair"), py::arg("half_width"));
  m.def("h_polynomial_discriminant", &h_polynomial_discriminant,
        py::arg("coin"), py::arg("lambda_"));

  m.def("truncated_initial_state", &truncated_initial_state,
        py::arg("eigenpair"), py::arg("m"));
  m.def("amplitude_scale_for_probability", &amplitude_scale_for_probability,
        py::arg("label"), py::arg("m"));
  py::class_<UniformWindowReport>(m, "UniformWindowReport")
      .def_readonly("m", &UniformWindowReport::m)
      .def_readonly("max_dev", &UniformWindowReport::max_dev)
      .def_readonly("interval_mass", &UniformWindowReport::interval_mass)
      .def_readonly("outside_mass", &UniformWindowReport::outside_mass)
      .def_readonly("mu", &UniformWindowReport::mu);
  m.def("uniform_probability_check", &uniform_probability_check,
        py::arg("coin"), py::arg("eigenpair"), py::arg("m"));

  m.def("f_K", &f_K, py::arg("x"), py::arg("r"));
  m.def("konno_C", &konno_C, py::arg("a"), py::arg("b"), py::arg("alpha"),
        py::arg("beta"));
  py::class_<DensityModel> dm(m, "DensityModel");
  py::enum_<DensityModel::Kind>(dm, "Kind")
      .value("two_state_konno", DensityModel::Kind::two_state_konno)
      .value("grover3_weak", DensityModel::Kind::grover3_weak)
      .value("grover3_localization",
             DensityModel::Kind::grover3_localization);
  dm.def_readonly("kind", &DensityModel::kind)
      .def_readonly("r", &DensityModel::r)
      .def_readonly("C", &DensityModel::C)
      .def_readonly("delta_mass", &DensityModel::delta_mass)
      .def_readonly("c0", &DensityModel::c0)
      .def_readonly("c1", &DensityModel::c1)
      .def_readonly("c2", &DensityModel::c2)
      .def_static("konno", &DensityModel::konno, py::arg("a"), py::arg("b"),
                  py::arg("alpha"), py::arg("beta"))
      .def_static("grover3", &DensityModel::grover3, py::arg("alpha"),
                  py::arg("beta"), py::arg("gamma"))
      .def_static("grover3_loc", &DensityModel::grover3_loc, py::arg("alpha"),
                  py::arg("beta"), py::arg("gamma"));
  m.def("two_state_limit_density", &two_state_limit_density, py::arg("model"),
        py::arg("x"));
  m.def("grover3_localization", &grover3_localization, py::arg("x"),
        py::arg("alpha"), py::arg("beta"), py::arg("gamma"));
  m.def("grover3_delta_mass", &grover3_delta_mass, py::arg("alpha"),
        py::arg("beta"), py::arg("gamma"));
  m.def("grover3_weak_density", &grover3_weak_density, py::arg("x"),
        py::arg("alpha"), py::arg("beta"), py::arg("gamma"));
  m.def("model_density", &model_density, py::arg("model"), py::arg("x"));
  m.def("model_cdf", &model_cdf, py::arg("model"), py::arg("t"));
  m.def("a_zero_closed_forms", [](cplx alpha, cplx beta) {
    const AZeroClosedForms f = a_zero_closed_forms(alpha, beta);
    return py::make_tuple(f.time_avg, f.weak_limit);
  });
  m.def("b_zero_closed_forms", &b_zero_closed_forms, py::arg("alpha"),
        py::arg("beta"), py::arg("n"));
  m.def("b_zero_weak_limit", &b_zero_weak_limit, py::arg("alpha"),
        py::arg("beta"));
  m.def("ks_distance", &ks_distance, py::arg("mu_n"), py::arg("n"),
        py::arg("atoms"), py::arg("density"), py::arg("lo"), py::arg("hi"));
  m.def("empirical_vs_density", &empirical_vs_density, py::arg("coin"),
        py::arg("psi0"), py::arg("n"), py::arg("model"));

  m.attr("__version__") = "0.1.0";
}
