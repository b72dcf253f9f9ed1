#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <stdexcept>
#include <string>

#include "elastics/displacement.hpp"
#include "elastics/errors.hpp"
#include "elastics/relaxation.hpp"
#include "elastics/specfun.hpp"
#include "elastics/vibration.hpp"

namespace py = pybind11;
using namespace elastics;

namespace {

specfun::BesselKind kind_from(const std::string& s) {
  if (s == "J") return specfun::BesselKind::J;
  if (s == "Y") return specfun::BesselKind::Y;
  if (s == "I") return specfun::BesselKind::I;
  if (s == "K") return specfun::BesselKind::K;
  throw InvalidArgument("Bessel kind must be J, Y, I or K");
}

py::tuple as_tuple(const Displacement& u) { return py::make_tuple(u.u_r, u.u_theta, u.u_z); }

}  // namespace

PYBIND11_MODULE(_elastics, m) {
  m.doc() = "Closed-form elastodynamic fields of a solid cylinder.";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<InvalidArgument>(m, "InvalidArgument", base.ptr());
  py::register_exception<NoSolution>(m, "NoSolution", base.ptr());
  py::register_exception<NotClosedForm>(m, "NotClosedForm", base.ptr());
  py::register_exception<IllConditioned>(m, "IllConditioned", base.ptr());
  py::register_exception<IncompatibleEndData>(m, "IncompatibleEndData", base.ptr());
  py::register_exception<AxisSingularity>(m, "AxisSingularity", base.ptr());
  py::register_exception<DomainError>(m, "DomainError", base.ptr());

  m.def("bessel", [](const std::string& k, int n, double x) { return specfun::bessel(kind_from(k), n, x); },
        py::arg("kind"), py::arg("n"), py::arg("x"));
  m.def("bessel_deriv",
        [](const std::string& k, int n, double x) { return specfun::bessel_deriv(kind_from(k), n, x); },
        py::arg("kind"), py::arg("n"), py::arg("x"));
  m.def("j1_zero", &specfun::j1_zero, py::arg("m"));

  py::class_<Material>(m, "Material")
      .def(py::init<double, double, double>(), py::arg("lam"), py::arg("mu"), py::arg("rho"))
      .def_property_readonly("lam", &Material::lambda)
      .def_property_readonly("mu", &Material::mu)
      .def_property_readonly("rho", &Material::rho);

  py::class_<vibration::VibrationProblem>(m, "VibrationProblem")
      .def(py::init([](const Material& mat, double L, double R, double amplitude, int k, double omega,
                       bool force_free) {
             vibration::VibrationProblem p{mat, L, R, amplitude, k, omega, force_free};
             p.validate();
             return p;
           }),
           py::arg("material"), py::arg("L"), py::arg("R"), py::arg("amplitude"), py::arg("k"), py::arg("omega"),
           py::arg("force_free") = false)
      .def_property_readonly("wavenumber", &vibration::VibrationProblem::wavenumber)
      .def_readonly("omega", &vibration::VibrationProblem::omega);

  py::class_<vibration::VibrationSolution>(m, "VibrationSolution")
      .def_property_readonly("case", [](const vibration::VibrationSolution& s) { return to_string(s.case_class.tag); })
      .def_readonly("a_bar_1", &vibration::VibrationSolution::a_bar_1)
      .def_readonly("a_bar_2", &vibration::VibrationSolution::a_bar_2)
      .def_readonly("free_param_C", &vibration::VibrationSolution::free_param_C)
      .def("displacement",
           [](const vibration::VibrationSolution& s, double r, double theta, double z, double t) {
             return as_tuple(displacement(s.family, r, theta, z, t));
           },
           py::arg("r"), py::arg("theta"), py::arg("z"), py::arg("t"))
      .def("vol_strain",
           [](const vibration::VibrationSolution& s, double r, double z, double t) {
             return axisym_strain(s.family, r, z, t).vol_strain;
           },
           py::arg("r"), py::arg("z"), py::arg("t"));

  m.def("classify", [](const vibration::VibrationProblem& p) { return to_string(vibration::classify(p).tag); });
  m.def(
      "solve_vibration",
      [](const vibration::VibrationProblem& p, std::optional<double> case4_C) {
        vibration::SolveOptions o;
        o.case4_C = case4_C;
        return vibration::solve(p, o);
      },
      py::arg("problem"), py::arg("case4_C") = py::none());

  m.def(
      "relaxation_amplitude",
      [](const Material& mat, double L, double R, double amplitude, double k, double b, double c, double T) {
        relaxation::RelaxationProblem p{mat, L, R, amplitude, k, b, c, T, relaxation::EndVariant::StressEnds, {}};
        p.end_data = relaxation::expected_end_data(p);
        return relaxation::solve(p).amplitude_T;
      },
      py::arg("material"), py::arg("L"), py::arg("R"), py::arg("amplitude"), py::arg("k"), py::arg("b"),
      py::arg("c"), py::arg("T"));
}
