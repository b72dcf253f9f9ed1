#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace elastics {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// specfun
class DomainError : public Error {
 public:
  using Error::Error;
};

class OrderOverflow : public Error {
 public:
  using Error::Error;
};

class RangeError : public Error {
 public:
  using Error::Error;
};

// core_model / potentials
class KappaZero : public Error {
 public:
  KappaZero() : Error("kappa == 0: use the decoupled (kappa = 0) branch") {}
};

class KappaZeroNotAllowed : public Error {
 public:
  KappaZeroNotAllowed()
      : Error("kappa == 0 requires the linear axial branch (allow_linear)") {}
};

class TauZero : public Error {
 public:
  TauZero() : Error("tau must be nonzero") {}
};

class NonIntegerOrder : public Error {
 public:
  explicit NonIntegerOrder(double eta_theta)
      : Error("periodic angular part requested but sqrt(eta_theta) is not an "
              "integer (eta_theta = " +
              std::to_string(eta_theta) + ")"),
        eta_theta_(eta_theta) {}
  double eta_theta() const { return eta_theta_; }

 private:
  double eta_theta_;
};

// displacement_fields
class AxisSingularity : public Error {
 public:
  AxisSingularity()
      : Error("field is singular on the axis r = 0 (Y, K, ln r or r^-n term "
              "with nonzero coefficient)") {}
};

class NotAxisymmetric : public Error {
 public:
  NotAxisymmetric()
      : Error("stress and strain are only available for axisymmetric (n = 0) "
              "families") {}
};

// boundary-value problems
class IllConditioned : public Error {
 public:
  IllConditioned(std::string what, double denominator)
      : Error(std::move(what)), denominator_(denominator) {}
  double denominator() const { return denominator_; }

 private:
  double denominator_;
};

class NoSolution : public Error {
 public:
  NoSolution(std::string what, std::vector<std::string> equations)
      : Error(std::move(what)), equations_(std::move(equations)) {}
  const std::vector<std::string>& equations() const { return equations_; }

 private:
  std::vector<std::string> equations_;
};

class LambdaZeroExcluded : public Error {
 public:
  LambdaZeroExcluded()
      : Error("lambda == 0 gives gamma_2 = -1 solutions, excluded for "
              "classical linear elasticity") {}
};

class MissingFreeParameter : public Error {
 public:
  MissingFreeParameter()
      : Error("Case 4(ii) is underdetermined: a free parameter C is required") {}
};

class CaseNotCovered : public Error {
 public:
  using Error::Error;
};

class NotClosedForm : public Error {
 public:
  using Error::Error;
};

class IncompatibleEndData : public Error {
 public:
  IncompatibleEndData(std::string what, std::vector<std::string> violated)
      : Error(std::move(what)), violated_(std::move(violated)) {}
  const std::vector<std::string>& violated() const { return violated_; }

 private:
  std::vector<std::string> violated_;
};

// verification
class DomainTooSmall : public Error {
 public:
  using Error::Error;
};

}  // namespace elastics
