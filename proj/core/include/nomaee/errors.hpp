#pragma once

#include <stdexcept>
#include <string>

namespace nomaee {

/// Malformed caller input (empty lists, negative rates, nonpositive powers...).
class InvalidInputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The rate requirements cannot be met within the power budget.
class InfeasibleError : public std::runtime_error {
 public:
  InfeasibleError(double min_power_w, double budget_w);

  double min_power_w() const { return min_power_w_; }
  double budget_w() const { return budget_w_; }

 private:
  double min_power_w_;
  double budget_w_;
};

/// A power ratio below the feasibility floor was requested.
class InfeasibleThetaError : public std::runtime_error {
 public:
  InfeasibleThetaError(double theta, double theta_min);

  double theta() const { return theta_; }
  double theta_min() const { return theta_min_; }

 private:
  double theta_;
  double theta_min_;
};

/// An iterative solver hit its iteration cap before reaching tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A structural guarantee the solvers rely on was observed to fail.
class InternalInvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace nomaee
