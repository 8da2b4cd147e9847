#include "nomaee/errors.hpp"

#include <sstream>

namespace nomaee {
namespace {

std::string infeasible_message(double min_power_w, double budget_w) {
  std::ostringstream os;
  os << "rate floors need at least " << min_power_w
     << " W of transmit power but the budget is " << budget_w << " W";
  return os.str();
}

std::string theta_message(double theta, double theta_min) {
  std::ostringstream os;
  os << "power ratio " << theta << " is below the feasibility floor "
     << theta_min;
  return os.str();
}

}  // namespace

InfeasibleError::InfeasibleError(double min_power_w, double budget_w)
    : std::runtime_error(infeasible_message(min_power_w, budget_w)),
      min_power_w_(min_power_w),
      budget_w_(budget_w) {}

InfeasibleThetaError::InfeasibleThetaError(double theta, double theta_min)
    : std::runtime_error(theta_message(theta, theta_min)),
      theta_(theta),
      theta_min_(theta_min) {}

}  // namespace nomaee
