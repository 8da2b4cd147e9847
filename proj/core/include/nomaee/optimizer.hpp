#pragma once

#include "nomaee/allocation.hpp"
#include "nomaee/qos.hpp"
#include "nomaee/system_model.hpp"

namespace nomaee {

struct OptimizerConfig {
  double theta_tolerance = 1e-10;       // bisection interval width target
  int max_iterations = 200;
  double dinkelbach_tolerance = 1e-10;  // subtractive-objective stop threshold
};

/// Where the maximizer landed relative to the feasible interval.
enum class Boundary {
  InteriorRoot,  // derivative sign change bracketed and bisected
  ClampedLow,    // EE nonincreasing from theta_min
  ClampedHigh,   // EE nondecreasing up to theta = 1
};

const char* boundary_name(Boundary b);

struct Optimum {
  double theta_star = 0.0;
  Allocation allocation;
  Boundary boundary = Boundary::InteriorRoot;
  int iterations = 0;
};

/// Maximizes EE(theta) on [theta_min, 1] by bisecting the derivative sign.
/// EE is strictly pseudo-concave there, so the derivative changes sign at
/// most once and the root, when bracketed, is the global maximizer.
/// Throws InfeasibleError when the budget cannot meet the rate floors.
Optimum maximize_ee(const ChannelState& channel, const SystemParams& params,
                    const QosProfile& qos, const OptimizerConfig& config = {});

/// Full-power allocation (theta = 1): maximizes spectral efficiency.
Allocation max_se_allocation(const ChannelState& channel,
                             const SystemParams& params, const QosProfile& qos);

/// Independent solver for the same maximum via Dinkelbach iterations:
/// repeatedly maximizes the concave R(theta) - lambda (theta P + P_c) and
/// updates lambda to the attained ratio. Used for cross-validation.
/// Throws ConvergenceError if the iteration cap is hit.
Optimum dinkelbach_maximize(const ChannelState& channel,
                            const SystemParams& params, const QosProfile& qos,
                            const OptimizerConfig& config = {});

}  // namespace nomaee
