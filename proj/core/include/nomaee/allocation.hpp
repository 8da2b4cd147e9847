#pragma once

#include <span>
#include <vector>

#include "nomaee/qos.hpp"
#include "nomaee/system_model.hpp"

namespace nomaee {

/// A full power split at consumption ratio theta = P_t / P.
struct Allocation {
  std::vector<double> coeffs;    // a_k, fractions of the budget, sum = theta
  double theta = 0.0;
  std::vector<double> rates;     // bits/s/Hz per user
  double sum_rate = 0.0;
  double transmit_power_w = 0.0; // theta * P
  double ee = 0.0;               // sum_rate / (theta * P + P_c)
};

/// d a_k / d theta. Constant in theta; positive whenever every rate floor is
/// positive; sums to one by construction (the last entry is one minus the rest).
struct AllocationSlopes {
  std::vector<double> slopes;
};

/// Optimal coefficients at a fixed theta: the first K-1 rate floors are tight,
/// computed ascending k, and user K takes the remainder.
/// Throws InfeasibleThetaError when theta falls below the feasibility floor
/// theta_min (user K's floor would be violated). No clamping here.
std::vector<double> optimal_coeffs(double theta, const ChannelState& channel,
                                   const SystemParams& params,
                                   const QosProfile& qos);

/// Per-theta growth rate of each optimal coefficient.
AllocationSlopes slopes(const ChannelState& channel, const SystemParams& params,
                        const QosProfile& qos);

/// Achievable rate of each user under interference cancellation:
/// R_k = log2(1 + C_k a_k / (C_k sum_{i>k} a_i + noise)).
std::vector<double> rates(std::span<const double> coeffs,
                          const ChannelState& channel,
                          const SystemParams& params);

/// Sum rate in telescoped form,
///   log2(C_1 theta + s) - log2(s) + sum_k [log2(C_{k+1} x_k + s) - log2(C_k x_k + s)]
/// with x_k the interference share above user k. Equal to the direct sum of
/// rates(); used as an algebraic cross-check and by the derivative.
double sum_rate_telescoped(std::span<const double> coeffs,
                           const ChannelState& channel,
                           const SystemParams& params);

/// Builds the complete Allocation at theta (coefficients, rates, EE).
Allocation make_allocation(double theta, const ChannelState& channel,
                           const SystemParams& params, const QosProfile& qos);

/// EE value at theta under the optimal split.
double ee_of_theta(double theta, const ChannelState& channel,
                   const SystemParams& params, const QosProfile& qos);

/// Closed-form d EE / d theta. Along the optimal split only user K's rate
/// moves with theta, so the numerator's rate derivative collapses to the
/// single term C_K * slope_K / ((noise + C_K a_K) ln 2).
double ee_derivative(double theta, const ChannelState& channel,
                     const SystemParams& params, const QosProfile& qos);

}  // namespace nomaee
