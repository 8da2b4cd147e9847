#include "nomaee/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "nomaee/errors.hpp"

namespace nomaee {
namespace {

constexpr double kInvLn2 = 1.0 / std::numbers::ln2;

double checked_theta_min(const ChannelState& channel, const SystemParams& params,
                         const QosProfile& qos) {
  const MinPowerResult mp = min_power(channel, params, qos);
  if (!is_feasible(params, mp))
    throw InfeasibleError(mp.total_w, params.total_power_w);
  return std::min(mp.theta_min, 1.0);
}

/// d(sum rate)/d theta along the optimal split; strictly decreasing in theta.
double rate_growth(double theta, const ChannelState& channel,
                   const SystemParams& params, const QosProfile& qos,
                   const AllocationSlopes& sl) {
  const std::vector<double> coeffs = optimal_coeffs(theta, channel, params, qos);
  const double c_last = params.total_power_w * channel.gains.back();
  return kInvLn2 * c_last * sl.slopes.back() /
         (params.noise_power_w + c_last * coeffs.back());
}

Optimum finish(double theta_star, Boundary boundary, int iterations,
               const ChannelState& channel, const SystemParams& params,
               const QosProfile& qos) {
  Optimum opt;
  opt.theta_star = theta_star;
  opt.allocation = make_allocation(theta_star, channel, params, qos);
  opt.boundary = boundary;
  opt.iterations = iterations;
  return opt;
}

}  // namespace

const char* boundary_name(Boundary b) {
  switch (b) {
    case Boundary::InteriorRoot: return "interior-root";
    case Boundary::ClampedLow: return "clamped-low";
    case Boundary::ClampedHigh: return "clamped-high";
  }
  return "unknown";
}

Optimum maximize_ee(const ChannelState& channel, const SystemParams& params,
                    const QosProfile& qos, const OptimizerConfig& config) {
  const double theta_min = checked_theta_min(channel, params, qos);

  const double d_low = ee_derivative(theta_min, channel, params, qos);
  if (d_low <= 0.0)
    return finish(theta_min, Boundary::ClampedLow, 0, channel, params, qos);

  const double d_high = ee_derivative(1.0, channel, params, qos);
  if (d_high >= 0.0)
    return finish(1.0, Boundary::ClampedHigh, 0, channel, params, qos);

  // d_low > 0 > d_high: the unique sign change is bracketed.
  double lo = theta_min;
  double hi = 1.0;
  int iterations = 0;
  while (hi - lo > config.theta_tolerance && iterations < config.max_iterations) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // interval at floating-point resolution
    const double d_mid = ee_derivative(mid, channel, params, qos);
    if (d_mid > 0.0)
      lo = mid;
    else
      hi = mid;
    ++iterations;
  }
  const double root = 0.5 * (lo + hi);

  // The root of a pseudo-concave derivative is the maximum; the endpoint
  // comparison only settles floating-point-level ties.
  Optimum best = finish(root, Boundary::InteriorRoot, iterations, channel,
                        params, qos);
  const Allocation at_min = make_allocation(theta_min, channel, params, qos);
  if (at_min.ee > best.allocation.ee)
    best = finish(theta_min, Boundary::ClampedLow, iterations, channel, params,
                  qos);
  const Allocation at_one = make_allocation(1.0, channel, params, qos);
  if (at_one.ee > best.allocation.ee)
    best = finish(1.0, Boundary::ClampedHigh, iterations, channel, params, qos);
  return best;
}

Allocation max_se_allocation(const ChannelState& channel,
                             const SystemParams& params, const QosProfile& qos) {
  checked_theta_min(channel, params, qos);
  return make_allocation(1.0, channel, params, qos);
}

Optimum dinkelbach_maximize(const ChannelState& channel,
                            const SystemParams& params, const QosProfile& qos,
                            const OptimizerConfig& config) {
  const double theta_min = checked_theta_min(channel, params, qos);
  const AllocationSlopes sl = slopes(channel, params, qos);

  const auto consumed = [&](double theta) {
    return theta * params.total_power_w + params.circuit_power_w;
  };
  const auto sum_rate = [&](double theta) {
    return make_allocation(theta, channel, params, qos).sum_rate;
  };

  double lambda = sum_rate(theta_min) / consumed(theta_min);
  double theta = theta_min;
  Boundary boundary = Boundary::ClampedLow;

  for (int iteration = 1; iteration <= config.max_iterations; ++iteration) {
    // Maximize R(theta) - lambda * (theta P + P_c): R is strictly concave, so
    // bisect its derivative against lambda * P.
    const double lambda_p = lambda * params.total_power_w;
    if (rate_growth(theta_min, channel, params, qos, sl) - lambda_p <= 0.0) {
      theta = theta_min;
      boundary = Boundary::ClampedLow;
    } else if (rate_growth(1.0, channel, params, qos, sl) - lambda_p >= 0.0) {
      theta = 1.0;
      boundary = Boundary::ClampedHigh;
    } else {
      double lo = theta_min;
      double hi = 1.0;
      while (hi - lo > config.theta_tolerance) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (rate_growth(mid, channel, params, qos, sl) - lambda_p > 0.0)
          lo = mid;
        else
          hi = mid;
      }
      theta = 0.5 * (lo + hi);
      boundary = Boundary::InteriorRoot;
    }

    const double rate = sum_rate(theta);
    const double gap = rate - lambda * consumed(theta);
    lambda = rate / consumed(theta);
    if (gap <= config.dinkelbach_tolerance)
      return finish(theta, boundary, iteration, channel, params, qos);
  }
  throw ConvergenceError("Dinkelbach iteration cap exceeded");
}

}  // namespace nomaee
