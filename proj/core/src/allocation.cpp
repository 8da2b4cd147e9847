#include "nomaee/allocation.hpp"

#include <cmath>
#include <numbers>

#include "nomaee/errors.hpp"

namespace nomaee {
namespace {

constexpr double kInvLn2 = 1.0 / std::numbers::ln2;

void check_sizes(const ChannelState& channel, const QosProfile& qos) {
  if (channel.users() != qos.users())
    throw InvalidInputError("channel and QoS profile disagree on user count");
}

}  // namespace

std::vector<double> optimal_coeffs(double theta, const ChannelState& channel,
                                   const SystemParams& params,
                                   const QosProfile& qos) {
  check_sizes(channel, qos);
  const MinPowerResult mp = min_power(channel, params, qos);
  if (theta < mp.theta_min * (1.0 - kFeasibilityRelTol))
    throw InfeasibleThetaError(theta, mp.theta_min);

  const std::size_t k = channel.users();
  std::vector<double> coeffs(k);
  double used = 0.0;  // sum of coefficients fixed so far
  for (std::size_t i = 0; i + 1 < k; ++i) {
    const double share = qos.min_signal_share[i];
    coeffs[i] = share * (theta - used) +
                share * params.noise_power_w /
                    (params.total_power_w * channel.gains[i]);
    used += coeffs[i];
  }
  coeffs[k - 1] = theta - used;
  return coeffs;
}

AllocationSlopes slopes(const ChannelState& channel, const SystemParams& params,
                        const QosProfile& qos) {
  (void)params;
  check_sizes(channel, qos);
  const std::size_t k = channel.users();
  AllocationSlopes out;
  out.slopes.resize(k);
  double partial = 0.0;
  for (std::size_t i = 0; i + 1 < k; ++i) {
    out.slopes[i] = qos.min_signal_share[i] * (1.0 - partial);
    partial += out.slopes[i];
  }
  out.slopes[k - 1] = 1.0 - partial;
  return out;
}

std::vector<double> rates(std::span<const double> coeffs,
                          const ChannelState& channel,
                          const SystemParams& params) {
  const std::size_t k = channel.users();
  if (coeffs.size() != k)
    throw InvalidInputError("coefficient list and channel disagree on user count");

  std::vector<double> out(k);
  double interference = 0.0;  // sum of coefficients above user i
  for (std::size_t i = k; i-- > 0;) {
    const double c = params.total_power_w * channel.gains[i];
    const double sinr =
        c * coeffs[i] / (c * interference + params.noise_power_w);
    out[i] = std::log1p(sinr) * kInvLn2;
    interference += coeffs[i];
  }
  return out;
}

double sum_rate_telescoped(std::span<const double> coeffs,
                           const ChannelState& channel,
                           const SystemParams& params) {
  const std::size_t k = channel.users();
  if (coeffs.size() != k)
    throw InvalidInputError("coefficient list and channel disagree on user count");

  const double sigma2 = params.noise_power_w;
  double theta = 0.0;
  for (double a : coeffs) theta += a;

  const double c1 = params.total_power_w * channel.gains[0];
  double sum = std::log2(c1 * theta + sigma2) - std::log2(sigma2);
  // x runs over the interference share above each user, descending.
  double x = theta;
  for (std::size_t i = 0; i + 1 < k; ++i) {
    x -= coeffs[i];
    const double c_lo = params.total_power_w * channel.gains[i];
    const double c_hi = params.total_power_w * channel.gains[i + 1];
    sum += std::log2(c_hi * x + sigma2) - std::log2(c_lo * x + sigma2);
  }
  return sum;
}

Allocation make_allocation(double theta, const ChannelState& channel,
                           const SystemParams& params, const QosProfile& qos) {
  Allocation alloc;
  alloc.coeffs = optimal_coeffs(theta, channel, params, qos);
  alloc.theta = theta;
  alloc.rates = rates(alloc.coeffs, channel, params);
  alloc.sum_rate = 0.0;
  for (double r : alloc.rates) alloc.sum_rate += r;
  alloc.transmit_power_w = theta * params.total_power_w;
  alloc.ee = alloc.sum_rate / (alloc.transmit_power_w + params.circuit_power_w);
  return alloc;
}

double ee_of_theta(double theta, const ChannelState& channel,
                   const SystemParams& params, const QosProfile& qos) {
  return make_allocation(theta, channel, params, qos).ee;
}

double ee_derivative(double theta, const ChannelState& channel,
                     const SystemParams& params, const QosProfile& qos) {
  const Allocation alloc = make_allocation(theta, channel, params, qos);
  const AllocationSlopes sl = slopes(channel, params, qos);

  const double c_last = params.total_power_w * channel.gains.back();
  const double consumed = alloc.transmit_power_w + params.circuit_power_w;
  const double rate_growth = kInvLn2 * c_last * sl.slopes.back() /
                             (params.noise_power_w + c_last * alloc.coeffs.back());
  return (rate_growth * consumed - alloc.sum_rate * params.total_power_w) /
         (consumed * consumed);
}

}  // namespace nomaee
