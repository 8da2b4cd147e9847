#include "nomaee/qos.hpp"

#include <cmath>

#include "nomaee/errors.hpp"

namespace nomaee {

QosProfile qos_profile(std::span<const double> r_min) {
  if (r_min.empty()) throw InvalidInputError("at least one rate floor is required");
  QosProfile qos;
  qos.r_min.assign(r_min.begin(), r_min.end());
  qos.min_sinr.reserve(r_min.size());
  qos.min_signal_share.reserve(r_min.size());
  for (double r : r_min) {
    if (!(std::isfinite(r) && r >= 0.0))
      throw InvalidInputError("rate floors must be nonnegative");
    const double sinr = std::exp2(r) - 1.0;
    qos.min_sinr.push_back(sinr);
    qos.min_signal_share.push_back(sinr / (sinr + 1.0));
  }
  return qos;
}

MinPowerResult min_power(const ChannelState& channel, const SystemParams& params,
                         const QosProfile& qos) {
  const std::size_t k = channel.users();
  if (k != qos.users())
    throw InvalidInputError("channel and QoS profile disagree on user count");

  MinPowerResult result;
  result.per_user_w.assign(k, 0.0);
  // Strongest user first: each power depends only on the ones above it.
  double above = 0.0;
  for (std::size_t i = k; i-- > 0;) {
    const double p =
        qos.min_sinr[i] * (above + params.noise_power_w / channel.gains[i]);
    result.per_user_w[i] = p;
    above += p;
  }
  result.total_w = above;
  result.theta_min = result.total_w / params.total_power_w;
  return result;
}

bool is_feasible(const SystemParams& params, const MinPowerResult& mp) {
  return mp.total_w <=
         params.total_power_w * (1.0 + kFeasibilityRelTol);
}

}  // namespace nomaee
