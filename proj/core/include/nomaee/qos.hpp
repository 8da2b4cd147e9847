#pragma once

#include <span>
#include <vector>

#include "nomaee/system_model.hpp"

namespace nomaee {

/// Relative slack used when comparing powers against the budget, so that
/// instances sitting exactly at the feasibility edge do not flap.
inline constexpr double kFeasibilityRelTol = 1e-12;

/// Per-user rate floors with the two derived constants used everywhere:
/// min_sinr[k] = 2^r - 1 is the SINR a rate floor r demands, and
/// min_signal_share[k] = min_sinr/(min_sinr + 1) is the share of the total
/// received power the user's own signal must carry when the floor is tight.
struct QosProfile {
  std::vector<double> r_min;             // bits/s/Hz, >= 0
  std::vector<double> min_sinr;          // A_k
  std::vector<double> min_signal_share;  // D_k in [0, 1)

  std::size_t users() const { return r_min.size(); }
};

/// Builds a QosProfile. Throws InvalidInputError on a negative or non-finite
/// rate or an empty list.
QosProfile qos_profile(std::span<const double> r_min);

/// Smallest per-user transmit powers meeting every rate floor.
struct MinPowerResult {
  std::vector<double> per_user_w;
  double total_w = 0.0;
  double theta_min = 0.0;  // total_w / budget; feasible iff <= 1
};

/// Solves the minimum-power problem in closed form: the rate constraints are
/// all tight at the optimum, so the powers follow one backward recursion
/// p_k = A_k * (sum_{i>k} p_i + noise/gain_k), evaluated k = K..1.
MinPowerResult min_power(const ChannelState& channel, const SystemParams& params,
                         const QosProfile& qos);

/// True when the budget covers the minimum power (relative tolerance
/// kFeasibilityRelTol toward acceptance).
bool is_feasible(const SystemParams& params, const MinPowerResult& mp);

}  // namespace nomaee
