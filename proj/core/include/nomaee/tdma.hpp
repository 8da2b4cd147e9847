#pragma once

#include <vector>

#include "nomaee/qos.hpp"
#include "nomaee/system_model.hpp"

namespace nomaee {

enum class PowerGridScale { Linear, Decibel };

struct TdmaConfig {
  int grid_points = 2001;
  PowerGridScale scale = PowerGridScale::Decibel;
};

/// Orthogonal baseline outcome: one fixed transmit power, equal time slots.
struct TdmaResult {
  double power_w = 0.0;       // chosen transmit power (0 when infeasible)
  std::vector<double> rates;  // time-averaged per-user rates
  double sum_rate = 0.0;
  double ee = 0.0;            // sum_rate / (power_w + circuit power)
  bool feasible = false;
};

/// Time-averaged rate of each user: (1/K) log2(1 + p |h_k|^2 / noise).
std::vector<double> tdma_rates(double power_w, const ChannelState& channel,
                               const SystemParams& params);

/// Smallest fixed power whose time-averaged rates meet every floor:
/// max_k (2^(K r_k) - 1) * noise / |h_k|^2.
double tdma_min_power(const ChannelState& channel, const SystemParams& params,
                      const QosProfile& qos);

/// Exhaustive search for the EE-best fixed power on a grid from the required
/// power up to the budget. Infeasible budgets yield ee = 0, feasible = false.
/// Grid ties resolve to the lowest power.
TdmaResult tdma_max_ee(const ChannelState& channel, const SystemParams& params,
                       const QosProfile& qos, const TdmaConfig& config = {});

}  // namespace nomaee
