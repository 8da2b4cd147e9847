#include "nomaee/system_model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "nomaee/errors.hpp"
#include "nomaee/rng.hpp"

namespace nomaee {

void validate(const SystemParams& params) {
  auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
  if (!positive(params.total_power_w))
    throw InvalidInputError("total power must be positive");
  if (!positive(params.noise_power_w))
    throw InvalidInputError("noise power must be positive");
  if (!positive(params.circuit_power_w))
    throw InvalidInputError("circuit power must be positive");
  if (!positive(params.pathloss_exponent))
    throw InvalidInputError("path-loss exponent must be positive");
}

ChannelState generate_channel(std::span<const double> distances_m,
                              double pathloss_exponent, std::uint64_t seed) {
  if (distances_m.empty())
    throw InvalidInputError("at least one user distance is required");
  for (double d : distances_m) {
    if (!(std::isfinite(d) && d > 0.0))
      throw InvalidInputError("distances must be positive");
  }
  if (!(std::isfinite(pathloss_exponent) && pathloss_exponent > 0.0))
    throw InvalidInputError("path-loss exponent must be positive");

  const std::size_t k = distances_m.size();
  ChannelState state;
  state.distances_m.assign(distances_m.begin(), distances_m.end());
  state.fading.resize(k);
  state.gains.resize(k);

  Rng rng(seed);
  for (std::size_t i = 0; i < k; ++i) {
    state.fading[i] = rng.complex_normal();
    state.gains[i] = std::norm(state.fading[i]) *
                     std::pow(state.distances_m[i], -pathloss_exponent);
  }

  // Sort users jointly by gain; ties keep their draw order.
  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return state.gains[a] < state.gains[b];
  });

  ChannelState sorted;
  sorted.gains.reserve(k);
  sorted.distances_m.reserve(k);
  sorted.fading.reserve(k);
  for (std::size_t idx : order) {
    sorted.gains.push_back(state.gains[idx]);
    sorted.distances_m.push_back(state.distances_m[idx]);
    sorted.fading.push_back(state.fading[idx]);
  }
  return sorted;
}

ChannelState channel_from_gains(std::span<const double> gains) {
  if (gains.empty()) throw InvalidInputError("at least one gain is required");
  for (double g : gains) {
    if (!(std::isfinite(g) && g > 0.0))
      throw InvalidInputError("gains must be positive");
  }
  ChannelState state;
  state.gains.assign(gains.begin(), gains.end());
  std::sort(state.gains.begin(), state.gains.end());
  state.distances_m.assign(state.gains.size(), 1.0);
  state.fading.reserve(state.gains.size());
  for (double g : state.gains) state.fading.emplace_back(std::sqrt(g), 0.0);
  return state;
}

DerivedConstants derived_constants(const SystemParams& params,
                                   const ChannelState& channel) {
  DerivedConstants dc;
  dc.c.reserve(channel.users());
  for (double g : channel.gains) dc.c.push_back(params.total_power_w * g);
  return dc;
}

}  // namespace nomaee
