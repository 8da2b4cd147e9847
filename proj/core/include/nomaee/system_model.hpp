#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace nomaee {

/// Base-station and medium constants. All powers in linear watts.
struct SystemParams {
  double total_power_w = 1.0;    // power budget P
  double noise_power_w = 1e-10;  // additive noise power
  double circuit_power_w = 1.0;  // constant circuit consumption
  double pathloss_exponent = 3.0;
};

/// Throws InvalidInputError unless every field is positive and finite.
void validate(const SystemParams& params);

/// One downlink channel realization for K users, sorted ascending by gain.
///
/// gains[k] = |fading[k]|^2 * distances_m[k]^(-alpha); the sort permutes all
/// three vectors jointly, so user k everywhere downstream means the user with
/// the (k+1)-th weakest channel.
struct ChannelState {
  std::vector<double> gains;        // channel power gains |h_k|^2, ascending
  std::vector<double> distances_m;  // BS-to-user distances
  std::vector<std::complex<double>> fading;  // Rayleigh draws g_k

  std::size_t users() const { return gains.size(); }
};

/// Draws i.i.d. CN(0,1) fading for each distance and returns the sorted state.
/// Deterministic for a fixed seed.
ChannelState generate_channel(std::span<const double> distances_m,
                              double pathloss_exponent, std::uint64_t seed);

/// Channel built directly from gain values (CLI input, tests). Gains are
/// sorted ascending; distances are set to 1 so the gain/fading relation holds.
ChannelState channel_from_gains(std::span<const double> gains);

/// Per-user constants C_k = P * |h_k|^2, ascending like the gains.
struct DerivedConstants {
  std::vector<double> c;
};

DerivedConstants derived_constants(const SystemParams& params,
                                   const ChannelState& channel);

}  // namespace nomaee
