#include "nomaee/rng.hpp"

#include <cmath>
#include <numbers>

namespace nomaee {
namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

}  // namespace

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t trial_index) {
  return mix64(master_seed + kGolden * (trial_index + 1));
}

double Rng::uniform() {
  // Top 53 bits, offset by half a step: strictly inside (0, 1).
  const std::uint64_t bits = engine_() >> 11;
  return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
}

std::complex<double> Rng::complex_normal() {
  const double u1 = uniform();
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  // Scale by 1/sqrt(2): variance 1/2 per component, E|g|^2 = 1.
  const double scale = std::numbers::sqrt2 / 2.0;
  return {scale * radius * std::cos(angle), scale * radius * std::sin(angle)};
}

}  // namespace nomaee
