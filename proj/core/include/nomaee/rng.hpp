#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace nomaee {

/// SplitMix64 finalizer. Bijective mix of a 64-bit word.
std::uint64_t mix64(std::uint64_t z);

/// Counter-based per-trial seed: mix64(master + GOLDEN * (index + 1)).
/// Trials can be generated in any order, or in parallel, with identical results.
std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t trial_index);

/// Seeded source of uniform and complex-normal draws.
///
/// Uniforms are built from the top 53 bits of mt19937_64 output and normals
/// via Box-Muller, so the stream is bit-identical on every platform
/// (std::normal_distribution is implementation-defined and avoided).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on the open interval (0, 1).
  double uniform();

  /// Circularly-symmetric complex normal, E|g|^2 = 1 (variance 1/2 per part).
  std::complex<double> complex_normal();

 private:
  std::mt19937_64 engine_;
};

}  // namespace nomaee
