#pragma once

#include <cstdint>

namespace freebell::rng {

/// splitmix64 — the public-domain 64-bit mixer of Steele, Lea and Flood.
///
/// Chosen over std::mt19937 + <random> distributions because the standard
/// distributions are implementation-defined: this generator and the uniform
/// mappings below produce bit-identical streams on every platform and
/// toolchain, which the simulation's reproducibility contract requires.
class SplitMix64 {
 public:
  constexpr explicit SplitMix64(std::uint64_t seed) : state_{seed} {}

  constexpr std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1), 53 significant bits.
  constexpr double next_unit() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  /// Uniform integer in [0, n) via the widening-multiply map.
  constexpr std::uint64_t next_below(std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * n) >> 64);
  }

 private:
  std::uint64_t state_;
};

/// One splitmix64 finalizer round, used to spread seeds and indices.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

/// Independent per-run stream: a SplitMix64 whose initial state is derived
/// from (master seed, run index). Runs can therefore be generated in any
/// order and partitioned across any number of workers without changing a
/// single drawn value.
constexpr SplitMix64 run_stream(std::uint64_t seed, std::uint64_t run_index) {
  return SplitMix64{mix64(seed + 0x9E3779B97F4A7C15ull) ^
                    mix64(run_index + 0xD1B54A32D192ED03ull)};
}

}  // namespace freebell::rng
