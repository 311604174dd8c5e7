#pragma once

#include <array>
#include <cstdint>

namespace vqge {

/// Philox4x64-10 counter-based generator.
///
/// A (seed, stream) pair names an independent sequence: the seed fills the
/// key, the stream occupies the upper half of the 256-bit counter, and draws
/// walk the lower half. Distinct streams therefore never overlap. Experiment
/// code derives stream ids with derive_stream(), so every consumer of
/// randomness (per-restart init, per-evaluation shot noise, per-unitary
/// benchmark draws, ...) is reproducible in isolation.
class Philox {
 public:
  explicit Philox(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t next_u64();

  /// Uniform double in [0, 1) with 53 random bits.
  double next_double();

  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi);

  /// Standard normal via Box-Muller (two uniforms per pair, cached).
  double normal();

  /// Uniform integer in [0, n).
  std::uint64_t next_below(std::uint64_t n);

  /// Raw block function, exposed for the known-answer tests.
  static std::array<std::uint64_t, 4> block(const std::array<std::uint64_t, 4>& counter,
                                            const std::array<std::uint64_t, 2>& key);

 private:
  std::array<std::uint64_t, 4> counter_{};
  std::array<std::uint64_t, 2> key_{};
  std::array<std::uint64_t, 4> buffer_{};
  int buffer_pos_ = 4;
  bool have_cached_normal_ = false;
  double cached_normal_ = 0.0;
};

/// Deterministic stream-id derivation: splitmix64-style mixing of up to three
/// tags onto a base. Used to give each randomness consumer its own stream.
std::uint64_t derive_stream(std::uint64_t base, std::uint64_t a, std::uint64_t b = 0,
                            std::uint64_t c = 0);

}  // namespace vqge
