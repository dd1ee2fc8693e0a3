#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace csf {

// Deterministic uniform sampling on top of std::mt19937_64. The standard
// pins down the engine's output exactly, and all floating-point mappings
// here are built from the raw 64-bit stream, so identical seeds give
// bit-identical draws on every platform. std::uniform_real_distribution
// is deliberately avoided: its output is implementation-defined.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  /// Uniform double in [0, 1), 53 random mantissa bits.
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [0, bound), rejection-sampled so it is unbiased.
  std::uint64_t uniform_index(std::uint64_t bound);

  /// m distinct indices from [0, n), sorted ascending.
  std::vector<std::size_t> sample_without_replacement(std::size_t n, std::size_t m);

  /// Random sign, +1 or -1.
  double sign() { return (gen_() >> 63) ? 1.0 : -1.0; }

private:
  std::mt19937_64 gen_;
};

/// splitmix64 finalizer; used to derive independent stream seeds.
std::uint64_t mix64(std::uint64_t x);

/// Derives a child seed from a base seed and up to three stream tags.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a,
                          std::uint64_t b = 0, std::uint64_t c = 0);

}  // namespace csf
