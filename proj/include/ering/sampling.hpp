#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>

namespace ering {

enum class SampleMode { exhaustive, seeded };

std::string to_string(SampleMode mode);

/// How a suite chooses its cases.
///
/// exhaustive: quantifiers over E run over the full enumeration; E+ and G
///   quantifiers still use `case_budget` seeded samples.
/// seeded: every quantifier is sampled.
/// `magnitude_bound` caps sampled entries/values and the length of the effect
/// sums used to build E+ samples.
struct SampleStrategy {
  SampleMode mode = SampleMode::seeded;
  std::uint64_t seed = 0;
  std::size_t case_budget = 1000;
  std::size_t magnitude_bound = 6;

  friend bool operator==(const SampleStrategy&, const SampleStrategy&) = default;
};

/// Deterministic generator. Only the raw mt19937_64 stream is used (its output
/// is fixed by the standard); range reduction is done here so that case
/// sequences do not depend on the standard library's distributions.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, n). n must be positive.
  std::uint64_t below(std::uint64_t n);
  /// Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi);
  bool coin() { return (next() >> 63) != 0; }

  /// Independent stream derived from this generator's seed and a label.
  static Rng derived(std::uint64_t seed, std::uint64_t stream);

private:
  std::mt19937_64 engine_;
};

}  // namespace ering
