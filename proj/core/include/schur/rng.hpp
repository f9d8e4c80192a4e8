#pragma once

#include <cmath>
#include <cstdint>

namespace schur {

/// splitmix64: counter-based, splittable, identical output on every
/// platform. Streams are cheap to fork by mixing a label into the state.
struct SplitMix64 {
  std::uint64_t state = 0;

  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ULL;
    return mix(state);
  }

  double next_double() {  // uniform in [0,1)
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  double next_gaussian() {
    double u = 0.0;
    do {
      u = next_double();
    } while (u <= 0.0);
    const double v = next_double();
    return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * M_PI * v);
  }

  /// Stream for a labeled substream (per-trial determinism).
  static SplitMix64 forked(std::uint64_t seed, std::uint64_t label) {
    return SplitMix64{mix(seed ^ (0x9E3779B97F4A7C15ULL * (label + 1)))};
  }
};

}  // namespace schur
