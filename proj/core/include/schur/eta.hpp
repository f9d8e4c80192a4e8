#pragma once

#include <array>
#include <cmath>

namespace schur {

/// The seven smallest achievable idempotent Schur-multiplier norms
/// eta_0 < eta_1 < ... < eta_6; the open intervals between consecutive
/// values contain no achievable norm.
inline const std::array<double, 7>& eta_constants() {
  static const std::array<double, 7> k = {
      0.0,
      1.0,
      std::sqrt(4.0 / 3.0),
      (1.0 + std::sqrt(2.0)) / 2.0,
      std::sqrt(169.0 + 38.0 * std::sqrt(19.0)) / 15.0,
      std::sqrt(3.0 / 2.0),
      0.4 * std::sqrt(5.0 + 2.0 * std::sqrt(5.0)),
  };
  return k;
}

inline double eta(int k) { return eta_constants().at(static_cast<std::size_t>(k)); }

/// Limit of the path norms; also the norm of the infinite diagonal +
/// superdiagonal idempotent.
inline double four_over_pi() { return 4.0 / M_PI; }

}  // namespace schur
