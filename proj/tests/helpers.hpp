#pragma once
// Shared deterministic generators and comparison helpers for the test
// suites.

#include <cmath>
#include <numbers>
#include <random>

#include "esh2d/decomp.hpp"
#include "esh2d/invariants.hpp"
#include "esh2d/tensor.hpp"

namespace testutil {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Rng {
  std::mt19937_64 engine;

  explicit Rng(std::uint64_t seed) : engine(seed) {}

  double unit() {  // [0, 1)
    return static_cast<double>(engine() >> 11) * 0x1.0p-53;
  }
  double range(double lo, double hi) { return lo + (hi - lo) * unit(); }
  double angle() { return range(0.0, kTwoPi); }
  bool coin() { return (engine() & 1) != 0; }
};

inline bool close_abs(double a, double b, double tol) {
  return std::abs(a - b) <= tol;
}

inline esh2d::GroupElement random_element(Rng& rng, bool allow_reflect = true) {
  return {rng.angle(), allow_reflect && rng.coin()};
}

inline esh2d::EshelbyTensor random_tensor(Rng& rng) {
  return esh2d::random_eshelby(rng.engine());
}

inline esh2d::Decomposition random_decomposition(Rng& rng) {
  esh2d::Decomposition dec;
  dec.lambda = rng.range(-1.0, 1.0);
  dec.mu = rng.range(-1.0, 1.0);
  dec.v = rng.range(-1.0, 1.0);
  dec.d1 = esh2d::h2_embed({rng.range(-1.0, 1.0), rng.range(-1.0, 1.0)});
  dec.d2 = esh2d::h2_embed({rng.range(-1.0, 1.0), rng.range(-1.0, 1.0)});
  dec.d = esh2d::h4_embed({rng.range(-1.0, 1.0), rng.range(-1.0, 1.0)});
  return dec;
}

inline esh2d::PolarConfig random_polar(Rng& rng, double max_radius = 1.5) {
  return {rng.range(0.0, max_radius), rng.range(0.0, max_radius),
          rng.range(0.0, max_radius), rng.angle(), rng.angle(), rng.angle()};
}

// Smallest distance between two angles modulo the stabilizer period pi.
inline double angle_distance_mod_pi(double a, double b) {
  const double pi = std::numbers::pi;
  double d = std::fmod(std::abs(a - b), pi);
  return std::min(d, pi - d);
}

}  // namespace testutil
