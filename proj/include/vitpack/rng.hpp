#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>

#include "vitpack/error.hpp"

namespace vitpack {

// Counter-based deterministic generator. Every draw is a pure function of
// (seed, stream, counter), so independent streams can be consumed in any
// order, in parallel, and runs are bit-reproducible across platforms.
class counter_rng {
 public:
  counter_rng(std::uint64_t seed, std::uint64_t stream) : seed_(seed), stream_(stream) {}

  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Hash-combine an arbitrary number of values into a stream id.
  template <typename... Rest>
  static std::uint64_t derive(std::uint64_t first, Rest... rest) {
    std::uint64_t h = mix(first);
    ((h = mix(h ^ (static_cast<std::uint64_t>(rest) + 0x9e3779b97f4a7c15ull))), ...);
    return h;
  }

  std::uint64_t next_u64() {
    std::uint64_t h = mix(seed_);
    h = mix(h ^ (stream_ + 0x9e3779b97f4a7c15ull));
    h = mix(h ^ (counter_++ + 0x9e3779b97f4a7c15ull));
    return h;
  }

  // Uniform in [0, 1), 53 bits.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // index in [0, n)
  std::uint64_t index(std::uint64_t n) { return next_u64() % n; }

  // Standard normal via Box-Muller; consumes exactly two uniforms per call.
  double normal() {
    double u1 = uniform();
    double u2 = uniform();
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

  double normal(double mean, double stddev) { return mean + stddev * normal(); }

  // Normal truncated by rejection; `halfwidth` is in units of stddev.
  double truncated_normal(double mean, double stddev, double halfwidth) {
    for (;;) {
      double z = normal();
      if (std::abs(z) <= halfwidth) return mean + stddev * z;
    }
  }

  // Marsaglia-Tsang; the shape<1 case boosts through Gamma(shape+1).
  double gamma(double shape) {
    if (shape <= 0.0) throw config_error("gamma shape must be positive, got " + std::to_string(shape));
    if (shape < 1.0) {
      double u = uniform();
      if (u <= 0.0) u = 0x1.0p-53;
      return gamma(shape + 1.0) * std::pow(u, 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
      double x = normal();
      double t = 1.0 + c * x;
      if (t <= 0.0) continue;
      double v = t * t * t;
      double u = uniform();
      if (u <= 0.0) u = 0x1.0p-53;
      if (std::log(u) < 0.5 * x * x + d - d * v + d * std::log(v)) return d * v;
    }
  }

  double beta(double alpha, double beta_param) {
    if (alpha <= 0.0 || beta_param <= 0.0)
      throw config_error("beta parameters must be positive, got alpha=" + std::to_string(alpha) +
                         " beta=" + std::to_string(beta_param));
    double x = gamma(alpha);
    double y = gamma(beta_param);
    return x / (x + y);
  }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t counter_ = 0;
};

// Round half to even, so token counts do not depend on platform rounding.
inline long long round_half_even(double x) {
  double r = std::nearbyint(x);  // default FE_TONEAREST is half-to-even
  return static_cast<long long>(r);
}

// Well-known stream tags; combined with ids via counter_rng::derive.
namespace streams {
inline constexpr std::uint64_t synth_pixels = 0x01;
inline constexpr std::uint64_t synth_shape = 0x02;
inline constexpr std::uint64_t resolution = 0x03;
inline constexpr std::uint64_t drop_rate = 0x04;
inline constexpr std::uint64_t drop_select = 0x05;
inline constexpr std::uint64_t shuffle = 0x06;
inline constexpr std::uint64_t init = 0x07;
inline constexpr std::uint64_t anchors = 0x08;
}  // namespace streams

}  // namespace vitpack
