#pragma once

#include <cmath>
#include <cstdint>

namespace photonstat::sim {

/// splitmix64 finalizer.
inline std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ULL;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return z;
}

/// Purposes keep substreams for different draw kinds independent.
enum class StreamPurpose : std::uint64_t {
  kDrift = 1,
  kBlink = 2,
  kEmit = 3,
  kScatter = 4,   // PSF offsets, splitter routing, detection thinning
  kDark = 5,
  kReadout = 6,
  kControl = 7,
};

/// Counter-derived key for the (purpose, frame, object, emitter) substream.
inline std::uint64_t stream_key(std::uint64_t master_seed, StreamPurpose purpose,
                                std::uint64_t frame = 0, std::uint64_t object = 0,
                                std::uint64_t emitter = 0) {
  std::uint64_t h = mix64(master_seed + 0x9E3779B97F4A7C15ULL);
  h = mix64(h ^ (static_cast<std::uint64_t>(purpose) + 0xD1B54A32D192ED03ULL));
  h = mix64(h ^ (frame + 0x8CB92BA72F3D8DD7ULL));
  h = mix64(h ^ (object + 0xA24BAED4963EE407ULL));
  h = mix64(h ^ (emitter + 0x9FB21C651E98DF25ULL));
  return h;
}

/// Deterministic random stream (splitmix64 sequence) with the handful of
/// samplers the simulator needs. Hand-rolled so that stacks are bit-identical
/// across platforms and standard-library versions.
class RandomStream {
public:
  explicit RandomStream(std::uint64_t key) : state_(key) {}

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix64(state_);
  }

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform in (0, 1].
  double uniform_pos() {
    return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
  }

  bool bernoulli(double p) { return uniform() < p; }

  double exponential(double rate) { return -std::log(uniform_pos()) / rate; }

  /// Box-Muller, one value per call (two uniforms consumed).
  double normal(double mean, double sd) {
    const double u1 = uniform_pos();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    return mean + sd * r * std::cos(6.283185307179586476925286766559 * u2);
  }

  /// Knuth's method, chunked so large means stay in range.
  std::uint32_t poisson(double mean) {
    std::uint32_t total = 0;
    while (mean > 30.0) {
      total += poisson_small(30.0);
      mean -= 30.0;
    }
    return total + poisson_small(mean);
  }

private:
  std::uint32_t poisson_small(double mean) {
    if (mean <= 0) return 0;
    const double limit = std::exp(-mean);
    double prod = uniform_pos();
    std::uint32_t k = 0;
    while (prod > limit) {
      prod *= uniform_pos();
      ++k;
    }
    return k;
  }

  std::uint64_t state_;
};

}  // namespace photonstat::sim
