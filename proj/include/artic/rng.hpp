#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>

namespace artic {

/// Deterministic random stream derived from a root seed and a stream name.
///
/// All randomness in the library flows from one root seed through named
/// sub-streams ("generation", "degradation", "restart", ...), so results are
/// reproducible bit-for-bit regardless of thread scheduling. The generator
/// is xoshiro256** with splitmix64 seeding; distributions are implemented
/// here rather than taken from <random>, whose distributions are
/// implementation-defined.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::string_view stream, std::uint64_t index = 0) {
    // FNV-1a over the stream name, then splitmix64 expansion.
    std::uint64_t h = 1469598103934665603ull;
    for (char c : stream) {
      h ^= static_cast<unsigned char>(c);
      h *= 1099511628211ull;
    }
    std::uint64_t x = seed ^ h ^ (index * 0x9e3779b97f4a7c15ull);
    for (auto& s : state_) {
      s = splitmix64(x);
    }
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  /// Uniform double in [0, 1).
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Integer in [0, n). n must be positive.
  std::uint64_t uniform_index(std::uint64_t n) {
    // Rejection-free modulo bias is negligible at these ranges, but stay
    // exact: widening multiply.
    return static_cast<std::uint64_t>(uniform() * static_cast<double>(n)) % n;
  }

  /// Standard normal via Marsaglia polar (no trig, stable across libms).
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u, v, s;
    do {
      u = uniform(-1.0, 1.0);
      v = uniform(-1.0, 1.0);
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double m = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * m;
    has_spare_ = true;
    return u * m;
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }
  static std::uint64_t splitmix64(std::uint64_t& x) {
    std::uint64_t z = (x += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  std::uint64_t state_[4] = {};
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace artic
