#pragma once

#include <cmath>
#include <cstdint>

namespace lilrates {

// SplitMix64 finalizer; statistically strong 64-bit mixing.
inline constexpr std::uint64_t splitmix_finalize(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ULL;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return z;
}

inline constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ULL;

// Counter-based per-path stream: the key is a hash of (master seed, path
// index) and draw j is finalize(key + j * gamma).  Streams are therefore
// independent of scheduling and of how many other streams run; results
// are a pure function of (seed, path).
class PathRng {
 public:
  PathRng(std::uint64_t master_seed, std::uint64_t path_index)
      : key_(splitmix_finalize(splitmix_finalize(master_seed + kGoldenGamma) ^
                               splitmix_finalize(path_index * kGoldenGamma +
                                                 0x243F6A8885A308D3ULL))) {}

  std::uint64_t next_u64() {
    counter_ += kGoldenGamma;
    return splitmix_finalize(key_ + counter_);
  }

  // Uniform on (0, 1].
  double uniform01() {
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
  }

  bool coin() { return (next_u64() >> 63) != 0; }

  // Standard normal via the Marsaglia polar method; the companion value
  // is cached, so draws alternate between one rejection loop and a free
  // read.  Fully determined by the stream.
  double standard_normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u, v, s;
    do {
      u = 2.0 * uniform01() - 1.0;
      v = 2.0 * uniform01() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * f;
    has_spare_ = true;
    return u * f;
  }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace lilrates
