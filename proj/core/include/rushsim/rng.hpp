#ifndef RUSHSIM_RNG_HPP
#define RUSHSIM_RNG_HPP

#include <cstdint>

namespace rushsim {

/// Deterministic 64-bit stream (SplitMix64). Used instead of <random>
/// engines/distributions so that results are bit-identical across standard
/// library implementations.
///
/// Draw order is part of the simulation contract: the engine draws only at
/// customer spawn, in the order list size, product sample, entrance,
/// infective uniform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, n). Multiply-shift; bias is < 2^-32 for any n
  /// this simulator uses and the mapping is fully deterministic.
  std::uint64_t below(std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * n) >> 64);
  }

  /// Uniform integer in [lo, hi] inclusive.
  int range(int lo, int hi) {
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::uint64_t state_;
};

}  // namespace rushsim

#endif
