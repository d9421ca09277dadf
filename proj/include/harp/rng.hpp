#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace harp {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Seeded random source. mt19937_64 produces a sequence fixed by the standard,
// and every draw below is built from raw 64-bit words rather than
// std::*_distribution (whose output is implementation-defined), so a given
// seed yields the same stream on every platform and build.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed), seed_(seed) {}

  std::uint64_t u64() { return engine_(); }

  // [0, 1) with 53 random bits.
  double real() { return static_cast<double>(u64() >> 11) * 0x1.0p-53; }

  // [0, n) for n >= 1, via the multiply-shift bound (bias < n / 2^64).
  std::uint64_t index(std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(u64()) * static_cast<unsigned __int128>(n)) >> 64);
  }

  // Fisher-Yates.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[index(i)]);
    }
  }

  std::uint64_t seed() const { return seed_; }

  // Independent stream keyed by (seed, stream id). Used to give walks,
  // training, and per-level work their own reproducible sources.
  Rng derive(std::uint64_t stream) const {
    return Rng(splitmix64(seed_ ^ splitmix64(stream)));
  }

 private:
  std::mt19937_64 engine_;
  std::uint64_t seed_;
};

}  // namespace harp
