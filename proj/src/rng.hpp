#pragma once

#include <cstdint>
#include <random>

namespace icfd {

inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Deterministic engine with explicit draw helpers; rejection sampling keeps
// the output independent of any library distribution implementation.
class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(splitmix64(seed)) {}

  uint64_t next_u64() { return eng_(); }

  // uniform over [0, bound), bound >= 1
  uint64_t below(uint64_t bound) {
    const uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    uint64_t x;
    do {
      x = eng_();
    } while (x >= limit);
    return x % bound;
  }

 private:
  std::mt19937_64 eng_;
};

// Substream derivation: repetition r of a Monte Carlo loop gets its own
// reproducible stream from (seed, r).
inline Rng substream(uint64_t seed, uint64_t stream) {
  return Rng(splitmix64(seed ^ splitmix64(stream + 0x6a09e667f3bcc909ull)));
}

}  // namespace icfd
