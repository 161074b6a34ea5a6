#ifndef SURFACE_CENSUS_RNG_HPP
#define SURFACE_CENSUS_RNG_HPP

#include <cstdint>

namespace surface_census {

// Seed mixer (Steele/Lea splitmix64). Used to expand one user seed into
// generator state and to derive independent streams.
struct SplitMix64 {
  std::uint64_t state;

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
};

// Seedable, splittable 64-bit stream (xoshiro256**). Deterministic for a
// fixed seed; split(i) derives stream i of the same seed, suitable for one
// stream per thread.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed) {
    SplitMix64 sm{seed};
    for (auto& word : s_) word = sm.next();
  }

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // Uniform in [0, bound), bound >= 1. Bitmask rejection, unbiased.
  std::uint64_t below(std::uint64_t bound) {
    if (bound <= 1) return 0;
    const std::uint64_t mask = mask_for(bound - 1);
    std::uint64_t r;
    do {
      r = next_u64() & mask;
    } while (r >= bound);
    return r;
  }

  Rng split(std::uint64_t stream) const {
    SplitMix64 sm{seed_ + 0x9e3779b97f4a7c15ULL * (stream + 1)};
    return Rng(sm.next());
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }
  static std::uint64_t mask_for(std::uint64_t v) {
    std::uint64_t m = v;
    m |= m >> 1;
    m |= m >> 2;
    m |= m >> 4;
    m |= m >> 8;
    m |= m >> 16;
    m |= m >> 32;
    return m;
  }

  std::uint64_t seed_;
  std::uint64_t s_[4];
};

}  // namespace surface_census

#endif
