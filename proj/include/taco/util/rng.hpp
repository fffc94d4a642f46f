#pragma once

#include <cstdint>

namespace taco::rng {

// SplitMix64 output mixing function (Steele/Lea/Vigna). Also serves as the
// key-derivation hash for splitting independent streams.
constexpr std::uint64_t splitmix64_mix(std::uint64_t x) {
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Derives an independent stream key from a base seed and up to two indices.
// Streams keyed this way are reproducible independent of iteration order.
constexpr std::uint64_t derive_key(std::uint64_t seed, std::uint64_t a,
                                   std::uint64_t b = 0) {
    std::uint64_t k = splitmix64_mix(seed + 0x9e3779b97f4a7c15ULL);
    k = splitmix64_mix(k ^ (a + 0x9e3779b97f4a7c15ULL));
    k = splitmix64_mix(k ^ (b + 0x9e3779b97f4a7c15ULL));
    return k;
}

// Counter-based SplitMix64 generator.
class SplitMix64 {
  public:
    explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}

    constexpr std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        return splitmix64_mix(z);
    }

    // Uniform double in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) {
        return lo + (hi - lo) * uniform();
    }

    // Uniform integer in [0, n). Modulo bias is negligible for small n.
    std::uint64_t below(std::uint64_t n) { return next() % n; }

  private:
    std::uint64_t state_;
};

} // namespace taco::rng
