#pragma once

#include <cstdint>

namespace copgraph {

/* SplitMix64 (Steele, Lea, Flood 2014). Chosen as the project-wide generator
 * because it is fully specified by ~6 lines of integer arithmetic, so streams
 * are reproducible byte-for-byte across platforms and standard libraries,
 * and because its output stage scrambles even adjacent seeds into
 * statistically independent streams, which makes per-replicate seeding
 * (base_seed XOR rep) safe. */
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform double in [0, 1) with the top 53 bits.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  private:
    std::uint64_t state_;
};

// Stream seed for replicate k of a batch rooted at base_seed.
inline std::uint64_t derive_seed(std::uint64_t base_seed, std::uint64_t k) {
    return base_seed ^ k;
}

} // namespace copgraph
