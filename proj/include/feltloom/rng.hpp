#pragma once

#include <cstdint>

namespace feltloom {

// Deterministic 64-bit generator (splitmix64). Simulation runs depend on
// bit-stable streams across compilers, which the std distributions do not
// guarantee, so the few random draws we need are generated here.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1).
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Standard normal via Box-Muller (one value per call, no caching so the
    // stream position stays easy to reason about).
    double next_gaussian();

    // Independent child stream, e.g. one per coil pass.
    SplitMix64 split() { return SplitMix64(next_u64() ^ 0xA02B5CB1D53F8E11ULL); }

  private:
    std::uint64_t state_;
};

}  // namespace feltloom
