#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace cricnet {

// Portable seedable generator used for every stochastic operation in the
// library. Results must be bit-reproducible across platforms and
// implementations, so the full sequence is pinned here rather than relying
// on <random> distributions (which are implementation-defined).
//
// Generator: SplitMix64 (Steele, Lea & Flood 2014).
//   state <- state + 0x9E3779B97F4A7C15
//   z <- state; z <- (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z <- (z ^ (z >> 27)) * 0x94D049BB133111EB
//   output: z ^ (z >> 31)
//
// Derived draws (all defined in terms of next_u64()):
//   next_double():   (next_u64() >> 11) * 2^-53, uniform on [0, 1)
//   next_below(n):   unbiased rejection sampling; draw u = next_u64(), reject
//                    while u >= 2^64 - (2^64 mod n), return u % n
//   next_normal():   Box-Muller, z = sqrt(-2 ln u1) * cos(2 pi u2) with
//                    u1 = 1 - next_double() (so u1 in (0, 1]), u2 = next_double()
//
// Substreams: stream k of a base seed s is an independent generator seeded
// with substream_seed(s, k) = finalizer(s + (k + 1) * 0x9E3779B97F4A7C15),
// where finalizer is the SplitMix64 output scrambling above. Parallel
// consumers (e.g. bootstrap replicates) must use this mapping.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Uniform integer in [0, n), unbiased. n must be >= 1.
    std::uint64_t next_below(std::uint64_t n) {
        const std::uint64_t limit = 0ULL - (0ULL - n) % n;  // 2^64 - (2^64 mod n)
        std::uint64_t u = next_u64();
        while (limit != 0 && u >= limit) u = next_u64();
        return u % n;
    }

    bool next_bernoulli(double p) { return next_double() < p; }

    double next_normal() {
        const double u1 = 1.0 - next_double();
        const double u2 = next_double();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }

    static std::uint64_t substream_seed(std::uint64_t base, std::uint64_t stream) {
        std::uint64_t z = base + (stream + 1) * 0x9E3779B97F4A7C15ULL;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

  private:
    std::uint64_t state_;
};

}  // namespace cricnet
