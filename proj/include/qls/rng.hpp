// Deterministic, platform-independent pseudo-random numbers.
//
// std::uniform_real_distribution is implementation-defined, so seeded results
// would differ across standard libraries. Everything randomized in qls goes
// through SplitMix64 instead; identical seeds give identical streams anywhere.

#pragma once

#include <cstdint>

namespace qls {

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1), 53-bit resolution.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Uniform integer in [0, n). Multiply-shift map; bias is O(n / 2^64).
    std::uint64_t below(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * n) >> 64);
    }

private:
    std::uint64_t state_;
};

// Expands a master seed into independent per-stream seeds (one per direction,
// run, graph instance, ...) so results do not depend on evaluation order.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
    SplitMix64 mix(master ^ (0x9e3779b97f4a7c15ull * (stream + 1)));
    return mix.next();
}

}  // namespace qls
