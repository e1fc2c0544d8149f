#pragma once

#include <cmath>
#include <cstdint>

namespace hdx {

/// Deterministic, platform-independent splittable RNG (splitmix64 core).
/// All randomness in the project flows through this so that a fixed seed
/// gives byte-identical output everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Integer in [0, bound).
    std::uint64_t below(std::uint64_t bound) { return next_u64() % bound; }

    /// Standard normal via Box-Muller (no cached spare, for determinism
    /// independent of call parity).
    double gaussian() {
        double u1 = uniform();
        double u2 = uniform();
        while (u1 <= 0.0)
            u1 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
    }

    /// Independent stream derived from this seed and a stream id.
    Rng split(std::uint64_t stream) const {
        Rng mixer(state_ ^ (0x6a09e667f3bcc909ull + stream * 0x3c6ef372fe94f82bull));
        return Rng(mixer.next_u64());
    }

private:
    std::uint64_t state_;
};

} // namespace hdx
