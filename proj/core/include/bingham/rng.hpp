#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace bingham {

/// Deterministic random stream identified by a (seed, stream) pair: identical
/// pairs reproduce identical draw sequences. Uniforms take the top 53 bits of
/// mt19937_64 output and normals use the Marsaglia polar transform, so the
/// sequences do not depend on the standard library's unspecified distribution
/// implementations.
class RngState {
public:
    explicit RngState(std::uint64_t seed, std::uint64_t stream = 0)
        : seed_(seed), stream_(stream), engine_(mix(seed, stream)) {}

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream() const { return stream_; }

    /// Uniform on [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Standard normal (polar method; exact tail, no table truncation).
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * uniform() - 1.0;
            v = 2.0 * uniform() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double f = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * f;
        has_spare_ = true;
        return u * f;
    }

private:
    static std::uint64_t splitmix(std::uint64_t& state) {
        state += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Hash (seed, stream) into a 64-bit engine seed so that nearby pairs give
    // unrelated streams.
    static std::uint64_t mix(std::uint64_t seed, std::uint64_t stream) {
        std::uint64_t state = seed;
        const std::uint64_t h = splitmix(state);
        state ^= stream * 0xD1342543DE82EF95ULL + 0x2545F4914F6CDD1DULL;
        return h ^ splitmix(state);
    }

    std::uint64_t seed_;
    std::uint64_t stream_;
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace bingham
