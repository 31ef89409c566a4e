#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace scldpc::rng {

// Reproducibility across platforms: mt19937_64 is bit-exact per the
// standard, seeds are derived with splitmix64, bounded integers use
// rejection sampling and gaussians use Box-Muller on explicit 53-bit
// uniforms. std::uniform_int_distribution and friends are avoided because
// their output is implementation-defined.

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Stream seed for substream `index` of master `seed`.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    return splitmix64(splitmix64(seed) ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

/// Uniform draw from [0, bound) by rejection.
inline std::uint64_t bounded(std::mt19937_64& gen, std::uint64_t bound) {
    const std::uint64_t threshold = -bound % bound;  // 2^64 mod bound
    for (;;) {
        const std::uint64_t x = gen();
        if (x >= threshold) {
            return x % bound;
        }
    }
}

/// Uniform double in (0, 1], 53-bit resolution.
inline double uniform_unit(std::mt19937_64& gen) {
    return (static_cast<double>(gen() >> 11) + 1.0) * 0x1.0p-53;
}

/// Standard normal pairs via Box-Muller.
class Gaussian {
public:
    explicit Gaussian(std::mt19937_64& gen) : gen_(gen) {}

    double operator()() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = uniform_unit(gen_);
        const double u2 = uniform_unit(gen_);
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * 3.141592653589793238462643383279502884 * u2;
        spare_ = radius * std::sin(angle);
        have_spare_ = true;
        return radius * std::cos(angle);
    }

private:
    std::mt19937_64& gen_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace scldpc::rng
