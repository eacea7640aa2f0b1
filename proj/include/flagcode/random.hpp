#ifndef FLAGCODE_RANDOM_HPP
#define FLAGCODE_RANDOM_HPP

#include <cstdint>

namespace flagcode {

/// SplitMix64 in counter mode: the i-th output is mix(seed + (i + 1) * gamma),
/// so a stream is fully determined by (seed, position) and independent
/// streams are obtained with derive_seed. Bounded draws use rejection so
/// results do not depend on the standard library's distributions.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) noexcept : seed_(seed) {}

    static std::uint64_t mix(std::uint64_t z) noexcept {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Seed for an independent stream, e.g. one per simulation trial.
    static std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept {
        return mix(mix(seed) ^ (index * 0xd1b54a32d192ed03ULL + 0x8cb92ba72f3d8dd7ULL));
    }

    std::uint64_t next() noexcept {
        ++counter_;
        return mix(seed_ + counter_ * kGamma);
    }

    /// Uniform in [0, bound), bound >= 1.
    std::uint64_t uniform(std::uint64_t bound) noexcept {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x;
        do x = next();
        while (x >= limit);
        return x % bound;
    }

    /// Uniform in [0, 1) with 53 random bits.
    double unit() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) noexcept { return unit() < p; }

    std::uint64_t position() const noexcept { return counter_; }

private:
    static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;
    std::uint64_t seed_;
    std::uint64_t counter_ = 0;
};

}  // namespace flagcode

#endif  // FLAGCODE_RANDOM_HPP
