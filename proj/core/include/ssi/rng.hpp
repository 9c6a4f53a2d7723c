#pragma once

#include <cstdint>
#include <limits>

namespace ssi {

// splitmix64: a small, fast 64-bit generator with a fully specified output
// sequence. Every simulation session owns one stream; equal seeds give
// bit-identical draws on every platform, which is what makes recorded
// traces replayable as regression fixtures.
class SplitMix64 {
public:
    using result_type = std::uint64_t;

    explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    constexpr std::uint64_t next() noexcept {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    constexpr std::uint64_t operator()() noexcept { return next(); }

    // Uniform double in [0, 1) with 53 significant bits.
    double next_uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform index in [0, n); n must be positive. Clamped because the
    // floating product can round up to n for draws just below 1.
    std::size_t next_index(std::size_t n) noexcept {
        const auto idx = static_cast<std::size_t>(next_uniform() * static_cast<double>(n));
        return idx < n ? idx : n - 1;
    }

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    friend bool operator==(const SplitMix64&, const SplitMix64&) = default;

private:
    std::uint64_t state_;
};

}  // namespace ssi
