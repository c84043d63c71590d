#pragma once

// Counter-based Gaussian generator. Each (seed, stream) pair owns an
// independent deterministic sequence, so a pool of replicates can be computed
// serially or split across threads and still produce identical numbers.

#include <cmath>
#include <cstdint>

#include "hff/common.hpp"

namespace hff {

namespace detail {

inline std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
}

}  // namespace detail

class gaussian_stream {
public:
    gaussian_stream(std::uint64_t seed, std::uint64_t stream)
        : state_(detail::mix64(seed * 0x9E3779B97F4A7C15ull + 0xD1B54A32D192ED03ull) ^
                 detail::mix64(stream * 0x2545F4914F6CDD1Dull + 0x9E3779B97F4A7C15ull)) {}

    double next() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        // Box-Muller on uniforms from (0,1]; the +1 keeps log() finite.
        const double u1 = (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
        const double u2 = (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double ang = 2.0 * pi * u2;
        spare_ = r * std::sin(ang);
        have_spare_ = true;
        return r * std::cos(ang);
    }

    void fill(double* dst, std::size_t count) {
        for (std::size_t i = 0; i < count; ++i) dst[i] = next();
    }

private:
    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state_;
        z ^= z >> 30;
        z *= 0xBF58476D1CE4E5B9ull;
        z ^= z >> 27;
        z *= 0x94D049BB133111EBull;
        z ^= z >> 31;
        return z;
    }

    std::uint64_t state_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace hff
