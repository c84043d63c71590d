#pragma once

// Shared basics for the high-frequency feature toolkit: error type, numeric
// constants, and small argument checks used across module boundaries.

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace hff {

inline constexpr double pi = 3.14159265358979323846264338327950288;

class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

inline void require(bool ok, const std::string& what) {
    if (!ok) throw error(what);
}

// Capped at floor((n-1)/2) so every window in the sweep stays valid.
inline std::size_t default_window_cap(std::size_t n) {
    const auto root = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n))));
    const std::size_t hard = n >= 3 ? (n - 1) / 2 : 1;
    return std::min(root, hard);
}

}  // namespace hff
