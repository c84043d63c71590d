#pragma once

// Discrete Fourier transform without external dependencies. Power-of-two
// lengths run through an iterative radix-2 kernel with a precomputed twiddle
// table; every other length is handled by Bluestein's chirp-z reduction to a
// padded power-of-two convolution, so arbitrary n costs O(n log n).

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "hff/common.hpp"

namespace hff {

using cvec = std::vector<std::complex<double>>;

namespace detail {

inline bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

inline void fft_pow2(cvec& a, bool inverse) {
    const std::size_t n = a.size();
    if (n < 2) return;
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    // One table entry per angle; avoids error growth from repeated products.
    cvec tw(n / 2);
    const double sign = inverse ? 1.0 : -1.0;
    for (std::size_t k = 0; k < n / 2; ++k) {
        const double ang = sign * 2.0 * pi * static_cast<double>(k) / static_cast<double>(n);
        tw[k] = {std::cos(ang), std::sin(ang)};
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const std::size_t stride = n / len;
        for (std::size_t i = 0; i < n; i += len) {
            for (std::size_t k = 0; k < len / 2; ++k) {
                const std::complex<double> w = tw[k * stride];
                const std::complex<double> u = a[i + k];
                const std::complex<double> v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
            }
        }
    }
}

// exp(-i pi k^2 / n) evaluated with k^2 reduced mod 2n to keep the argument
// small; the chirp is 2n-periodic in k^2.
inline std::complex<double> chirp(std::size_t k, std::size_t n, double sign) {
    const std::uint64_t q = (static_cast<std::uint64_t>(k) * k) % (2 * static_cast<std::uint64_t>(n));
    const double ang = sign * pi * static_cast<double>(q) / static_cast<double>(n);
    return {std::cos(ang), std::sin(ang)};
}

inline void fft_bluestein(cvec& a, bool inverse) {
    const std::size_t n = a.size();
    const double sign = inverse ? 1.0 : -1.0;
    std::size_t m = 1;
    while (m < 2 * n - 1) m <<= 1;

    cvec fa(m), fb(m);
    for (std::size_t i = 0; i < n; ++i)
        fa[i] = a[i] * chirp(i, n, sign);
    fb[0] = chirp(0, n, -sign);
    for (std::size_t i = 1; i < n; ++i)
        fb[i] = fb[m - i] = chirp(i, n, -sign);

    fft_pow2(fa, false);
    fft_pow2(fb, false);
    for (std::size_t i = 0; i < m; ++i) fa[i] *= fb[i];
    fft_pow2(fa, true);
    const double scale = 1.0 / static_cast<double>(m);
    for (std::size_t k = 0; k < n; ++k)
        a[k] = fa[k] * scale * chirp(k, n, sign);
}

inline void transform(cvec& a, bool inverse) {
    if (a.size() < 2) return;
    if (is_pow2(a.size()))
        fft_pow2(a, inverse);
    else
        fft_bluestein(a, inverse);
}

}  // namespace detail

// Forward transform, no normalization: X_k = sum_i x_i e^{-2 pi i k i / n}.
inline cvec dft(cvec x) {
    detail::transform(x, false);
    return x;
}

inline cvec dft(const std::vector<double>& x) {
    cvec cx(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) cx[i] = {x[i], 0.0};
    return dft(std::move(cx));
}

// Inverse transform with the 1/n factor, so idft(dft(x)) == x.
inline cvec idft(cvec x) {
    detail::transform(x, true);
    const double scale = x.empty() ? 1.0 : 1.0 / static_cast<double>(x.size());
    for (auto& v : x) v *= scale;
    return x;
}

}  // namespace hff
