#pragma once

// Periodized orthogonal wavelet machinery built on the 16-tap symlet filter:
// full-depth analysis/synthesis, a robust noise-level estimate from the
// finest detail band, and universal-threshold soft shrinkage.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <vector>

#include "hff/common.hpp"

namespace hff {

// Least-asymmetric 8-vanishing-moment lowpass filter. The unit tests verify
// the quadrature-mirror identities numerically rather than trusting these
// digits.
inline constexpr std::array<double, 16> symlet8_lowpass = {
    -0.0033824159510061256, -0.0005421323317911481, 0.03169508781149298,
    0.007607487324917605,   -0.1432942383508097,    -0.061273359067658524,
    0.4813596512583722,     0.7771857517005235,     0.3644418948353314,
    -0.05194583810770904,   -0.027219029917056003,  0.049137179673607506,
    0.003808752013890615,   -0.01495225833704823,   -0.0003029205147213668,
    0.0018899503327594609,
};

inline std::array<double, 16> symlet8_highpass() {
    std::array<double, 16> g{};
    for (std::size_t t = 0; t < 16; ++t) {
        const double s = (t % 2 == 0) ? 1.0 : -1.0;
        g[t] = s * symlet8_lowpass[15 - t];
    }
    return g;
}

// Third quartile of the standard normal; divides the median absolute detail
// coefficient to unbias the noise estimate.
inline constexpr double normal_q75 = 0.6744897501960817;

namespace detail {

inline bool is_pow2_size(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

inline void analysis_step(const std::vector<double>& x, std::vector<double>& approx,
                          std::vector<double>& det) {
    const std::size_t n = x.size(), half = n / 2;
    const auto& h = symlet8_lowpass;
    const auto g = symlet8_highpass();
    approx.assign(half, 0.0);
    det.assign(half, 0.0);
    for (std::size_t k = 0; k < half; ++k) {
        double lo = 0.0, hi = 0.0;
        for (std::size_t t = 0; t < 16; ++t) {
            const double v = x[(2 * k + t) % n];
            lo += h[t] * v;
            hi += g[t] * v;
        }
        approx[k] = lo;
        det[k] = hi;
    }
}

inline std::vector<double> synthesis_step(const std::vector<double>& approx,
                                          const std::vector<double>& det) {
    const std::size_t half = approx.size(), n = 2 * half;
    const auto& h = symlet8_lowpass;
    const auto g = symlet8_highpass();
    std::vector<double> x(n, 0.0);
    for (std::size_t k = 0; k < half; ++k)
        for (std::size_t t = 0; t < 16; ++t)
            x[(2 * k + t) % n] += approx[k] * h[t] + det[k] * g[t];
    return x;
}

}  // namespace detail

struct wavelet_pyramid {
    // details[0] is the finest band (half the input length); each following
    // entry halves again; approx is what remains after the last split.
    std::vector<std::vector<double>> details;
    std::vector<double> approx;
};

// Full-depth periodized analysis. Power-of-two input keeps every level
// orthogonal, which the shrinkage and the noise estimate both rely on.
inline wavelet_pyramid dwt_full(std::vector<double> x) {
    require(detail::is_pow2_size(x.size()) && x.size() >= 2,
            "dwt_full: length must be a power of two, at least 2");
    wavelet_pyramid p;
    while (x.size() >= 2) {
        std::vector<double> approx, det;
        detail::analysis_step(x, approx, det);
        p.details.push_back(std::move(det));
        x = std::move(approx);
    }
    p.approx = std::move(x);
    return p;
}

inline std::vector<double> idwt_full(const wavelet_pyramid& p) {
    std::vector<double> x = p.approx;
    for (std::size_t lvl = p.details.size(); lvl-- > 0;)
        x = detail::synthesis_step(x, p.details[lvl]);
    return x;
}

// Noise scale from the finest detail band: median absolute coefficient over
// the coefficients whose 16-sample support stays inside the record, scaled by
// the normal third quartile. Odd-length input drops its last sample for the
// single analysis step.
inline double noise_sigma(const std::vector<double>& x) {
    require(x.size() >= 16, "noise_sigma: need at least 16 samples");
    const std::size_t n_even = x.size() & ~static_cast<std::size_t>(1);
    std::vector<double> head(x.begin(), x.begin() + n_even), approx, det;
    detail::analysis_step(head, approx, det);
    std::vector<double> mags;
    for (std::size_t k = 0; k < det.size(); ++k) {
        if (2 * k + 15 <= x.size() - 1) mags.push_back(std::abs(det[k]));
    }
    require(!mags.empty(), "noise_sigma: record too short for one full window");
    std::sort(mags.begin(), mags.end());
    const std::size_t mid = mags.size() / 2;
    const double med = (mags.size() % 2 == 1)
                           ? mags[mid]
                           : 0.5 * (mags[mid - 1] + mags[mid]);
    return med / normal_q75;
}

// Universal-threshold soft shrinkage. The record is reflected onto the next
// power of two, analyzed to full depth, and detail levels j0..J are shrunk,
// counting j = 1 as the coarsest band. The default leaves the three coarsest
// bands alone so the large-scale trend passes through.
inline std::vector<double> denoise(const std::vector<double>& x, std::size_t j0 = 4) {
    require(x.size() >= 16, "denoise: need at least 16 samples");
    const std::size_t n = x.size();
    std::size_t nn = 1;
    while (nn < n) nn <<= 1;
    std::vector<double> padded(nn);
    for (std::size_t i = 0; i < nn; ++i) {
        // forward copy then mirrored copy, tiled
        const std::size_t phase = i % (2 * n);
        padded[i] = phase < n ? x[phase] : x[2 * n - 1 - phase];
    }
    const double sigma = noise_sigma(x);
    const double tau = sigma * std::sqrt(2.0 * std::log(static_cast<double>(nn)));

    wavelet_pyramid p = dwt_full(std::move(padded));
    const std::size_t levels = p.details.size();  // == J
    for (std::size_t idx = 0; idx < levels; ++idx) {
        const std::size_t j = levels - idx;  // details[0] is finest == level J
        if (j < j0) continue;
        for (double& w : p.details[idx]) {
            const double mag = std::abs(w) - tau;
            w = mag > 0.0 ? (w > 0.0 ? mag : -mag) : 0.0;
        }
    }
    std::vector<double> rec = idwt_full(p);
    rec.resize(n);
    return rec;
}

}  // namespace hff
