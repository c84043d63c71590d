#pragma once

// Amplitude-spectrum preparation: the DC offset rule, |theta|^2, and the
// moving-window RMS regularization that the feature scan consumes.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "hff/common.hpp"
#include "hff/fft.hpp"

namespace hff {

struct offset_result {
    std::vector<double> shifted;  // input plus the constant
    double constant = 0.0;        // 0 when the rule already held
};

// Adds the smallest constant making |theta_0| at least twice the largest
// remaining amplitude. A signal that is identically zero gets +1 so the
// spectrum is not all zeros. theta_{k>=1} are shift-invariant, so only the
// DC bin moves.
inline offset_result enforce_offset(std::vector<double> x) {
    offset_result out;
    if (x.empty()) {
        out.shifted = std::move(x);
        return out;
    }
    const cvec theta = dft(x);
    double peak = 0.0;
    for (std::size_t k = 1; k < theta.size(); ++k)
        peak = std::max(peak, std::abs(theta[k]));
    const double dc = theta[0].real();
    if (std::abs(dc) >= 2.0 * peak && (peak > 0.0 || std::abs(dc) > 0.0)) {
        out.shifted = std::move(x);
        return out;
    }
    out.constant = peak > 0.0 ? (2.0 * peak - dc) / static_cast<double>(x.size()) : 1.0;
    for (auto& v : x) v += out.constant;
    out.shifted = std::move(x);
    return out;
}

inline std::vector<double> power_spectrum(const std::vector<double>& x) {
    const cvec theta = dft(x);
    std::vector<double> p(theta.size());
    for (std::size_t k = 0; k < theta.size(); ++k) p[k] = std::norm(theta[k]);
    return p;
}

// RMS of |theta| over the centered window [k-m, k+m]. Output index 0
// corresponds to bin m; bins without a full window are dropped. Each window
// is summed afresh: slightly slower than a running sum but free of the
// cancellation drift a running sum accumulates over long spectra.
inline std::vector<double> regularized_spectrum(const std::vector<double>& power,
                                                std::size_t m) {
    const std::size_t n = power.size();
    std::vector<double> out;
    if (n < 2 * m + 1) return out;
    out.resize(n - 2 * m);
    const double count = static_cast<double>(2 * m + 1);
    for (std::size_t k = m; k + m < n; ++k) {
        double acc = 0.0;
        for (std::size_t l = k - m; l <= k + m; ++l) acc += power[l];
        out[k - m] = std::sqrt(acc / count);
    }
    return out;
}

}  // namespace hff
