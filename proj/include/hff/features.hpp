#pragma once

// Level-scan feature extraction on a regularized amplitude spectrum, plus the
// finite-difference rule that picks the smoothing half-width.
//
// For a threshold level x the scan defines
//   a(x): first bin in the search zone at or below x,
//   b(x): rightmost peak position on [a(x), zone end],
// and keeps the levels that reproduce themselves at their own peak,
// i.e. value(b(x)) == x with b(x) > a(x). Among those the winner maximizes
// the drop d(x) = x - min(zone start .. b(x)); the reported feature is the
// gap b - a in bins together with that drop.

#include <algorithm>
#include <cstddef>
#include <vector>

#include "hff/common.hpp"
#include "hff/spectrum.hpp"

namespace hff {

struct feature_result {
    double gap = 0.0;    // b - a in bins, 0 when no level qualifies
    double depth = 0.0;  // d at the winning level
    double level = 0.0;  // the winning threshold itself
    std::size_t a = 0;   // original bin indices
    std::size_t b = 0;
};

// `smoothed[j]` is the regularized amplitude at original bin j + m. Only bins
// m..n/2 are scanned: the upper half of the spectrum mirrors the lower and
// would always shadow it. Ascending sort plus one two-pointer sweep over the
// distinct levels gives O(L log L) overall.
inline feature_result extract_features(const std::vector<double>& smoothed,
                                       std::size_t m, std::size_t n) {
    feature_result out;
    out.a = out.b = m;
    if (smoothed.empty() || n / 2 < m) return out;
    const std::size_t last = std::min(n / 2 - m, smoothed.size() - 1);
    const std::size_t len = last + 1;

    std::vector<double> pmin(len);
    pmin[0] = smoothed[0];
    for (std::size_t j = 1; j < len; ++j)
        pmin[j] = std::min(pmin[j - 1], smoothed[j]);

    // rightmost argmax of every suffix
    std::vector<std::size_t> sufarg(len);
    sufarg[len - 1] = len - 1;
    for (std::size_t j = len - 1; j-- > 0;)
        sufarg[j] = smoothed[j] > smoothed[sufarg[j + 1]] ? j : sufarg[j + 1];

    std::vector<double> levels(smoothed.begin(), smoothed.begin() + len);
    std::sort(levels.begin(), levels.end(), std::greater<>());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

    bool found = false;
    double best_d = 0.0, best_level = 0.0;
    std::size_t best_a = 0, best_b = 0;
    std::size_t aj = 0;
    for (const double x : levels) {
        while (smoothed[aj] > x) ++aj;  // levels descend, so a(x) only grows
        const std::size_t b = sufarg[aj];
        if (smoothed[b] != x) continue;  // exact equality: x must be its own peak
        if (b <= aj) continue;
        const double d = x - pmin[b];
        // ties on d resolve to the larger level, which is visited first
        if (!found || d > best_d) {
            found = true;
            best_d = d;
            best_level = x;
            best_a = aj;
            best_b = b;
        }
    }
    if (!found) return out;
    out.gap = static_cast<double>(best_b - best_a);
    out.depth = best_d;
    out.level = best_level;
    out.a = best_a + m;
    out.b = best_b + m;
    return out;
}

inline feature_result features_at(const std::vector<double>& power,
                                  std::size_t m) {
    return extract_features(regularized_spectrum(power, m), m, power.size());
}

// Half-width selection: sweep m = 1..cap, locate the largest jump in the gap
// sequence (earliest on ties), then keep whichever side of the jump carries
// the larger gap.
inline std::size_t select_window(const std::vector<double>& power,
                                 std::size_t cap) {
    const std::size_t n = power.size();
    std::size_t hard = n >= 3 ? (n - 1) / 2 : 1;
    const std::size_t kmax = std::min(cap, hard);
    require(kmax >= 2, "select_window: need at least two candidate widths");
    std::vector<double> g(kmax + 1, 0.0);
    for (std::size_t m = 1; m <= kmax; ++m) g[m] = features_at(power, m).gap;
    std::size_t best_i = 2;
    double best_jump = -1.0;
    for (std::size_t i = 2; i <= kmax; ++i) {
        const double jump = std::abs(g[i] - g[i - 1]);
        if (jump > best_jump) {
            best_jump = jump;
            best_i = i;
        }
    }
    return g[best_i] > g[best_i - 1] ? best_i : best_i - 1;
}

}  // namespace hff
