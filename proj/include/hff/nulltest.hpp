#pragma once

// Monte Carlo significance machinery. A cloud of (gap, depth) pairs is drawn
// from the null model "trend plus white noise", and the observed pair is
// scored by the smallest empirical tail probability among cloud points it
// dominates. Replicates are keyed by index, so any thread split of the loop
// reproduces the serial numbers bit for bit.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <thread>
#include <vector>

#include "hff/common.hpp"
#include "hff/features.hpp"
#include "hff/rng.hpp"
#include "hff/spectrum.hpp"
#include "hff/wavelet.hpp"

namespace hff {

struct cloud_point {
    double gap = 0.0;
    double depth = 0.0;
};

// Fraction of cloud points at or above (g, d) in both coordinates.
inline double empirical_p(const std::vector<cloud_point>& cloud, double g, double d) {
    if (cloud.empty()) return 1.0;
    std::size_t hits = 0;
    for (const auto& c : cloud)
        if (c.gap >= g && c.depth >= d) ++hits;
    return static_cast<double>(hits) / static_cast<double>(cloud.size());
}

// Smallest tail probability among cloud points the statistic dominates; 1
// when it dominates none, so an off-cloud statistic can only look worse.
inline double p_value(const std::vector<cloud_point>& cloud, double g_hat, double d_hat) {
    double best = 1.0;
    bool any = false;
    for (const auto& c : cloud) {
        if (c.gap <= g_hat && c.depth <= d_hat) {
            any = true;
            best = std::min(best, empirical_p(cloud, c.gap, c.depth));
        }
    }
    return any ? best : 1.0;
}

// Most extreme tail probability the cloud can produce by itself; the p-value
// is compared against this, never against a fixed nominal level.
inline double alpha_star(const std::vector<cloud_point>& cloud) {
    double best = 1.0;
    for (const auto& c : cloud)
        best = std::min(best, empirical_p(cloud, c.gap, c.depth));
    return best;
}

// One null replicate: trend + sigma * noise, offset rule, regularized
// spectrum at the fixed half-width, feature scan.
inline cloud_point null_replicate(const std::vector<double>& trend, double sigma,
                                  std::size_t m, std::uint64_t seed,
                                  std::uint64_t index) {
    std::vector<double> y(trend.size());
    gaussian_stream gs(seed, index + 1);  // stream 0 belongs to the observed record
    for (std::size_t i = 0; i < y.size(); ++i) y[i] = trend[i] + sigma * gs.next();
    const offset_result off = enforce_offset(std::move(y));
    const std::vector<double> power = power_spectrum(off.shifted);
    const feature_result f = features_at(power, m);
    return {f.gap, f.depth};
}

inline std::vector<cloud_point> simulate_null(const std::vector<double>& trend,
                                              double sigma, std::size_t count,
                                              std::size_t m, std::uint64_t seed,
                                              unsigned threads = 0) {
    std::vector<cloud_point> cloud(count);
    if (threads == 0) threads = std::thread::hardware_concurrency();
    if (threads <= 1 || count < 2) {
        for (std::size_t k = 0; k < count; ++k)
            cloud[k] = null_replicate(trend, sigma, m, seed, k);
        return cloud;
    }
    threads = std::min<unsigned>(threads, static_cast<unsigned>(count));
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, t]() {
            for (std::size_t k = t; k < count; k += threads)
                cloud[k] = null_replicate(trend, sigma, m, seed, k);
        });
    }
    for (auto& th : pool) th.join();
    return cloud;
}

struct test_report {
    std::size_t m_hat = 0;
    double sigma_hat = 0.0;
    feature_result statistic;
    double offset_constant = 0.0;
    double p = 1.0;
    double alpha = 1.0;
    bool reject = false;
    std::vector<cloud_point> cloud;
};

// Full pipeline against a caller-supplied null trend (either the known truth
// or an estimate). `max_m` bounds the half-width sweep; 0 means the default
// ceil(sqrt(n)) cap. `sigma` <= 0 means estimate it from the record.
inline test_report run_test(const std::vector<double>& y,
                            const std::vector<double>& null_trend,
                            std::size_t replicates, std::uint64_t seed,
                            std::size_t max_m = 0, double sigma = 0.0,
                            unsigned threads = 0) {
    require(y.size() == null_trend.size(), "run_test: trend length mismatch");
    test_report rep;
    const offset_result off = enforce_offset(y);
    rep.offset_constant = off.constant;
    const std::vector<double> power = power_spectrum(off.shifted);
    rep.m_hat = select_window(power, max_m == 0 ? default_window_cap(y.size()) : max_m);
    rep.statistic = features_at(power, rep.m_hat);
    rep.sigma_hat = sigma > 0.0 ? sigma : noise_sigma(y);
    rep.cloud = simulate_null(null_trend, rep.sigma_hat, replicates, rep.m_hat, seed, threads);
    rep.p = p_value(rep.cloud, rep.statistic.gap, rep.statistic.depth);
    rep.alpha = alpha_star(rep.cloud);
    rep.reject = rep.p <= rep.alpha;
    return rep;
}

}  // namespace hff
