#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "hff/rng.hpp"
#include "hff/wavelet.hpp"
#include "oracles.hpp"

namespace {

std::vector<double> gaussian_vector(std::size_t n, std::uint64_t seed, double sigma = 1.0) {
    hff::gaussian_stream gs(seed, 0);
    std::vector<double> x(n);
    for (auto& v : x) v = sigma * gs.next();
    return x;
}

double energy(const std::vector<double>& v) {
    return std::inner_product(v.begin(), v.end(), v.begin(), 0.0);
}

}  // namespace

TEST_CASE("filter satisfies the quadrature-mirror identities", "[wavelet]") {
    const auto& h = hff::symlet8_lowpass;
    double sum = 0.0, e = 0.0;
    for (const double v : h) {
        sum += v;
        e += v * v;
    }
    REQUIRE(std::abs(sum - std::sqrt(2.0)) < 1e-12);
    REQUIRE(std::abs(e - 1.0) < 1e-12);
    for (std::size_t k = 1; k < 8; ++k) {
        double dot = 0.0;
        for (std::size_t t = 0; t + 2 * k < 16; ++t) dot += h[t] * h[t + 2 * k];
        REQUIRE(std::abs(dot) < 1e-12);
    }
    // highpass mirrors the energy and is orthogonal to the lowpass
    const auto g = hff::symlet8_highpass();
    double eg = 0.0, cross = 0.0;
    for (std::size_t t = 0; t < 16; ++t) {
        eg += g[t] * g[t];
        cross += g[t] * h[t];
    }
    REQUIRE(std::abs(eg - 1.0) < 1e-12);
    REQUIRE(std::abs(cross) < 1e-12);
}

TEST_CASE("one analysis level is an orthogonal map", "[wavelet]") {
    const std::vector<double> lo(hff::symlet8_lowpass.begin(), hff::symlet8_lowpass.end());
    const auto gh = hff::symlet8_highpass();
    const std::vector<double> hi(gh.begin(), gh.end());
    for (const std::size_t n : {32u, 64u, 128u})
        REQUIRE(oracle::analysis_orthogonality_defect(lo, hi, n) < 1e-12);
}

TEST_CASE("analysis then synthesis is the identity", "[wavelet]") {
    for (const std::size_t n : {16u, 64u, 1024u}) {
        const std::vector<double> x = gaussian_vector(n, 100 + n);
        const hff::wavelet_pyramid p = hff::dwt_full(x);
        const std::vector<double> back = hff::idwt_full(p);
        REQUIRE(back.size() == n);
        for (std::size_t i = 0; i < n; ++i)
            REQUIRE(back[i] == Catch::Approx(x[i]).margin(1e-11));
    }
}

TEST_CASE("pyramid preserves energy", "[wavelet]") {
    const std::vector<double> x = gaussian_vector(512, 3);
    const hff::wavelet_pyramid p = hff::dwt_full(x);
    double acc = energy(p.approx);
    std::size_t coeffs = p.approx.size();
    for (const auto& d : p.details) {
        acc += energy(d);
        coeffs += d.size();
    }
    REQUIRE(coeffs == 512);
    REQUIRE(acc == Catch::Approx(energy(x)).epsilon(1e-12));
}

TEST_CASE("pyramid geometry", "[wavelet]") {
    const hff::wavelet_pyramid p = hff::dwt_full(gaussian_vector(256, 4));
    REQUIRE(p.details.size() == 8);
    REQUIRE(p.details[0].size() == 128);  // finest first
    REQUIRE(p.details[7].size() == 1);
    REQUIRE(p.approx.size() == 1);
    REQUIRE_THROWS_AS(hff::dwt_full(std::vector<double>(100, 0.0)), hff::error);
}

TEST_CASE("noise estimate is calibrated on white noise", "[wavelet]") {
    const double sigma = 0.7;
    const double got = hff::noise_sigma(gaussian_vector(8192, 11, sigma));
    REQUIRE(got == Catch::Approx(sigma).epsilon(0.08));
}

TEST_CASE("noise estimate ignores a smooth trend", "[wavelet]") {
    const double sigma = 0.05;
    std::vector<double> x = gaussian_vector(8192, 12, sigma);
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double t = static_cast<double>(i) / 8192.0;
        x[i] += 3.0 + 2.0 * t - 5.0 * t * t + std::sin(2.0 * hff::pi * t);
    }
    const double got = hff::noise_sigma(x);
    REQUIRE(got == Catch::Approx(sigma).epsilon(0.10));
}

TEST_CASE("noise estimate handles odd lengths", "[wavelet]") {
    const std::vector<double> x = gaussian_vector(1001, 13, 1.0);
    REQUIRE(hff::noise_sigma(x) == Catch::Approx(1.0).epsilon(0.2));
    REQUIRE_THROWS_AS(hff::noise_sigma(std::vector<double>(8, 0.0)), hff::error);
}

TEST_CASE("shrinkage reduces noise on a smooth target", "[wavelet]") {
    const std::size_t n = 4096;
    std::vector<double> clean(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(n);
        clean[i] = std::sin(2.0 * hff::pi * 3.0 * t) + 0.5 * t;
    }
    std::vector<double> noisy = clean;
    hff::gaussian_stream gs(21, 0);
    for (auto& v : noisy) v += 0.25 * gs.next();

    const std::vector<double> rec = hff::denoise(noisy);
    REQUIRE(rec.size() == n);
    double mse_raw = 0.0, mse_rec = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mse_raw += (noisy[i] - clean[i]) * (noisy[i] - clean[i]);
        mse_rec += (rec[i] - clean[i]) * (rec[i] - clean[i]);
    }
    REQUIRE(mse_rec < 0.25 * mse_raw);
}

TEST_CASE("shrinkage keeps a noiseless record nearly intact", "[wavelet]") {
    const std::size_t n = 1024;
    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i)
        x[i] = 2.0 + std::cos(2.0 * hff::pi * static_cast<double>(i) / 256.0);
    const std::vector<double> rec = hff::denoise(x);
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) worst = std::max(worst, std::abs(rec[i] - x[i]));
    REQUIRE(worst < 0.05);
}

TEST_CASE("non power-of-two records go through the reflection pad", "[wavelet]") {
    const std::vector<double> x = gaussian_vector(3000, 31, 0.5);
    const std::vector<double> rec = hff::denoise(x);
    REQUIRE(rec.size() == 3000);
    // white noise in, mostly zeros out: shrinkage should kill most energy
    REQUIRE(energy(rec) < 0.5 * energy(x));
}
