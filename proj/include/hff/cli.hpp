#pragma once

// Command-line wiring: generate benchmark records, fit trends, estimate and
// shrink noise, extract spectrum features, and run the significance test.
// All reports are JSON with a fixed key order and no timestamps, so repeated
// runs with the same inputs produce identical bytes.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hff/common.hpp"
#include "hff/features.hpp"
#include "hff/io.hpp"
#include "hff/nulltest.hpp"
#include "hff/spectrum.hpp"
#include "hff/testsignal.hpp"
#include "hff/trend.hpp"
#include "hff/wavelet.hpp"

namespace hff::cli {

using ordered_json = nlohmann::ordered_json;

inline signal_params preset_by_name(const std::string& name) {
    if (name == "full") return full_scale();
    if (name == "desk") return desk_scale();
    if (name == "desk-flat") return desk_flat();
    throw error("unknown preset: " + name);
}

inline void emit(const ordered_json& j, const std::string& out_path) {
    const std::string text = j.dump(2) + "\n";
    if (out_path.empty())
        std::cout << text;
    else
        write_text_atomic(out_path, text);
}

inline ordered_json feature_json(const feature_result& f, std::size_t n,
                                 double dt, bool has_dt) {
    ordered_json j;
    j["gap_bins"] = f.gap;
    j["depth"] = f.depth;
    j["level"] = f.level;
    j["a_bin"] = f.a;
    j["b_bin"] = f.b;
    if (has_dt && dt > 0.0) {
        // bin k spans k cycles per record; per time unit that is k/(n*dt)
        j["peak_frequency"] = static_cast<double>(f.b) /
                              (static_cast<double>(n) * dt);
    }
    return j;
}

inline int run_cli(int argc, char** argv) {
    CLI::App app{"transient high-frequency feature detection in noisy records"};
    app.require_subcommand(1);

    // ------------------------------------------------------------------ gen
    auto* gen = app.add_subcommand("gen", "write a synthetic benchmark record");
    std::string gen_preset = "desk";
    std::string gen_out, gen_trend_out;
    double gen_sigma_ratio = -1.0, gen_sigma = -1.0;
    std::uint64_t gen_seed = 1;
    bool gen_no_time = false, gen_noiseless = false;
    gen->add_option("--preset", gen_preset, "full | desk | desk-flat");
    gen->add_option("-o,--out", gen_out, "output CSV (time,value)")->required();
    gen->add_option("--trend-out", gen_trend_out, "also write the noiseless trend here");
    gen->add_option("--sigma-ratio", gen_sigma_ratio, "noise sigma as a multiple of the burst amplitude");
    gen->add_option("--sigma", gen_sigma, "noise sigma, absolute (overrides ratio)");
    gen->add_option("--seed", gen_seed, "noise seed");
    gen->add_flag("--no-time", gen_no_time, "write the value column only");
    gen->add_flag("--noiseless", gen_noiseless, "omit the noise term");

    // ---------------------------------------------------------------- trend
    auto* trend = app.add_subcommand("trend", "piecewise-linear trend fit");
    std::string tr_in, tr_out;
    double tr_lambda = -1.0, tr_frac = -1.0, tr_tol = 1e-8;
    int tr_iters = 200;
    trend->add_option("-i,--in", tr_in, "input CSV")->required();
    trend->add_option("-o,--out", tr_out, "fitted trend CSV")->required();
    trend->add_option("--lambda", tr_lambda, "penalty, absolute");
    trend->add_option("--lambda-frac", tr_frac, "penalty as a fraction of lambda_max");
    trend->add_option("--tol", tr_tol, "relative duality-gap tolerance");
    trend->add_option("--max-iter", tr_iters, "iteration cap");

    // ---------------------------------------------------------------- noise
    auto* noise = app.add_subcommand("noise", "noise level estimate and optional shrinkage");
    std::string no_in, no_out;
    std::size_t no_keep = 4;
    noise->add_option("-i,--in", no_in, "input CSV")->required();
    noise->add_option("--denoise-out", no_out, "write the shrunk record here");
    noise->add_option("--coarsest-kept", no_keep,
                      "first detail level that gets thresholded (1 = coarsest)");

    // -------------------------------------------------------------- extract
    auto* extract = app.add_subcommand("extract", "spectrum feature scan");
    std::string ex_in, ex_json;
    std::size_t ex_m = 0, ex_maxm = 0;
    extract->add_option("-i,--in", ex_in, "input CSV")->required();
    extract->add_option("-m", ex_m, "smoothing half-width (0 = select automatically)");
    extract->add_option("--max-m", ex_maxm, "half-width sweep cap (0 = ceil(sqrt(n)))");
    extract->add_option("--json", ex_json, "write the report here instead of stdout");

    // ----------------------------------------------------------------- test
    auto* test = app.add_subcommand("test", "Monte Carlo significance test");
    std::string te_in, te_json, te_trend_file, te_mode = "l1", te_cloud_out;
    std::size_t te_reps = 200, te_maxm = 0;
    std::uint64_t te_seed = 1;
    unsigned te_threads = 0;
    double te_lambda = -1.0, te_frac = 1e-2, te_sigma = -1.0, te_tol = 1e-8;
    test->add_option("-i,--in", te_in, "input CSV")->required();
    test->add_option("--mode", te_mode, "null trend source: l1 | true");
    test->add_option("--trend-file", te_trend_file, "trend CSV for --mode true");
    test->add_option("--replicates", te_reps, "null cloud size");
    test->add_option("--seed", te_seed, "replicate seed");
    test->add_option("--threads", te_threads, "worker threads (0 = hardware)");
    test->add_option("--lambda", te_lambda, "trend penalty, absolute");
    test->add_option("--lambda-frac", te_frac, "trend penalty as a fraction of lambda_max");
    test->add_option("--sigma", te_sigma, "noise sigma override (skip estimation)");
    test->add_option("--max-m", te_maxm, "half-width sweep cap (0 = ceil(sqrt(n)))");
    test->add_option("--json", te_json, "write the report here instead of stdout");
    test->add_option("--cloud-out", te_cloud_out, "write the null cloud as CSV");

    CLI11_PARSE(app, argc, argv);

    if (gen->parsed()) {
        signal_params s = preset_by_name(gen_preset);
        if (gen_sigma_ratio >= 0.0) s.sigma = gen_sigma_ratio * s.ca;
        if (gen_sigma >= 0.0) s.sigma = gen_sigma;
        if (gen_noiseless) s.sigma = 0.0;
        const std::vector<double> y = make_signal(s, gen_seed);
        write_csv(gen_out, y, s.dt, !gen_no_time);
        if (!gen_trend_out.empty())
            write_csv(gen_trend_out, make_trend(s), s.dt, !gen_no_time);
        return 0;
    }

    if (trend->parsed()) {
        const series rec = read_csv(tr_in);
        const double lmax = lambda_max(rec.y);
        double lam = tr_lambda;
        if (lam < 0.0) lam = (tr_frac >= 0.0 ? tr_frac : 1e-2) * lmax;
        const trend_result fit = l1_trend(rec.y, lam, tr_tol, tr_iters);
        write_csv(tr_out, fit.x, rec.dt, rec.has_dt);
        ordered_json j;
        j["lambda"] = lam;
        j["lambda_max"] = lmax;
        j["duality_gap"] = fit.gap;
        j["iterations"] = fit.iterations;
        j["converged"] = fit.converged;
        emit(j, "");
        return 0;
    }

    if (noise->parsed()) {
        const series rec = read_csv(no_in);
        ordered_json j;
        j["sigma_hat"] = noise_sigma(rec.y);
        if (!no_out.empty()) {
            write_csv(no_out, denoise(rec.y, no_keep), rec.dt, rec.has_dt);
            j["denoised"] = no_out;
        }
        emit(j, "");
        return 0;
    }

    if (extract->parsed()) {
        const series rec = read_csv(ex_in);
        const offset_result off = enforce_offset(rec.y);
        const std::vector<double> power = power_spectrum(off.shifted);
        const std::size_t m = ex_m > 0
                                  ? ex_m
                                  : select_window(power, ex_maxm == 0
                                                             ? default_window_cap(rec.y.size())
                                                             : ex_maxm);
        const feature_result f = features_at(power, m);
        ordered_json j;
        j["n"] = rec.y.size();
        if (rec.has_dt) j["dt"] = rec.dt;
        j["m"] = m;
        j["offset_constant"] = off.constant;
        j["features"] = feature_json(f, rec.y.size(), rec.dt, rec.has_dt);
        emit(j, ex_json);
        return 0;
    }

    if (test->parsed()) {
        const series rec = read_csv(te_in);
        std::vector<double> null_trend;
        ordered_json trend_info;
        if (te_mode == "true") {
            require(!te_trend_file.empty(), "--mode true needs --trend-file");
            const series tf = read_csv(te_trend_file);
            require(tf.y.size() == rec.y.size(), "trend file length mismatch");
            null_trend = tf.y;
            trend_info["mode"] = "true";
        } else if (te_mode == "l1") {
            const double lmax = lambda_max(rec.y);
            const double lam = te_lambda >= 0.0 ? te_lambda : te_frac * lmax;
            const trend_result fit = l1_trend(rec.y, lam, te_tol);
            null_trend = fit.x;
            trend_info["mode"] = "l1";
            trend_info["lambda"] = lam;
            trend_info["lambda_max"] = lmax;
            trend_info["converged"] = fit.converged;
        } else {
            throw error("unknown --mode: " + te_mode);
        }
        const test_report rep = run_test(rec.y, null_trend, te_reps, te_seed,
                                         te_maxm, te_sigma > 0.0 ? te_sigma : 0.0,
                                         te_threads);
        ordered_json j;
        j["n"] = rec.y.size();
        if (rec.has_dt) j["dt"] = rec.dt;
        j["replicates"] = te_reps;
        j["seed"] = te_seed;
        j["trend"] = trend_info;
        j["m_hat"] = rep.m_hat;
        j["sigma_hat"] = rep.sigma_hat;
        j["offset_constant"] = rep.offset_constant;
        j["statistic"] = feature_json(rep.statistic, rec.y.size(), rec.dt, rec.has_dt);
        j["p_value"] = rep.p;
        j["alpha_star"] = rep.alpha;
        j["reject_null"] = rep.reject;
        emit(j, te_json);
        if (!te_cloud_out.empty()) {
            std::ostringstream body;
            for (const auto& c : rep.cloud)
                body << format_value(c.gap) << ',' << format_value(c.depth) << '\n';
            write_text_atomic(te_cloud_out, body.str());
        }
        return 0;
    }

    return 0;
}

}  // namespace hff::cli
