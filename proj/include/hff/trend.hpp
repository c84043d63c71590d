#pragma once

// Piecewise-linear trend estimation: minimize
//     0.5 * ||y - x||^2 + lambda * sum |x_i - 2 x_{i+1} + x_{i+2}|
// via a primal-dual interior-point method on the box-constrained dual
//     min 0.5 nu' D D' nu - nu' D y   s.t.  |nu| <= lambda,
// recovering x = y - D' nu. D D' is pentadiagonal (6, -4, 1), so every Newton
// step is a banded Cholesky solve and the whole thing stays O(n) per
// iteration.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "hff/common.hpp"

namespace hff {

namespace detail {

inline std::vector<double> second_difference(const std::vector<double>& v) {
    if (v.size() < 3) return {};
    std::vector<double> d(v.size() - 2);
    for (std::size_t i = 0; i + 2 < v.size(); ++i)
        d[i] = v[i] - 2.0 * v[i + 1] + v[i + 2];
    return d;
}

inline std::vector<double> second_difference_adjoint(const std::vector<double>& w,
                                                     std::size_t n) {
    std::vector<double> v(n, 0.0);
    for (std::size_t i = 0; i < w.size(); ++i) {
        v[i] += w[i];
        v[i + 1] -= 2.0 * w[i];
        v[i + 2] += w[i];
    }
    return v;
}

// y = (D D') x for the Toeplitz bands (6, -4, 1)
inline std::vector<double> penta_apply(const std::vector<double>& x) {
    const std::size_t m = x.size();
    std::vector<double> y(m);
    for (std::size_t i = 0; i < m; ++i) {
        double acc = 6.0 * x[i];
        if (i >= 1) acc -= 4.0 * x[i - 1];
        if (i >= 2) acc += x[i - 2];
        if (i + 1 < m) acc -= 4.0 * x[i + 1];
        if (i + 2 < m) acc += x[i + 2];
        y[i] = acc;
    }
    return y;
}

// Cholesky solve for the SPD matrix with variable diagonal `diag` and the
// constant off-diagonals -4 (first) and 1 (second).
inline std::vector<double> penta_solve(const std::vector<double>& diag,
                                       std::vector<double> b) {
    const std::size_t m = diag.size();
    require(b.size() == m, "penta_solve: size mismatch");
    std::vector<double> ld(m), l1(m, 0.0), l2(m, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        if (i >= 2) l2[i] = 1.0 / ld[i - 2];
        if (i >= 1) l1[i] = (-4.0 - (i >= 2 ? l2[i] * l1[i - 1] : 0.0)) / ld[i - 1];
        double s = diag[i];
        if (i >= 1) s -= l1[i] * l1[i];
        if (i >= 2) s -= l2[i] * l2[i];
        require(s > 0.0, "penta_solve: matrix not positive definite");
        ld[i] = std::sqrt(s);
    }
    // forward then backward substitution on L and L'
    std::vector<double> z(m);
    for (std::size_t i = 0; i < m; ++i) {
        double acc = b[i];
        if (i >= 1) acc -= l1[i] * z[i - 1];
        if (i >= 2) acc -= l2[i] * z[i - 2];
        z[i] = acc / ld[i];
    }
    std::vector<double> x(m);
    for (std::size_t i = m; i-- > 0;) {
        double acc = z[i];
        if (i + 1 < m) acc -= l1[i + 1] * x[i + 1];
        if (i + 2 < m) acc -= l2[i + 2] * x[i + 2];
        x[i] = acc / ld[i];
    }
    return x;
}

}  // namespace detail

// Smallest penalty at which the solution collapses to a single affine ramp.
inline double lambda_max(const std::vector<double>& y) {
    require(y.size() >= 3, "lambda_max: need at least 3 samples");
    const std::vector<double> dy = detail::second_difference(y);
    const std::vector<double> diag(dy.size(), 6.0);
    const std::vector<double> nu = detail::penta_solve(diag, dy);
    double mx = 0.0;
    for (const double v : nu) mx = std::max(mx, std::abs(v));
    return mx;
}

struct trend_result {
    std::vector<double> x;
    double gap = 0.0;       // duality gap at exit
    int iterations = 0;
    bool converged = false;
};

inline trend_result l1_trend(const std::vector<double>& y, double lambda,
                             double tol = 1e-8, int max_iter = 200) {
    require(lambda >= 0.0, "l1_trend: negative penalty");
    require(y.size() >= 3, "l1_trend: need at least 3 samples");
    trend_result out;
    if (lambda == 0.0) {
        out.x = y;
        out.converged = true;
        return out;
    }

    const std::size_t n = y.size(), m = n - 2;
    const std::vector<double> dy = detail::second_difference(y);
    std::vector<double> nu(m, 0.0), mu1(m, 1.0), mu2(m, 1.0);
    constexpr double MU = 2.0, ALPHA = 0.01, BETA = 0.5;
    double t = 1e-2;

    auto primal = [&](const std::vector<double>& nu_) {
        return detail::second_difference_adjoint(nu_, n);
    };
    auto residual_norm = [&](const std::vector<double>& nu_,
                             const std::vector<double>& m1,
                             const std::vector<double>& m2, double t_) {
        const std::vector<double> ddt = detail::penta_apply(nu_);
        double acc = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            const double rd = ddt[i] - dy[i] + m1[i] - m2[i];
            const double rc1 = -m1[i] * (nu_[i] - lambda) - 1.0 / t_;
            const double rc2 = -m2[i] * (-nu_[i] - lambda) - 1.0 / t_;
            acc += rd * rd + rc1 * rc1 + rc2 * rc2;
        }
        return std::sqrt(acc);
    };

    out.x = y;
    for (int it = 0; it < max_iter; ++it) {
        const std::vector<double> dtnu = primal(nu);
        std::vector<double> x(n);
        for (std::size_t i = 0; i < n; ++i) x[i] = y[i] - dtnu[i];
        const std::vector<double> dx = detail::second_difference(x);

        double obj = 0.0, l1 = 0.0, cross = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double r = y[i] - x[i];
            obj += 0.5 * r * r;
        }
        for (std::size_t i = 0; i < m; ++i) {
            l1 += std::abs(dx[i]);
            cross += nu[i] * dx[i];
        }
        obj += lambda * l1;
        const double gap = lambda * l1 - cross;
        out.x = std::move(x);
        out.gap = gap;
        out.iterations = it;
        if (gap <= tol * (1.0 + std::abs(obj))) {
            out.converged = true;
            return out;
        }

        // barrier weight from the surrogate gap, never shrinking too fast
        double eta = 0.0;
        for (std::size_t i = 0; i < m; ++i)
            eta -= (nu[i] - lambda) * mu1[i] + (-nu[i] - lambda) * mu2[i];
        t = std::max(2.0 * static_cast<double>(m) * MU / std::max(eta, 1e-300), 1.2 * t);

        const std::vector<double> ddtnu = detail::penta_apply(nu);
        std::vector<double> diag(m), rhs(m);
        for (std::size_t i = 0; i < m; ++i) {
            const double lo = lambda - nu[i], hi = nu[i] + lambda;
            diag[i] = 6.0 + mu1[i] / lo + mu2[i] / hi;
            rhs[i] = dy[i] - ddtnu[i] - (1.0 / t) / lo + (1.0 / t) / hi;
        }
        const std::vector<double> dnu = detail::penta_solve(diag, rhs);

        std::vector<double> dmu1(m), dmu2(m);
        for (std::size_t i = 0; i < m; ++i) {
            const double f1 = nu[i] - lambda, f2 = -nu[i] - lambda;
            dmu1[i] = -mu1[i] - (1.0 / t) / f1 - (mu1[i] / f1) * dnu[i];
            dmu2[i] = -mu2[i] - (1.0 / t) / f2 + (mu2[i] / f2) * dnu[i];
        }

        double s = 1.0;
        for (std::size_t i = 0; i < m; ++i) {
            if (dmu1[i] < 0.0) s = std::min(s, -0.99 * mu1[i] / dmu1[i]);
            if (dmu2[i] < 0.0) s = std::min(s, -0.99 * mu2[i] / dmu2[i]);
        }
        for (int back = 0; back < 40; ++back) {
            bool inside = true;
            for (std::size_t i = 0; i < m; ++i)
                if (std::abs(nu[i] + s * dnu[i]) >= lambda) { inside = false; break; }
            if (inside) break;
            s *= BETA;
        }
        const double r0 = residual_norm(nu, mu1, mu2, t);
        std::vector<double> nu_n(m), mu1_n(m), mu2_n(m);
        for (int back = 0; back < 40; ++back) {
            for (std::size_t i = 0; i < m; ++i) {
                nu_n[i] = nu[i] + s * dnu[i];
                mu1_n[i] = mu1[i] + s * dmu1[i];
                mu2_n[i] = mu2[i] + s * dmu2[i];
            }
            if (residual_norm(nu_n, mu1_n, mu2_n, t) <= (1.0 - ALPHA * s) * r0) break;
            s *= BETA;
        }
        nu = nu_n;
        mu1 = mu1_n;
        mu2 = mu2_n;
    }

    const std::vector<double> dtnu = primal(nu);
    out.x.resize(n);
    for (std::size_t i = 0; i < n; ++i) out.x[i] = y[i] - dtnu[i];
    const std::vector<double> dx = detail::second_difference(out.x);
    double l1 = 0.0, cross = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        l1 += std::abs(dx[i]);
        cross += nu[i] * dx[i];
    }
    out.gap = lambda * l1 - cross;
    out.iterations = max_iter;
    out.converged = false;
    return out;
}

}  // namespace hff
