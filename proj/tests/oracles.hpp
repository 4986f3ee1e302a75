#pragma once

// Reference computations for tests. These are written out from the model
// formulas directly and deliberately avoid calling the library solvers.

#include <cmath>
#include <cstddef>
#include <functional>
#include <numbers>
#include <random>

namespace oracle {

// Golden-section maximum of a unimodal f on [lo, hi].
inline double golden_section_max(const std::function<double(double)>& f, double lo, double hi, double rel_tol = 1e-13) {
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double c = b - invphi * (b - a);
    double d = a + invphi * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > rel_tol * std::max(std::abs(a) + std::abs(b), 1e-300)) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - invphi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + invphi * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

// Sign-change scan on n cells, refined by linear interpolation.
inline double grid_root(const std::function<double(double)>& f, double lo, double hi, std::size_t n) {
    double x0 = lo, f0 = f(lo);
    for (std::size_t k = 1; k <= n; ++k) {
        const double x1 = lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(n);
        const double f1 = f(x1);
        if ((f0 <= 0) != (f1 <= 0)) return x0 - f0 * (x1 - x0) / (f1 - f0);
        x0 = x1;
        f0 = f1;
    }
    return std::nan("");
}

// Urban air-to-ground path loss in dB, from scratch.
inline double urban_path_loss(double h, double r) {
    const double a = 9.61, b = 0.16;
    const double theta_deg = std::atan2(h, r) * 180.0 / std::numbers::pi;
    const double plos = 1.0 / (1.0 + a * std::exp(-b * (theta_deg - a)));
    const double fspl = 20.0 * std::log10(4.0 * std::numbers::pi * 2.4e9 / 3e8);
    return 20.0 * std::log10(std::hypot(h, r)) + fspl + 20.0 + plos * (1.0 - 20.0);
}

// Per-link objective: rate over (tx + hover) power.
inline double link_ee(double p, double gain, double bandwidth, double noise_w, double hover_w) {
    return bandwidth * std::log2(1.0 + p * gain / noise_w) / (p + hover_w);
}

inline double log_uniform(std::mt19937_64& g, double lo, double hi) {
    std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
    return std::exp(u(g));
}

inline double rel_diff(double a, double b) {
    const double scale = std::max(std::abs(a), std::abs(b));
    return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

}  // namespace oracle
