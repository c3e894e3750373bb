#pragma once

#include <cmath>
#include <numbers>
#include <random>

#include "homsob/grid.hpp"
#include "homsob/quadrature.hpp"

namespace homsob::testing {

inline double rel_l2(const Field& a, const Field& b) {
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        num += std::norm(a.values[i] - b.values[i]);
        den += std::norm(b.values[i]);
    }
    return den == 0.0 ? std::sqrt(num) : std::sqrt(num / den);
}

inline double max_diff(const Field& a, const Field& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a.values[i] - b.values[i]));
    return m;
}

inline double rel_sup(const Field& a, const Field& b) { return max_diff(a, b) / b.max_abs(); }

/// Real sum of random cosines on grid-resonant wavevectors with |k_i| <= kmax, no DC.
inline Field random_bandlimited(const GridSpec& g, std::uint64_t seed, int terms = 12, int kmax = 0) {
    if (kmax == 0) kmax = g.N / 4;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> kd(-kmax, kmax);
    std::uniform_real_distribution<double> ud(-1.0, 1.0);
    struct Term {
        Vec3 w;
        double amp, phase;
    };
    std::vector<Term> ts;
    while (static_cast<int>(ts.size()) < terms) {
        Vec3 w{0, 0, 0};
        bool nonzero = false;
        for (int a = 0; a < g.d; ++a) {
            const int k = kd(rng);
            nonzero = nonzero || k != 0;
            w[a] = 2.0 * std::numbers::pi * k / g.L;
        }
        if (!nonzero) continue;
        ts.push_back({w, ud(rng), std::numbers::pi * ud(rng)});
    }
    return Field::sample(g, [&](const Vec3& x) {
        double v = 0.0;
        for (const auto& t : ts) v += t.amp * std::cos(t.w[0] * x[0] + t.w[1] * x[1] + t.w[2] * x[2] + t.phase);
        return v;
    });
}

inline Field gaussian(const GridSpec& g, double sigma = 1.0) {
    return Field::sample(g, [sigma](const Vec3& x) {
        const double r2 = x[0] * x[0] + x[1] * x[1] + x[2] * x[2];
        return std::exp(-r2 / (2.0 * sigma * sigma));
    });
}

}  // namespace homsob::testing
