#include "homsob/tanh_sinh.hpp"

#include <cmath>
#include <numbers>

namespace homsob {

namespace {

constexpr double kHalfPi = 0.5 * std::numbers::pi;

// Abscissa data at parameter t for an interval of half-width r.
struct Node {
    double from_left;
    double from_right;
    double weight;
};

Node node(double t, double r) {
    const double u = kHalfPi * std::sinh(t);
    const double c = std::cosh(u);
    return {2.0 * r / (1.0 + std::exp(-2.0 * u)), 2.0 * r / (1.0 + std::exp(2.0 * u)), r * kHalfPi * std::cosh(t) / (c * c)};
}

}  // namespace

QuadratureResult tanh_sinh(const EndpointIntegrand& f, double a, double b, double rel_tol, int max_levels) {
    QuadratureResult res;
    if (a == b) return res;
    const double r = 0.5 * (b - a);
    auto eval = [&](double t) {
        const Node n = node(t, r);
        if (n.weight == 0.0 || n.from_left == 0.0 || n.from_right == 0.0) return 0.0;
        const double x = t < 0.0 ? a + n.from_left : b - n.from_right;
        return n.weight * f(x, n.from_left, n.from_right);
    };
    // Level 0: unit step over t in [-tmax, tmax].
    constexpr double tmax = 6.5;
    double sum = eval(0.0);
    for (int k = 1; k <= static_cast<int>(tmax); ++k) sum += eval(k) + eval(-k);
    double h = 1.0;
    double estimate = sum * h;
    for (int level = 1; level <= max_levels; ++level) {
        h *= 0.5;
        double fresh = 0.0;
        for (double t = h; t <= tmax; t += 2.0 * h) fresh += eval(t) + eval(-t);
        sum += fresh;
        const double next = sum * h;
        res.error_estimate = std::abs(next - estimate);
        estimate = next;
        res.levels = level;
        if (level >= 3 && res.error_estimate <= rel_tol * std::abs(estimate)) break;
    }
    res.value = estimate;
    return res;
}

QuadratureResult tanh_sinh(const std::function<double(double)>& f, double a, double b, double rel_tol, int max_levels) {
    return tanh_sinh([&f](double x, double, double) { return f(x); }, a, b, rel_tol, max_levels);
}

}  // namespace homsob
