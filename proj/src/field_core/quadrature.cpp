#include "homsob/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "homsob/errors.hpp"

namespace homsob {

namespace {

template <class T>
T cascade(std::span<const T> xs) {
    if (xs.empty()) return T{};
    if (xs.size() <= 8) {
        T acc{};
        for (const auto& x : xs) acc += x;
        return acc;
    }
    const std::size_t half = xs.size() / 2;
    return cascade(xs.first(half)) + cascade(xs.subspan(half));
}

}  // namespace

double pairwise_sum(std::span<const double> xs) { return cascade(xs); }
Complex pairwise_sum(std::span<const Complex> xs) { return cascade(xs); }

double quadrature_lp_norm(const Field& f, double p) {
    if (!(p > 0.0)) throw DomainError("L^p exponent must be positive (got " + std::to_string(p) + ")");
    f.validate();
    if (std::isinf(p)) return f.max_abs();
    std::vector<double> terms(f.size());
    for (std::size_t i = 0; i < terms.size(); ++i) terms[i] = std::pow(std::abs(f.values[i]), p);
    return std::pow(f.grid.cell_volume() * pairwise_sum(terms), 1.0 / p);
}

Ball default_ball(const GridSpec& g) { return Ball{{0.0, 0.0, 0.0}, g.L / 8.0}; }

std::vector<std::size_t> ball_points(const GridSpec& g, const Ball& b) {
    if (!(b.radius > 0.0)) throw PlanError("ball radius must be positive");
    const double half = 0.5 * g.L;
    for (int axis = 0; axis < g.d; ++axis)
        if (b.center[axis] - b.radius < -half || b.center[axis] + b.radius >= half)
            throw PlanError("ball leaves the fundamental period");
    std::vector<std::size_t> pts;
    for (std::size_t i = 0; i < g.size(); ++i) {
        const Vec3 x = g.point(i);
        Vec3 diff{x[0] - b.center[0], x[1] - b.center[1], x[2] - b.center[2]};
        if (norm(diff) <= b.radius) pts.push_back(i);
    }
    if (pts.empty()) throw PlanError("ball contains no grid points");
    return pts;
}

double ball_average(const Field& f, std::span<const std::size_t> points) {
    if (points.empty()) throw PlanError("empty ball");
    std::vector<double> vals(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) vals[i] = f.values.at(points[i]).real();
    return pairwise_sum(vals) / static_cast<double>(points.size());
}

}  // namespace homsob
