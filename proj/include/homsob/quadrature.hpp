#pragma once

#include <limits>
#include <span>
#include <vector>

#include "homsob/grid.hpp"

namespace homsob {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Pairwise (cascade) summation with a fixed split order; bit-reproducible.
double pairwise_sum(std::span<const double> xs);
Complex pairwise_sum(std::span<const Complex> xs);

/// (h^d sum |f|^p)^{1/p}, or max |f| for p = infinity.
double quadrature_lp_norm(const Field& f, double p);

/// Closed ball B(center, radius) in physical coordinates.
struct Ball {
    Vec3 center{0.0, 0.0, 0.0};
    double radius = 5.0;
};

/// Default ball for realization: center 0, radius L/8.
Ball default_ball(const GridSpec& g);

/// Flat indices of grid points with |x - center| <= radius, without wrap-around.
/// Throws PlanError when the ball leaves the fundamental period.
std::vector<std::size_t> ball_points(const GridSpec& g, const Ball& b);

/// Grid-quadrature average of a real field over the ball (equal weights).
double ball_average(const Field& f, std::span<const std::size_t> points);

}  // namespace homsob
