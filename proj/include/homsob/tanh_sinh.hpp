#pragma once

#include <functional>

namespace homsob {

/// Integrand receiving x together with its distances to the left and right endpoints,
/// computed without cancellation so endpoint singularities can be evaluated accurately.
using EndpointIntegrand = std::function<double(double x, double from_left, double from_right)>;

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    int levels = 0;
};

/// Double-exponential (tanh-sinh) quadrature on [a, b], refined by halving the step until
/// two successive levels agree to rel_tol (or max_levels is reached).
QuadratureResult tanh_sinh(const EndpointIntegrand& f, double a, double b, double rel_tol = 1e-12,
                           int max_levels = 9);

QuadratureResult tanh_sinh(const std::function<double(double)>& f, double a, double b, double rel_tol = 1e-12,
                           int max_levels = 9);

}  // namespace homsob
