#include <cmath>
#include <numbers>
#include <sstream>

#include "homsob/errors.hpp"
#include "homsob/multiplier.hpp"
#include "homsob/oracles.hpp"
#include "homsob/quadrature.hpp"
#include "homsob/tanh_sinh.hpp"

namespace homsob {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPoleGuard = 1e12;
constexpr double kSupportTolerance = 1e-5;

// (theta(t))^d - 1 with theta(t) = sum_n exp(-pi n^2 t), formed without cancellation.
double theta_minus_one(double t, int d) {
    double u = 0.0;
    for (int n = 1;; ++n) {
        const double term = 2.0 * std::exp(-kPi * n * n * t);
        u += term;
        if (term < 1e-18 * u) break;
    }
    switch (d) {
        case 1: return u;
        case 2: return u * (2.0 + u);
        default: return u * (3.0 + u * (3.0 + u));
    }
}

// int_1^inf t^a (Theta(t) - 1) dt; the integrand is below 1e-50 of its start beyond t = 41.
double theta_moment(double a, int d) {
    return tanh_sinh([a, d](double t) { return std::pow(t, a) * theta_minus_one(t, d); }, 1.0, 41.0, 1e-15, 12).value;
}

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::round(x); }

void check_support(const Field& f) {
    const double top = f.max_abs();
    double outside = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i)
        if (norm(f.grid.point(i)) > f.grid.L / 4.0) outside = std::max(outside, std::abs(f.values[i]));
    if (outside > kSupportTolerance * top) {
        std::ostringstream msg;
        msg << "riesz_potential_direct needs |f| <= 1e-5 max|f| beyond |x| = L/4; found " << outside / top;
        throw PreconditionError(msg.str());
    }
}

}  // namespace

double riesz_kernel_constant(double s, int d, KernelConvention convention) {
    if (!(s > 0.0)) throw DomainError("Riesz kernel constant needs s > 0");
    if (d < 1 || d > 3) throw DomainError("dimension must be 1..3");
    if (s >= d) throw PoleError("Riesz kernel constant has a pole at s = d (Gamma((d-s)/2))");
    const double pi_power = convention == KernelConvention::TwoPi ? s / 2.0 : d / 2.0;
    const double log_value =
        std::lgamma((d - s) / 2.0) - std::lgamma(s / 2.0) - s * std::log(2.0) - pi_power * std::log(kPi);
    const double value = std::exp(log_value);
    if (!(std::abs(value) <= kPoleGuard)) {
        std::ostringstream msg;
        msg << "Riesz kernel constant " << value << " exceeds 1e12: s = " << s << " is too close to the pole s = " << d;
        throw PoleError(msg.str());
    }
    return value;
}

double lattice_zeta(int d, double q) {
    if (d < 1 || d > 3) throw DomainError("lattice zeta dimension must be 1..3");
    if (q == d) throw PoleError("lattice zeta has a pole at q = d");
    const double sigma = q / 2.0;
    if (sigma == 0.0) return -1.0;
    if (is_nonpositive_integer(sigma)) return 0.0;
    const double bracket =
        theta_moment(sigma - 1.0, d) + theta_moment(d / 2.0 - sigma - 1.0, d) + 1.0 / (sigma - d / 2.0) - 1.0 / sigma;
    return std::pow(kPi, sigma) / std::tgamma(sigma) * bracket;
}

Field riesz_convolution_unit(const Field& f, double s) {
    f.validate();
    const GridSpec& g = f.grid;
    const int d = g.d;
    if (!(s > 0.0 && s < d)) throw DomainError("direct Riesz potential needs 0 < s < d");
    check_support(f);
    const int N = g.N;
    const double h = g.spacing();
    const int span = 2 * N - 1;

    // Kernel |n|^{s-d} on offsets n in (-N, N)^d, zero at n = 0.
    std::vector<double> kernel(static_cast<std::size_t>(std::pow(span, d)), 0.0);
    auto koff = [&](const Index3& n) {
        std::size_t k = 0;
        for (int axis = 0; axis < d; ++axis) k = k * span + static_cast<std::size_t>(n[axis] + N - 1);
        return k;
    };
    for (std::size_t k = 0; k < kernel.size(); ++k) {
        std::size_t rest = k;
        double r2 = 0.0;
        for (int axis = d - 1; axis >= 0; --axis) {
            const int n = static_cast<int>(rest % span) - (N - 1);
            rest /= span;
            r2 += static_cast<double>(n) * n;
        }
        if (r2 > 0.0) kernel[k] = std::pow(r2, 0.5 * (s - d));
    }

    const double z0 = lattice_zeta(d, d - s);
    const double z2 = lattice_zeta(d, d - s - 2.0);
    Field out(g, f.kind);
    std::vector<Complex> terms(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        const Index3 xi = g.unflatten(i);
        for (std::size_t j = 0; j < g.size(); ++j) {
            const Index3 yj = g.unflatten(j);
            terms[j] = kernel[koff({yj[0] - xi[0], yj[1] - xi[1], yj[2] - xi[2]})] * f.values[j];
        }
        Complex lap(0.0, 0.0);
        for (int axis = 0; axis < d; ++axis) {
            Index3 up = xi;
            Index3 down = xi;
            ++up[axis];
            --down[axis];
            const Complex fu = up[axis] < N ? f.values[g.flatten(up)] : Complex(0.0, 0.0);
            const Complex fd = down[axis] >= 0 ? f.values[g.flatten(down)] : Complex(0.0, 0.0);
            lap += (fu - 2.0 * f.values[i] + fd) / (h * h);
        }
        out.values[i] = std::pow(h, s) * (pairwise_sum(terms) - z0 * f.values[i]) -
                        std::pow(h, s + 2.0) * z2 * lap / (2.0 * d);
    }
    return out;
}

Field riesz_potential_direct(const Field& f, double s) {
    Field out = riesz_convolution_unit(f, s);
    out *= riesz_kernel_constant(s, f.grid.d, KernelConvention::Angular);
    return out;
}

double calibrate_angular_constant(const Field& f, double s) {
    const Field spectral = riesz_potential(f, s);
    const Field unit = riesz_convolution_unit(f, s);
    std::vector<double> num(f.size());
    std::vector<double> den(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        num[i] = (std::conj(unit.values[i]) * spectral.values[i]).real();
        den[i] = std::norm(unit.values[i]);
    }
    return pairwise_sum(num) / pairwise_sum(den);
}

}  // namespace homsob
