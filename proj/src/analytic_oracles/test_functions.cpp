#include <cmath>
#include <numbers>
#include <sstream>

#include "homsob/errors.hpp"
#include "homsob/littlewood_paley.hpp"
#include "homsob/multiplier.hpp"
#include "homsob/oracles.hpp"

namespace homsob {

namespace {

// Probabilists' Hermite polynomial He_n.
double hermite(int n, double x) {
    double prev = 1.0;
    if (n == 0) return prev;
    double cur = x;
    for (int k = 1; k < n; ++k) {
        const double next = x * cur - k * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

double window(double r, double radius) { return radial_cutoff(r / radius, 1.0, 2.0, smooth_transition); }

}  // namespace

TestFunctionSpec TestFunctionSpec::gaussian(double sigma) {
    TestFunctionSpec t;
    t.kind = Kind::Gaussian;
    t.sigma = sigma;
    return t;
}

TestFunctionSpec TestFunctionSpec::hermite_gaussian(int order, double sigma) {
    TestFunctionSpec t;
    t.kind = Kind::HermiteGaussian;
    t.order = order;
    t.sigma = sigma;
    return t;
}

TestFunctionSpec TestFunctionSpec::windowed_polynomial(const MultiIndex& alpha) {
    TestFunctionSpec t;
    t.kind = Kind::WindowedPolynomial;
    t.alpha = alpha;
    return t;
}

TestFunctionSpec TestFunctionSpec::windowed_log_abs(double epsilon) {
    TestFunctionSpec t;
    t.kind = Kind::WindowedLogAbs;
    t.epsilon = epsilon;
    return t;
}

TestFunctionSpec TestFunctionSpec::windowed_power_abs(double gamma) {
    TestFunctionSpec t;
    t.kind = Kind::WindowedPowerAbs;
    t.gamma = gamma;
    return t;
}

Field make_test_function(const TestFunctionSpec& spec, const GridSpec& grid) {
    grid.validate();
    using Kind = TestFunctionSpec::Kind;
    if (!(spec.dilation > 0.0)) throw DomainError("dilation must be positive");
    const double lambda = spec.dilation;
    const double R = spec.window > 0.0 ? spec.window : grid.L / 8.0;
    const bool gaussian_type = spec.kind == Kind::Gaussian || spec.kind == Kind::HermiteGaussian;
    if (gaussian_type && !(spec.sigma > 0.0)) throw DomainError("sigma must be positive");
    if (spec.kind == Kind::HermiteGaussian && spec.order < 0) throw DomainError("Hermite order must be >= 0");
    if (spec.kind == Kind::WindowedLogAbs && !(spec.epsilon > 0.0)) throw DomainError("log regularization must be positive");
    if (spec.kind == Kind::WindowedPowerAbs && !(spec.gamma > 0.0)) throw DomainError("power exponent must be positive");

    const double width = (gaussian_type ? 2.0 * spec.sigma : R) / lambda;
    const double h = grid.spacing();
    if (width < 4.0 * h || width > grid.L / 4.0) {
        std::ostringstream msg;
        msg << "feature width " << width << " is not resolvable: need 4h = " << 4.0 * h << " <= width <= L/4 = " << grid.L / 4.0;
        throw DomainError(msg.str());
    }
    for (int axis = grid.d; axis < 3; ++axis)
        if (spec.alpha.a[axis] != 0) throw StructuralError("multi-index exceeds grid dimension");

    return Field::sample(grid, [&](const Vec3& x0) {
        const Vec3 x{lambda * x0[0], lambda * x0[1], lambda * x0[2]};
        const double r = norm(x);
        switch (spec.kind) {
            case Kind::Gaussian: return std::exp(-r * r / (2.0 * spec.sigma * spec.sigma));
            case Kind::HermiteGaussian:
                return hermite(spec.order, x[0] / spec.sigma) * std::exp(-r * r / (2.0 * spec.sigma * spec.sigma));
            case Kind::WindowedPolynomial: {
                double mono = 1.0;
                for (int axis = 0; axis < grid.d; ++axis) mono *= std::pow(x[axis], spec.alpha.a[axis]);
                return mono * window(r, R);
            }
            case Kind::WindowedLogAbs:
                return 0.5 * std::log(r * r + spec.epsilon * spec.epsilon) * window(r, R);
            case Kind::WindowedPowerAbs: return std::pow(r, spec.gamma) * window(r, R);
        }
        return 0.0;
    });
}

Field s_infty_project(const Field& f, double rho) {
    const double minimum = 2.0 * 2.0 * std::numbers::pi / f.grid.L;
    if (!(rho >= minimum * (1.0 - 1e-12)))
        throw DomainError("projection radius rho must be >= 2 * 2 pi / L = " + std::to_string(minimum));
    const DyadicPartition part(-1, 1);
    MultiplierSpec m{[&part, rho](const Vec3& w) { return Complex(1.0 - part.psi(2.0 * norm(w) / rho), 0.0); },
                     ZeroModeRule::set_zero(), true};
    return apply_multiplier(f, m);
}

Field s_infty_project(const Field& f) { return s_infty_project(f, 2.0 * 2.0 * std::numbers::pi / f.grid.L); }

std::vector<Field> s_infty_corpus(const GridSpec& grid) {
    const std::pair<int, double> members[] = {{5, 1.0}, {6, 1.0}, {6, 0.75}, {8, 1.0}, {5, 0.75}};
    std::vector<Field> out;
    for (const auto& [order, sigma] : members)
        out.push_back(s_infty_project(make_test_function(TestFunctionSpec::hermite_gaussian(order, sigma), grid)));
    return out;
}

}  // namespace homsob
