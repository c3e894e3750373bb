#include <cmath>
#include <numbers>
#include <sstream>

#include "homsob/errors.hpp"
#include "homsob/littlewood_paley.hpp"
#include "homsob/multiplier.hpp"
#include "homsob/oracles.hpp"
#include "homsob/quadrature.hpp"
#include "homsob/tanh_sinh.hpp"

namespace homsob {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kFarRatio = 1e4;

struct GaKernel {
    double beta;  // nu - d
    double A;
    bool log_kernel;

    // g at radius r along the direction with half-angle sine sh, given r - A without cancellation.
    double operator()(double r, double r_minus_a, double sh) const {
        const double dist = std::hypot(r_minus_a, 2.0 * std::sqrt(r * A) * sh);
        const double cos_t = 1.0 - 2.0 * sh * sh;
        const double q = (A * A - 2.0 * r * A * cos_t) / (r * r);
        if (log_kernel) return std::abs(q) < 0.5 ? 0.5 * std::log1p(q) : std::log(dist) - std::log(r);
        if (std::abs(q) < 0.5) return std::pow(r, beta) * std::expm1(0.5 * beta * std::log1p(q));
        return std::pow(dist, beta) - std::pow(r, beta);
    }
};

// int_0^inf r^{d-1} |g(r, t)|^{p'} dr along one direction.
double radial_integral(const GaKernel& g, int d, double pp, double sh, double rel_tol) {
    const double A = g.A;
    auto weight = [&](double r, double rma) { return std::pow(r, d - 1) * std::pow(std::abs(g(r, rma, sh)), pp); };
    const double inner =
        tanh_sinh([&](double r, double, double from_right) { return weight(r, -from_right); }, 0.0, A, rel_tol).value;
    const double middle =
        tanh_sinh([&](double r, double from_left, double) { return weight(r, from_left); }, A, 2.0 * A, rel_tol).value;
    const double far_r = kFarRatio * A;
    const double outer = tanh_sinh(
                             [&](double v) {
                                 const double r = std::exp(v);
                                 return weight(r, r - A) * r;
                             },
                             std::log(2.0 * A), std::log(far_r), rel_tol)
                             .value;
    // |g| ~ c A |cos t| r^{beta-1} beyond far_r.
    const double c = g.log_kernel ? 1.0 : std::abs(g.beta);
    const double cos_t = std::abs(1.0 - 2.0 * sh * sh);
    const double e = d - 1 + (g.beta - 1.0) * pp;
    const double tail = std::pow(c * A * cos_t, pp) * std::pow(far_r, e + 1.0) / (-(e + 1.0));
    return inner + middle + outer + tail;
}

void check_ga_domain(double nu, double p, int d) {
    if (d < 1 || d > 3) throw DomainError("dimension must be 1..3");
    if (!(p > 1.0) || !std::isfinite(p)) throw DomainError("p must lie in (1, infinity)");
    if (!(nu > d / p))
        throw DomainError("g_a lies in L^{p'} if and only if nu > d/p (nu = " + std::to_string(nu) + ")");
    if (!(nu - d / p < 1.0))
        throw DomainError("g_a lies in L^{p'} if and only if nu - d/p < 1 (nu = " + std::to_string(nu) + ")");
}

}  // namespace

double ga_norm(double nu, double p, int d, double magnitude, double rel_tol) {
    check_ga_domain(nu, p, d);
    if (!(magnitude > 0.0)) throw DomainError("|a| must be positive");
    const double pp = p / (p - 1.0);
    const GaKernel g{nu - d, magnitude, nu == static_cast<double>(d)};
    double total = 0.0;
    if (d == 1) {
        total = radial_integral(g, d, pp, 0.0, rel_tol) + radial_integral(g, d, pp, 1.0, rel_tol);
    } else {
        const double factor = d == 2 ? 2.0 : 2.0 * kPi;
        auto angular = [&](double t, double from_left, double from_right) {
            const double sh = t < 0.5 * kPi ? std::sin(0.5 * from_left) : std::cos(0.5 * from_right);
            const double jac = d == 2 ? 1.0 : std::sin(t);
            return jac * radial_integral(g, d, pp, sh, rel_tol);
        };
        total = factor * tanh_sinh(angular, 0.0, kPi, rel_tol).value;
    }
    return std::pow(total, 1.0 / pp);
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2) throw DomainError("slope fit needs two or more matched points");
    const double n = static_cast<double>(x.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(x[i] > 0.0 && y[i] > 0.0)) throw DomainError("log-log fit needs positive data");
        const double lx = std::log(x[i]);
        const double ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

StudyTable ga_norm_study(double nu, double p, int d, const std::vector<double>& magnitudes, double rel_tol) {
    check_ga_domain(nu, p, d);
    const double expected = nu - d / p;
    StudyTable table;
    table.param_names = {"nu", "p", "d", "magnitude"};
    const std::string snu = format_double(nu);
    const std::string sp = format_double(p);
    const std::string sd = std::to_string(d);
    std::vector<double> norms;
    for (double a : magnitudes) norms.push_back(ga_norm(nu, p, d, a, rel_tol));
    for (std::size_t i = 0; i < magnitudes.size(); ++i)
        table.add({snu, sp, sd, format_double(magnitudes[i])}, norms[i],
                  norms.front() * std::pow(magnitudes[i] / magnitudes.front(), expected));
    if (magnitudes.size() >= 2) table.add({snu, sp, sd, "slope"}, loglog_slope(magnitudes, norms), expected);
    return table;
}

double WindowProfile::operator()(double r) const { return radial_cutoff(r, inner, outer, smooth_transition); }

StudyTable polynomial_annihilation_study(const MultiIndex& alpha, double s, const WindowProfile& psi,
                                         const std::vector<double>& n_list, const GridSpec& grid) {
    grid.validate();
    if (!(s > 0.0)) throw DomainError("annihilation study needs s > 0");
    if (n_list.size() < 2) throw DomainError("annihilation study needs two or more dilations");
    for (int axis = grid.d; axis < 3; ++axis)
        if (alpha.a[axis] != 0) throw StructuralError("multi-index exceeds grid dimension");
    const int k = alpha.order();
    const double expected = grid.d + 2.0 * (k - s);
    for (double n : n_list)
        if (!(n > 0.0) || psi.outer * n >= grid.L / 2.0) {
            std::ostringstream msg;
            msg << "window support |x| <= " << psi.outer * n << " does not fit in the period [-" << grid.L / 2 << ", "
                << grid.L / 2 << ")";
            throw PreconditionError(msg.str());
        }

    auto energy = [&](const GridSpec& g, double n) {
        const Field f = Field::sample(g, [&](const Vec3& x) {
            double mono = 1.0;
            for (int axis = 0; axis < g.d; ++axis) mono *= std::pow(x[axis], alpha.a[axis]);
            return mono * psi(norm(x) / n);
        });
        const double v = quadrature_lp_norm(frac_laplacian(f, s), 2.0);
        return v * v;
    };

    StudyTable table;
    table.param_names = {"d", "k", "s", "n"};
    const std::string sd = std::to_string(grid.d);
    const std::string sk = std::to_string(k);
    const std::string ss = format_double(s);
    std::vector<double> measured;
    for (double n : n_list) {
        const double e = energy(grid, n);
        // Same samples on the grid of period L/n hold x^alpha psi(x), so the identity is exact.
        GridSpec unit = grid;
        unit.L = grid.L / n;
        const double reference = std::pow(n, expected) * energy(unit, 1.0);
        measured.push_back(e);
        table.add({sd, sk, ss, format_double(n)}, e, reference);
    }
    table.add({sd, sk, ss, "slope"}, loglog_slope(n_list, measured), expected);
    return table;
}

}  // namespace homsob
