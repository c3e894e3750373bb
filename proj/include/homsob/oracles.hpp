#pragma once

#include <vector>

#include "homsob/grid.hpp"
#include "homsob/polynomial.hpp"
#include "homsob/study_table.hpp"

namespace homsob {

enum class KernelConvention { TwoPi, Angular };

/// TwoPi: Gamma((d-s)/2) / (2^s pi^{s/2} Gamma(s/2)), the constant stated for the 2 pi transform.
/// Angular: Gamma((d-s)/2) / (2^s pi^{d/2} Gamma(s/2)), the kernel constant of the
/// multiplier |omega|^{-s} under f^(omega) = int f e^{-i x omega} dx.
/// Throws DomainError for s <= 0 and PoleError for s >= d or |value| > 1e12.
double riesz_kernel_constant(double s, int d, KernelConvention convention);

/// Lattice zeta sum_{n in Z^d, n != 0} |n|^{-q}, analytically continued to every real q != d.
double lattice_zeta(int d, double q);

/// c_{s,d} int |x - y|^{s-d} f(y) dy by punctured grid quadrature with zeta-function
/// corrections of orders h^s and h^{s+2} at the singular point. Throws PreconditionError
/// unless |f| <= 1e-5 max|f| for |y| > L/4.
Field riesz_potential_direct(const Field& f, double s);
/// Same quadrature with unit constant (the kernel |x - y|^{s-d} alone).
Field riesz_convolution_unit(const Field& f, double s);

/// Least-squares scalar c making c * riesz_convolution_unit(f) match the spectral riesz_potential(f).
double calibrate_angular_constant(const Field& f, double s);

/// || g_a ||_{L^{p'}} for g_a(x) = |a - x|^{nu-d} - |x|^{nu-d}, a = |a| e_1
/// (log|a - x| - log|x| when nu == d, where the literal difference vanishes).
double ga_norm(double nu, double p, int d, double magnitude, double rel_tol = 1e-10);

/// Table of ||g_a|| for each magnitude plus a least-squares log-log slope row
/// against nu - d/p. Throws DomainError unless d/p < nu < 1 + d/p.
StudyTable ga_norm_study(double nu, double p, int d, const std::vector<double>& magnitudes, double rel_tol = 1e-10);

/// Least-squares slope of log y against log x.
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

/// Window psi: 1 on |x| <= 1, 0 on |x| >= 2.
struct WindowProfile {
    double inner = 1.0;
    double outer = 2.0;
    double operator()(double r) const;
};

/// ||Delta^{s/2}(x^alpha psi(x/n))||_{L^2}^2 per n, fitted slope against d + 2(|alpha| - s),
/// plus the exact-dilation self-check n^{d+2(k-s)} ||Delta^{s/2}(x^alpha psi)||^2 per row.
/// Throws PreconditionError when supp psi(./n) = {|x| <= 2n} does not fit in the period.
StudyTable polynomial_annihilation_study(const MultiIndex& alpha, double s, const WindowProfile& psi,
                                         const std::vector<double>& n_list, const GridSpec& grid);

struct TestFunctionSpec {
    enum class Kind { Gaussian, HermiteGaussian, WindowedPolynomial, WindowedLogAbs, WindowedPowerAbs } kind =
        Kind::Gaussian;
    double sigma = 1.0;      // Gaussian / HermiteGaussian width
    int order = 0;           // HermiteGaussian order
    MultiIndex alpha;        // WindowedPolynomial exponent
    double epsilon = 0.5;    // WindowedLogAbs regularization
    double gamma = 0.5;      // WindowedPowerAbs exponent
    double window = 0.0;     // plateau radius of windowed kinds; 0 means L/8
    double dilation = 1.0;   // evaluates f(dilation * x)

    static TestFunctionSpec gaussian(double sigma = 1.0);
    static TestFunctionSpec hermite_gaussian(int order, double sigma = 1.0);
    static TestFunctionSpec windowed_polynomial(const MultiIndex& alpha);
    static TestFunctionSpec windowed_log_abs(double epsilon = 0.5);
    static TestFunctionSpec windowed_power_abs(double gamma);
};

/// Gaussian: exp(-|x|^2 / (2 sigma^2)).
/// HermiteGaussian(n): He_n(x_1/sigma) exp(-|x|^2/(2 sigma^2)) = (-sigma d/dx_1)^n of the Gaussian.
/// WindowedPolynomial(alpha): x^alpha w(|x|/R), w = 1 on [0,1], 0 beyond 2.
/// WindowedLogAbs: log sqrt(|x|^2 + eps^2) w(|x|/R).
/// WindowedPowerAbs: |x|^gamma w(|x|/R).
/// Throws DomainError for features narrower than 4h or wider than L/4.
Field make_test_function(const TestFunctionSpec& spec, const GridSpec& grid);

/// Multiplies the spectrum by 1 - psi(2|omega|/rho), psi = 1 on [0, 3/2], 0 beyond 2.
/// Throws DomainError unless rho >= 2 * 2 pi / L.
Field s_infty_project(const Field& f, double rho);
Field s_infty_project(const Field& f);

/// The frozen S_inf corpus: projected HermiteGaussian members (order, sigma) on the grid.
std::vector<Field> s_infty_corpus(const GridSpec& grid);

}  // namespace homsob
