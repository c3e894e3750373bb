#pragma once

#include <string>
#include <vector>

#include "homsob/grid.hpp"
#include "homsob/littlewood_paley.hpp"
#include "homsob/polynomial.hpp"
#include "homsob/quadrature.hpp"

namespace homsob {

enum class Regime { Subcritical, Critical, Supercritical };

std::string to_string(Regime r);

/// (s, p, d) with m = floor(s - d/p), p* and the regime tag.
struct RegimeParams {
    double s = 0.0;
    double p = 2.0;
    int d = 1;
    int m = -1;
    double pstar = 0.0;  // only meaningful when Subcritical
    Regime regime = Regime::Subcritical;

    /// s - d/p
    double excess() const { return s - d / p; }
};

/// Throws DomainError unless s > 0, 1 < p < infinity and 1 <= d <= 3.
/// s - d/p is treated as an integer when within 1e-12 of one.
RegimeParams classify_regime(double s, double p, int d);

/// P_{f;m;x0}: coefficients d^alpha f(x0) / alpha! from spectral derivatives.
/// Throws PreconditionError when the spectral tail exceeds 1e-8.
Polynomial taylor_polynomial(const Field& f, int m, const Vec3& x0 = {0.0, 0.0, 0.0});

/// Relative amplitude of the outer spectral band (some |k_i| >= 3N/8) against max |coeffs|.
double spectral_tail(const SpectrumField& F);

/// A function on the grid split as periodic samples plus an explicit polynomial.
/// Canonical representatives for m >= 1 carry polynomial growth that a periodic
/// field cannot hold; derivatives of the trend are taken analytically.
struct Representative {
    Field periodic;
    Polynomial trend;

    Field sample() const;
};

struct BlockDiagnostics {
    int j = 0;
    /// sup over the ball of |M_j u - (subtracted Taylor polynomial)|
    double block_sup = 0.0;
    /// ||M_j u||_{L^p}
    double block_lp = 0.0;
    /// Taylor coefficients removed from this block, indexed like RealizationResult::taylor_indices.
    std::vector<double> taylor_coeffs;
};

struct RealizationResult {
    Representative f;
    RegimeParams regime;
    Ball ball;
    std::vector<MultiIndex> taylor_indices;
    std::vector<BlockDiagnostics> diagnostics;
    /// Constant or order-m ball averages removed by the final normalization.
    std::vector<double> removed_ball_averages;
    /// Taylor coefficients of f2 removed in the critical m >= 1 normalization.
    Polynomial removed_taylor;

    Field field() const { return f.sample(); }
};

/// Canonical representative of the class of u modulo polynomials.
/// Throws PreconditionError on insufficient partition coverage and PlanError when the
/// ball leaves the period or holds fewer than 8 grid points.
RealizationResult realize(const Field& u, const RegimeParams& rp, const DyadicPartition& part, const Ball& ball);
RealizationResult realize(const Field& u, const RegimeParams& rp);
/// Uses only the periodic part: polynomials belong to the trivial class.
RealizationResult realize(const Representative& u, const RegimeParams& rp, const DyadicPartition& part, const Ball& ball);

struct ConstraintResidual {
    std::string name;
    double value = 0.0;
};

struct ConstraintReport {
    Regime regime = Regime::Subcritical;
    double scale = 0.0;
    double tolerance = 0.0;  // 1e-7 * scale
    /// Taylor data at 0 and ball-average residuals required by the regime.
    std::vector<ConstraintResidual> residuals;
    /// Normalization of the critical m >= 1 statement, reported but not enforced.
    std::vector<ConstraintResidual> informational;
    double sobolev_norm = 0.0;  // ||Delta^{s/2} f||_{L^p}
    double max_residual = 0.0;
    bool pass = false;
};

ConstraintReport verify_canonical_constraints(const Representative& f, const RegimeParams& rp, const Ball& ball);
ConstraintReport verify_canonical_constraints(const Field& f, const RegimeParams& rp, const Ball& ball);

/// Geometric decay of the per-j diagnostics: tail sums T(J) = sum_{|j|>=J} block_sup,
/// ratio T(J+1)/T(J) <= max_ratio for J >= from_j until T falls below noise_floor * T(0).
struct DecayCheck {
    double worst_ratio = 0.0;
    bool pass = true;
};
DecayCheck check_geometric_decay(const RealizationResult& r, int from_j = 4, double max_ratio = 0.75,
                                 double noise_floor = 1e-12);

}  // namespace homsob
