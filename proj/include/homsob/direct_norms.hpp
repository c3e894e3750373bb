#pragma once

#include <optional>
#include <vector>

#include "homsob/grid.hpp"
#include "homsob/polynomial.hpp"

namespace homsob {

/// Difference stencils for the homogeneous Lipschitz seminorm.
/// Increments are 2^a * base_step grid steps along every direction of `directions`
/// (axes plus diagonals by default), a = 0 .. magnitudes-1.
struct DiffSamplingPlan {
    int base_step = 1;
    int magnitudes = 0;  // 0: up to N/4 steps
    std::vector<Index3> directions;  // empty: axes and all diagonals
    /// When set, every stencil point must satisfy |x| <= observation_radius.
    std::optional<double> observation_radius;

    static DiffSamplingPlan defaults() { return {}; }
};

/// Ball family for the BMO seminorm: centers on a stride of grid points,
/// radii r_i = r0 * rho^i, i < radii_count, all radii <= L/4.
struct BallSamplingPlan {
    int center_stride = 1;
    double r0 = 0.0;  // 0: two grid spacings
    double rho = 1.25;
    int radii_count = 0;  // 0: every radius up to L/4
    std::optional<double> observation_radius;

    static BallSamplingPlan defaults() { return {}; }
};

/// k-th order forward difference with periodic indexing.
struct DifferenceResult {
    Field values;
    /// True where the stencil x, x+h, ..., x+kh wrapped around the period.
    std::vector<bool> wrapped;
};

/// Closed form sum_j (-1)^{k-j} C(k,j) f(x + j h).
DifferenceResult finite_difference(const Field& f, const Index3& step, int k);
/// D_h (D_h^{k-1} f), the recursive definition.
DifferenceResult finite_difference_recursive(const Field& f, const Index3& step, int k);

/// max over the plan of |D_h^{floor(gamma)+1} f(x)| / |h|^gamma using non-wrapping stencils.
/// A lower bound of the continuum seminorm. Throws PlanError on an empty plan.
double lipschitz_norm(const Field& f, double gamma, const DiffSamplingPlan& plan = DiffSamplingPlan::defaults());

/// max over plan balls of the mean oscillation (1/|B|) sum_B |f - f_B|.
double bmo_norm(const Field& f, const BallSamplingPlan& plan = BallSamplingPlan::defaults());

/// sum_{|alpha| = m} bmo_norm(d^alpha f) with spectral derivatives.
double sobolev_bmo_norm(const Field& f, int m, const BallSamplingPlan& plan = BallSamplingPlan::defaults());

}  // namespace homsob
