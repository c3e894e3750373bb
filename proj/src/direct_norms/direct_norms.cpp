#include "homsob/direct_norms.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "homsob/errors.hpp"
#include "homsob/multiplier.hpp"
#include "homsob/quadrature.hpp"

namespace homsob {

namespace {

constexpr int kMinBallPoints = 8;

double binomial(int k, int j) {
    double c = 1.0;
    for (int i = 1; i <= j; ++i) c = c * (k - j + i) / i;
    return c;
}

void check_step(const GridSpec& g, const Index3& step, int k) {
    if (k < 1) throw DomainError("difference order must be >= 1");
    bool zero = true;
    for (int axis = 0; axis < 3; ++axis) {
        if (axis >= g.d && step[axis] != 0) throw StructuralError("step has components beyond the grid dimension");
        if (step[axis] != 0) zero = false;
    }
    if (zero) throw DomainError("difference step h must be nonzero");
}

// Index of x + j*step along each axis, unwrapped.
Index3 shifted(const Index3& base, const Index3& step, int j) {
    return {base[0] + j * step[0], base[1] + j * step[1], base[2] + j * step[2]};
}

bool inside(const GridSpec& g, const Index3& idx) {
    for (int axis = 0; axis < g.d; ++axis)
        if (idx[axis] < 0 || idx[axis] >= g.N) return false;
    return true;
}

std::size_t wrap(const GridSpec& g, Index3 idx) {
    for (int axis = 0; axis < g.d; ++axis) idx[axis] = ((idx[axis] % g.N) + g.N) % g.N;
    return g.flatten(idx);
}

std::vector<Index3> default_directions(int d) {
    std::vector<Index3> dirs;
    if (d == 1) return {{1, 0, 0}};
    if (d == 2) return {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {1, -1, 0}};
    for (int a = -1; a <= 1; ++a)
        for (int b = -1; b <= 1; ++b)
            for (int c = -1; c <= 1; ++c) {
                const Index3 v{a, b, c};
                // One representative per +-pair: first nonzero component positive.
                const int lead = a != 0 ? a : (b != 0 ? b : c);
                if (lead > 0) dirs.push_back(v);
            }
    return dirs;
}

bool within_observation(const GridSpec& g, const Index3& idx, const std::optional<double>& radius) {
    if (!radius) return true;
    return norm(g.point(g.flatten(idx))) <= *radius;
}

}  // namespace

DifferenceResult finite_difference(const Field& f, const Index3& step, int k) {
    f.validate();
    const GridSpec& g = f.grid;
    check_step(g, step, k);
    DifferenceResult r{Field(g, f.kind), std::vector<bool>(g.size(), false)};
    for (std::size_t i = 0; i < g.size(); ++i) {
        const Index3 base = g.unflatten(i);
        Complex acc(0.0, 0.0);
        for (int j = 0; j <= k; ++j) {
            const Index3 idx = shifted(base, step, j);
            if (!inside(g, idx)) r.wrapped[i] = true;
            const double sign = ((k - j) % 2 == 0) ? 1.0 : -1.0;
            acc += sign * binomial(k, j) * f.values[wrap(g, idx)];
        }
        r.values.values[i] = acc;
    }
    return r;
}

DifferenceResult finite_difference_recursive(const Field& f, const Index3& step, int k) {
    f.validate();
    check_step(f.grid, step, k);
    DifferenceResult r{f, std::vector<bool>(f.grid.size(), false)};
    for (int level = 0; level < k; ++level) {
        DifferenceResult once = finite_difference(r.values, step, 1);
        // x is wrapped at this level if x or x+h was already wrapped one level down.
        std::vector<bool> w(f.grid.size(), false);
        for (std::size_t i = 0; i < w.size(); ++i) {
            const Index3 next = shifted(f.grid.unflatten(i), step, 1);
            w[i] = once.wrapped[i] || r.wrapped[i] || (inside(f.grid, next) && r.wrapped[f.grid.flatten(next)]);
        }
        r.values = std::move(once.values);
        r.wrapped = std::move(w);
    }
    return r;
}

double lipschitz_norm(const Field& f, double gamma, const DiffSamplingPlan& plan) {
    if (!(gamma > 0.0)) throw DomainError("Lipschitz order gamma must be positive");
    f.validate();
    if (f.kind != FieldKind::Real) throw DomainError("lipschitz_norm needs a real field");
    const GridSpec& g = f.grid;
    if (plan.base_step < 1) throw PlanError("base step must be >= 1");
    const int k = static_cast<int>(std::floor(gamma)) + 1;
    const std::vector<Index3> dirs = plan.directions.empty() ? default_directions(g.d) : plan.directions;
    std::vector<int> mags;
    for (int a = 0;; ++a) {
        const int m = plan.base_step << a;
        if (plan.magnitudes > 0 ? a >= plan.magnitudes : m > g.N / 4) break;
        mags.push_back(m);
    }
    const double h = g.spacing();
    double best = 0.0;
    bool any = false;
    for (const Index3& dir : dirs) {
        for (int m : mags) {
            const Index3 step{dir[0] * m, dir[1] * m, dir[2] * m};
            check_step(g, step, k);
            const double len = h * std::sqrt(static_cast<double>(step[0] * step[0] + step[1] * step[1] + step[2] * step[2]));
            const double denom = std::pow(len, gamma);
            for (std::size_t i = 0; i < g.size(); ++i) {
                const Index3 base = g.unflatten(i);
                const Index3 last = shifted(base, step, k);
                if (!inside(g, last)) continue;
                if (plan.observation_radius &&
                    !(within_observation(g, base, plan.observation_radius) &&
                      within_observation(g, last, plan.observation_radius)))
                    continue;
                double acc = 0.0;
                for (int j = 0; j <= k; ++j) {
                    const double sign = ((k - j) % 2 == 0) ? 1.0 : -1.0;
                    acc += sign * binomial(k, j) * f.values[g.flatten(shifted(base, step, j))].real();
                }
                best = std::max(best, std::abs(acc) / denom);
                any = true;
            }
        }
    }
    if (!any) throw PlanError("difference plan has no admissible stencil");
    return best;
}

double bmo_norm(const Field& f, const BallSamplingPlan& plan) {
    f.validate();
    if (f.kind != FieldKind::Real) throw DomainError("bmo_norm needs a real field");
    const GridSpec& g = f.grid;
    const double h = g.spacing();
    if (plan.center_stride < 1) throw PlanError("center stride must be >= 1");
    if (!(plan.rho > 1.0 && plan.rho <= 2.0)) throw PlanError("radius ratio rho must lie in (1, 2]");
    const bool auto_r0 = plan.r0 == 0.0;
    // Radius 2h holds only 5 points in d = 1; the default start is the smallest admissible radius.
    const double r0 = auto_r0 ? (g.d == 1 ? 4.0 * h : 2.0 * h) : plan.r0;
    if (r0 < 2.0 * h * (1.0 - 1e-12)) throw PlanError("smallest radius must be at least two grid spacings");
    std::vector<double> radii;
    for (int i = 0;; ++i) {
        const double r = r0 * std::pow(plan.rho, i);
        if (plan.radii_count > 0 && i >= plan.radii_count) break;
        if (r > g.L / 4.0 * (1.0 + 1e-12)) {
            if (plan.radii_count > 0) throw PlanError("radius exceeds L/4");
            break;
        }
        radii.push_back(r);
    }
    if (radii.empty()) throw PlanError("ball plan has no radii");

    double best = 0.0;
    bool any = false;
    std::vector<double> vals;
    for (double r : radii) {
        const int reach = static_cast<int>(std::floor(r / h + 1e-9));
        std::vector<Index3> offsets;
        for (int a = -reach; a <= reach; ++a)
            for (int b = (g.d >= 2 ? -reach : 0); b <= (g.d >= 2 ? reach : 0); ++b)
                for (int c = (g.d >= 3 ? -reach : 0); c <= (g.d >= 3 ? reach : 0); ++c)
                    if (h * std::sqrt(static_cast<double>(a * a + b * b + c * c)) <= r * (1.0 + 1e-12))
                        offsets.push_back({a, b, c});
        if (static_cast<int>(offsets.size()) < kMinBallPoints)
            throw PlanError("ball of radius " + std::to_string(r) + " holds " + std::to_string(offsets.size()) +
                            " grid points (need 8)");
        vals.resize(offsets.size());
        for (std::size_t i = 0; i < g.size(); ++i) {
            const Index3 c = g.unflatten(i);
            bool on_stride = true;
            for (int axis = 0; axis < g.d; ++axis) on_stride = on_stride && (c[axis] % plan.center_stride == 0);
            if (!on_stride) continue;
            bool fits = true;
            for (int axis = 0; axis < g.d; ++axis) fits = fits && c[axis] - reach >= 0 && c[axis] + reach < g.N;
            if (!fits) continue;
            if (plan.observation_radius && norm(g.point(i)) + r > *plan.observation_radius) continue;
            for (std::size_t o = 0; o < offsets.size(); ++o)
                vals[o] = f.values[g.flatten(shifted(c, offsets[o], 1))].real();
            const double avg = pairwise_sum(vals) / static_cast<double>(vals.size());
            for (auto& v : vals) v = std::abs(v - avg);
            best = std::max(best, pairwise_sum(vals) / static_cast<double>(vals.size()));
            any = true;
        }
    }
    if (!any) throw PlanError("ball plan has no admissible ball");
    return best;
}

double sobolev_bmo_norm(const Field& f, int m, const BallSamplingPlan& plan) {
    if (m < 1) throw DomainError("Sobolev-BMO order m must be >= 1");
    double total = 0.0;
    for (const MultiIndex& alpha : multi_indices_of_order(f.grid.d, m)) total += bmo_norm(spectral_derivative(f, alpha), plan);
    return total;
}

}  // namespace homsob
