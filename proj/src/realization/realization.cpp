#include "homsob/realization.hpp"

#include <algorithm>
#include <limits>
#include <span>
#include <cmath>
#include <sstream>
#include <string>

#include "homsob/errors.hpp"
#include "homsob/fourier.hpp"
#include "homsob/multiplier.hpp"

namespace homsob {

namespace {

constexpr double kCriticalTolerance = 1e-12;
constexpr double kTaylorTailTolerance = 1e-8;
constexpr double kConstraintTolerance = 1e-7;

Vec3 origin_point() { return {0.0, 0.0, 0.0}; }

// d^alpha f(x0) from the spectrum.
double spectral_derivative_at(const SpectrumField& F, const MultiIndex& alpha, const Vec3& x0) {
    if (x0 == origin_point()) return spectral_derivative_at_origin(F, alpha).real();
    SpectrumField shifted = F;
    for (std::size_t i = 0; i < shifted.coeffs.size(); ++i) {
        const Vec3 w = F.grid.frequency(i);
        const double phase = w[0] * x0[0] + w[1] * x0[1] + w[2] * x0[2];
        shifted.coeffs[i] *= std::polar(1.0, phase);
    }
    return spectral_derivative_at_origin(shifted, alpha).real();
}

Polynomial spectral_taylor(const SpectrumField& F, const std::vector<MultiIndex>& indices, const Vec3& x0) {
    Polynomial P(F.grid.d, x0);
    for (const MultiIndex& alpha : indices) P.set(alpha, spectral_derivative_at(F, alpha, x0) / alpha.factorial());
    return P;
}

// d^alpha P evaluated at 0.
double derivative_at_origin(const Polynomial& P, const MultiIndex& alpha) {
    if (P.empty()) return 0.0;
    return P.derivative(alpha)(origin_point());
}

MultiplierSpec block_symbol(const DyadicPartition& part, int j) {
    return {[&part, j](const Vec3& w) { return Complex(part.eta_j(j, norm(w)), 0.0); }, ZeroModeRule::set_zero(), true};
}

std::vector<MultiIndex> removed_indices(const RegimeParams& rp, int d) {
    switch (rp.regime) {
        case Regime::Subcritical: return {};
        case Regime::Critical: return rp.m == 0 ? multi_indices_of_order(d, 0) : multi_indices_up_to(d, rp.m);
        case Regime::Supercritical: return multi_indices_up_to(d, rp.m);
    }
    return {};
}

double ball_average_of(const Representative& f, const MultiIndex& alpha, std::span<const std::size_t> pts) {
    const Field periodic = alpha.order() == 0 ? f.periodic : spectral_derivative(f.periodic, alpha);
    double avg = ball_average(periodic, pts);
    if (!f.trend.empty()) {
        const Field trend = f.trend.derivative(alpha).sample(f.periodic.grid);
        avg += ball_average(trend, pts);
    }
    return avg;
}

std::string index_label(const MultiIndex& alpha, int d) {
    std::string s;
    for (int axis = 0; axis < d; ++axis) s += std::to_string(alpha.a[axis]);
    return s;
}

}  // namespace

std::string to_string(Regime r) {
    switch (r) {
        case Regime::Subcritical: return "subcritical";
        case Regime::Critical: return "critical";
        case Regime::Supercritical: return "supercritical";
    }
    return "unknown";
}

RegimeParams classify_regime(double s, double p, int d) {
    if (!(s > 0.0) || !std::isfinite(s)) throw DomainError("smoothness s must be positive and finite");
    if (!(p > 1.0) || !std::isfinite(p)) throw DomainError("integrability p must lie in (1, infinity)");
    if (d < 1 || d > 3) throw DomainError("dimension d must be 1..3");
    RegimeParams rp;
    rp.s = s;
    rp.p = p;
    rp.d = d;
    const double e = s - d / p;
    const double nearest = std::round(e);
    if (std::abs(e - nearest) < kCriticalTolerance && nearest >= 0.0) {
        rp.regime = Regime::Critical;
        rp.m = static_cast<int>(nearest);
    } else if (e < 0.0) {
        rp.regime = Regime::Subcritical;
        rp.m = static_cast<int>(std::floor(e));
        rp.pstar = 1.0 / (1.0 / p - s / d);
    } else {
        rp.regime = Regime::Supercritical;
        rp.m = static_cast<int>(std::floor(e));
    }
    return rp;
}

double spectral_tail(const SpectrumField& F) {
    const double top = F.max_abs();
    if (top == 0.0) return 0.0;
    const int band = 3 * F.grid.N / 8;
    double outer = 0.0;
    for (std::size_t i = 0; i < F.coeffs.size(); ++i) {
        const Index3 k = F.grid.wavenumbers(i);
        bool in_band = false;
        for (int axis = 0; axis < F.grid.d; ++axis) in_band = in_band || std::abs(k[axis]) >= band;
        if (in_band) outer = std::max(outer, std::abs(F.coeffs[i]));
    }
    return outer / top;
}

Polynomial taylor_polynomial(const Field& f, int m, const Vec3& x0) {
    if (m < 0) throw DomainError("Taylor degree must be >= 0");
    const SpectrumField F = forward_transform(f);
    const double tail = spectral_tail(F);
    if (tail > kTaylorTailTolerance) {
        std::ostringstream msg;
        msg << "field is not smooth at grid scale: relative spectral tail " << tail << " exceeds 1e-8";
        throw PreconditionError(msg.str());
    }
    return spectral_taylor(F, multi_indices_up_to(f.grid.d, m), x0);
}

Field Representative::sample() const {
    Field out = periodic;
    if (!trend.empty()) out += trend.sample(periodic.grid);
    return out;
}

RealizationResult realize(const Field& u, const RegimeParams& rp, const DyadicPartition& part, const Ball& ball) {
    u.validate();
    const GridSpec& g = u.grid;
    if (rp.d != g.d) throw StructuralError("regime dimension differs from field dimension");
    const SpectrumField F = forward_transform(u);
    require_lp_coverage(F, part);
    const std::vector<std::size_t> pts = ball_points(g, ball);
    if (pts.size() < 8) throw PlanError("ball holds fewer than 8 grid points");

    RealizationResult r;
    r.regime = rp;
    r.ball = ball;
    r.taylor_indices = removed_indices(rp, g.d);
    r.removed_taylor = Polynomial(g.d);

    SpectrumField sum{g, std::vector<Complex>(F.coeffs.size(), Complex(0.0, 0.0)), F.source_kind};
    Polynomial trend(g.d);
    for (int j = part.jmin(); j <= part.jmax(); ++j) {
        const SpectrumField block = apply_multiplier(F, block_symbol(part, j));
        for (std::size_t i = 0; i < sum.coeffs.size(); ++i) sum.coeffs[i] += block.coeffs[i];

        const bool subtract = rp.regime == Regime::Supercritical || (rp.regime == Regime::Critical && j <= 0);
        Polynomial P(g.d);
        BlockDiagnostics diag;
        diag.j = j;
        if (subtract) {
            P = spectral_taylor(block, r.taylor_indices, origin_point());
            for (const MultiIndex& alpha : r.taylor_indices) diag.taylor_coeffs.push_back(P.coeff(alpha));
            trend -= P;
        }
        const Field bf = inverse_transform(block);
        for (std::size_t idx : pts) {
            const double v = bf.values[idx].real() - (P.empty() ? 0.0 : P(g.point(idx)));
            diag.block_sup = std::max(diag.block_sup, std::abs(v));
        }
        diag.block_lp = quadrature_lp_norm(bf, rp.p);
        r.diagnostics.push_back(std::move(diag));
    }
    r.f.periodic = inverse_transform(sum);
    r.f.trend = trend;

    if (rp.regime == Regime::Critical && rp.m == 0) {
        const double avg = ball_average_of(r.f, MultiIndex{}, pts);
        r.removed_ball_averages.push_back(avg);
        r.f.trend.add(MultiIndex{}, -avg);
    } else if (rp.regime == Regime::Critical) {
        // f = f2 - P_{f2;m-1;0} - sum_{|alpha|=m} (d^alpha f2)_B x^alpha / alpha!
        const std::vector<MultiIndex> lower = multi_indices_up_to(g.d, rp.m - 1);
        Polynomial pf2 = spectral_taylor(sum, lower, origin_point());
        for (const MultiIndex& alpha : lower) pf2.add(alpha, derivative_at_origin(r.f.trend, alpha) / alpha.factorial());
        std::vector<double> averages;
        for (const MultiIndex& alpha : multi_indices_of_order(g.d, rp.m))
            averages.push_back(ball_average_of(r.f, alpha, pts));
        r.f.trend -= pf2;
        std::size_t k = 0;
        for (const MultiIndex& alpha : multi_indices_of_order(g.d, rp.m)) {
            r.f.trend.add(alpha, -averages[k] / alpha.factorial());
            r.removed_ball_averages.push_back(averages[k++]);
        }
        r.removed_taylor = pf2;
    }
    return r;
}

RealizationResult realize(const Field& u, const RegimeParams& rp) {
    return realize(u, rp, DyadicPartition::for_grid(u.grid), default_ball(u.grid));
}

RealizationResult realize(const Representative& u, const RegimeParams& rp, const DyadicPartition& part, const Ball& ball) {
    return realize(u.periodic, rp, part, ball);
}

ConstraintReport verify_canonical_constraints(const Representative& f, const RegimeParams& rp, const Ball& ball) {
    const GridSpec& g = f.periodic.grid;
    ConstraintReport rep;
    rep.regime = rp.regime;
    rep.scale = f.periodic.max_abs();
    rep.tolerance = kConstraintTolerance * rep.scale;
    const SpectrumField F = forward_transform(f.periodic);

    auto taylor_residual = [&](const MultiIndex& alpha) {
        const double v = spectral_derivative_at_origin(F, alpha).real() + derivative_at_origin(f.trend, alpha);
        return ConstraintResidual{"taylor_" + index_label(alpha, g.d), v / alpha.factorial()};
    };

    std::vector<std::size_t> pts;
    try {
        pts = ball_points(g, ball);
    } catch (const PlanError&) {
        pts.clear();
    }
    auto ball_residual = [&](const MultiIndex& alpha) {
        const std::string name = alpha.order() == 0 ? "ball_mean" : "ball_mean_d" + index_label(alpha, g.d);
        if (pts.empty()) return ConstraintResidual{name, std::numeric_limits<double>::infinity()};
        return ConstraintResidual{name, ball_average_of(f, alpha, pts)};
    };

    switch (rp.regime) {
        case Regime::Subcritical: {
            const Field s = f.sample();
            std::vector<double> re = s.real_part();
            rep.residuals.push_back({"grid_mean", pairwise_sum(re) / static_cast<double>(re.size())});
            break;
        }
        case Regime::Supercritical:
            for (const MultiIndex& alpha : multi_indices_up_to(g.d, rp.m)) rep.residuals.push_back(taylor_residual(alpha));
            break;
        case Regime::Critical:
            if (rp.m == 0) {
                rep.residuals.push_back(ball_residual(MultiIndex{}));
            } else {
                for (const MultiIndex& alpha : multi_indices_up_to(g.d, rp.m - 1))
                    rep.residuals.push_back(taylor_residual(alpha));
                for (const MultiIndex& alpha : multi_indices_of_order(g.d, rp.m))
                    rep.residuals.push_back(ball_residual(alpha));
                rep.informational.push_back(ball_residual(MultiIndex{}));
                for (const MultiIndex& alpha : multi_indices_of_order(g.d, rp.m))
                    rep.informational.push_back(taylor_residual(alpha));
            }
            break;
    }
    rep.sobolev_norm = quadrature_lp_norm(frac_laplacian(f.periodic, rp.s), rp.p);
    rep.max_residual = 0.0;
    for (const auto& res : rep.residuals) rep.max_residual = std::max(rep.max_residual, std::abs(res.value));
    rep.pass = rep.max_residual <= rep.tolerance;
    return rep;
}

ConstraintReport verify_canonical_constraints(const Field& f, const RegimeParams& rp, const Ball& ball) {
    return verify_canonical_constraints(Representative{f, Polynomial(f.grid.d)}, rp, ball);
}

DecayCheck check_geometric_decay(const RealizationResult& r, int from_j, double max_ratio, double noise_floor) {
    int reach = 0;
    for (const auto& d : r.diagnostics) reach = std::max(reach, std::abs(d.j));
    auto tail = [&](int J) {
        double t = 0.0;
        for (const auto& d : r.diagnostics)
            if (std::abs(d.j) >= J) t += d.block_sup;
        return t;
    };
    DecayCheck out;
    const double floor = noise_floor * tail(0);
    for (int J = from_j; J < reach; ++J) {
        const double t = tail(J);
        if (t <= floor) break;
        const double ratio = tail(J + 1) / t;
        out.worst_ratio = std::max(out.worst_ratio, ratio);
        if (ratio > max_ratio) out.pass = false;
    }
    return out;
}

}  // namespace homsob
