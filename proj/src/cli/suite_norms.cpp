#include <cmath>

#include "homsob/direct_norms.hpp"
#include "homsob/multiplier.hpp"
#include "homsob/oracles.hpp"
#include "suite_common.hpp"

namespace homsob::suites {

namespace {

// max |D| over samples whose stencil stays inside |x| <= radius.
double interior_max(const DifferenceResult& r, const Index3& step, int k, double radius) {
    const GridSpec& g = r.values.grid;
    double m = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (r.wrapped[i]) continue;
        const Index3 base = g.unflatten(i);
        Index3 end = base;
        for (int a = 0; a < 3; ++a) end[a] += k * step[a];
        bool ok = true;
        for (const Index3& idx : {base, end}) {
            Vec3 x{0, 0, 0};
            for (int a = 0; a < g.d; ++a) x[a] = -g.L / 2 + idx[a] * g.spacing();
            ok = ok && norm(x) <= radius;
        }
        if (ok) m = std::max(m, std::abs(r.values.values[i]));
    }
    return m;
}

Field windowed_monomial(const GridSpec& g, Index3 a) { return make_test_function(TestFunctionSpec::windowed_polynomial(MultiIndex{a}), g); }

}  // namespace

SuiteReport norms_suite(const RunConfig& cfg) {
    Recorder rec("norms");
    Rng rng(cfg.seed + 2);
    const GridSpec g1 = cfg.grid_for(1);
    const GridSpec g2 = cfg.grid_for(2);
    const double R1 = g1.L / 8.0;
    const double R2 = g2.L / 8.0;

    rec.block("NRM-01", [&] {
        const double h = g1.spacing();
        const Field x = windowed_monomial(g1, {1, 0, 0});
        const Field x2 = windowed_monomial(g1, {2, 0, 0});
        double e1 = 0.0, e2 = 0.0;
        const auto d1 = finite_difference(x, {3, 0, 0}, 1);
        const auto d2 = finite_difference(x2, {3, 0, 0}, 2);
        const Field c1 = Field::sample(g1, [&](const Vec3&) { return 3.0 * h; });
        const Field c2 = Field::sample(g1, [&](const Vec3&) { return 2.0 * (3.0 * h) * (3.0 * h); });
        Field r1 = d1.values - c1, r2 = d2.values - c2;
        e1 = interior_max({r1, d1.wrapped}, {3, 0, 0}, 1, R1);
        e2 = interior_max({r2, d2.wrapped}, {3, 0, 0}, 2, R1);
        rec.le("NRM-01-k1", "D_h x = |h| on the window plateau (abs)", e1, 1e-12);
        rec.le("NRM-01-k2", "D_h^2 x^2 = 2|h|^2 on the window plateau (abs)", e2, 1e-11);
    });

    rec.block("NRM-02", [&] {
        double worst1 = 0.0, worst2 = 0.0;
        for (int k = 1; k <= 4; ++k)
            for (int q = 0; q < k; ++q) {
                const Field f1 = windowed_monomial(g1, {q, 0, 0});
                const Index3 s1{2, 0, 0};
                worst1 = std::max(worst1, interior_max(finite_difference(f1, s1, k), s1, k, R1) / f1.max_abs());
                for (int qa = 0; qa <= q; ++qa) {
                    const Field f2 = windowed_monomial(g2, {qa, q - qa, 0});
                    const Index3 s2{1, -1, 0};
                    worst2 = std::max(worst2, interior_max(finite_difference(f2, s2, k), s2, k, R2) / f2.max_abs());
                }
            }
        rec.le("NRM-02-d1", "D_h^k annihilates windowed polynomials of degree <= k-1; k = 1..4; d = 1 (interior / scale)", worst1,
               1e-10);
        rec.le("NRM-02-d2", "D_h^k annihilates windowed polynomials of degree <= k-1; k = 1..4; d = 2 diagonal h (interior / scale)",
               worst2, 1e-10);
    });

    rec.block("NRM-03", [&] {
        double worst = 0.0;
        bool flags = true;
        for (const GridSpec& g : {g1, g2}) {
            const Field f = random_field(g, rng);
            for (int k = 1; k <= 4; ++k)
                for (const Index3& step : {Index3{1, 0, 0}, Index3{3, g.d > 1 ? -2 : 0, 0}, Index3{-5, g.d > 1 ? 1 : 0, 0}}) {
                    const auto a = finite_difference(f, step, k);
                    const auto b = finite_difference_recursive(f, step, k);
                    worst = std::max(worst, max_diff(a.values, b.values) / f.max_abs());
                    flags = flags && a.wrapped == b.wrapped;
                }
        }
        rec.le("NRM-03", "recursive D_h(D_h^{k-1}) equals the binomial closed form; k = 1..4 (sup / scale)", worst, 1e-12);
        rec.truth("NRM-03-wrap", "recursive and closed forms flag the same wrapped stencils", flags);
    });

    rec.block("NRM-04", [&] {
        const Field f = random_field(g2, rng), g = random_field(g2, rng);
        const Index3 step{2, 1, 0};
        const Field lhs = finite_difference(2.5 * f + (-1.5) * g, step, 3).values;
        const Field rhs = 2.5 * finite_difference(f, step, 3).values + (-1.5) * finite_difference(g, step, 3).values;
        rec.le("NRM-04", "finite_difference is linear (sup / scale)", max_diff(lhs, rhs) / rhs.max_abs(), 1e-12);
        rec.throws<DomainError>("NRM-04-zero", "h = 0 is rejected", [&] { (void)finite_difference(f, {0, 0, 0}, 2); });
    });

    rec.block("NRM-05", [&] {
        const Field c = Field::sample(g2, [](const Vec3&) { return -3.5; });
        rec.le("NRM-05-lip", "lipschitz_norm(constant) = 0", lipschitz_norm(c, 0.5, cfg.diff_plan), 0.0);
        rec.le("NRM-05-bmo", "bmo_norm(constant) = 0", bmo_norm(c, cfg.ball_plan), 0.0);
    });

    rec.block("NRM-06", [&] {
        const Field f = make_test_function(TestFunctionSpec::windowed_power_abs(0.5), g1);
        DiffSamplingPlan plan = cfg.diff_plan;
        plan.observation_radius = R1;
        rec.in("NRM-06", "windowed |x|^0.5 (d = 1): Lipschitz estimator on the plateau", lipschitz_norm(f, 0.5, plan), 0.98, 1.02);
    });

    rec.block("NRM-07", [&] {
        const Field f = s_infty_corpus(g2)[0];
        DiffSamplingPlan coarse = cfg.diff_plan;
        coarse.magnitudes = 2;
        coarse.base_step = 2;
        DiffSamplingPlan axes = cfg.diff_plan;
        axes.directions = {{1, 0, 0}, {0, 1, 0}};
        const double full = lipschitz_norm(f, 1.5, cfg.diff_plan);
        rec.ge("NRM-07-lip", "Lipschitz estimator: full plan minus coarse plan (refinement monotone)",
               full - lipschitz_norm(f, 1.5, coarse), 0.0);
        rec.ge("NRM-07-dir", "Lipschitz estimator: full plan minus axis-only plan (refinement monotone)",
               full - lipschitz_norm(f, 1.5, axes), 0.0);
        BallSamplingPlan sparse = cfg.ball_plan;
        sparse.center_stride = 4;
        sparse.radii_count = 3;
        rec.ge("NRM-07-bmo", "BMO estimator: full plan minus sparse plan (refinement monotone)",
               bmo_norm(f, cfg.ball_plan) - bmo_norm(f, sparse), 0.0);
    });

    rec.block("NRM-08", [&] {
        const Field f = random_field(g1, rng, 8, 40), g = random_field(g1, rng, 8, 40);
        const double c = -2.25;
        const double lf = lipschitz_norm(f, 0.7, cfg.diff_plan), lg = lipschitz_norm(g, 0.7, cfg.diff_plan);
        const double bf = bmo_norm(f, cfg.ball_plan), bg = bmo_norm(g, cfg.ball_plan);
        rec.le("NRM-08-lip-hom", "lipschitz_norm(c f) = |c| lipschitz_norm(f) (rel)",
               std::abs(lipschitz_norm(c * f, 0.7, cfg.diff_plan) / (std::abs(c) * lf) - 1.0), 1e-12);
        rec.le("NRM-08-bmo-hom", "bmo_norm(c f) = |c| bmo_norm(f) (rel)",
               std::abs(bmo_norm(c * f, cfg.ball_plan) / (std::abs(c) * bf) - 1.0), 1e-12);
        rec.le("NRM-08-lip-tri", "lipschitz_norm(f + g) - lipschitz_norm(f) - lipschitz_norm(g)",
               lipschitz_norm(f + g, 0.7, cfg.diff_plan) - lf - lg, 1e-10);
        rec.le("NRM-08-bmo-tri", "bmo_norm(f + g) - bmo_norm(f) - bmo_norm(g)", bmo_norm(f + g, cfg.ball_plan) - bf - bg, 1e-10);
    });

    rec.block("NRM-09", [&] {
        const Field f = make_test_function(TestFunctionSpec::windowed_log_abs(0.5), g1);
        Field shifted = f;
        shifted.add_constant(7.0);
        const double b = bmo_norm(f, cfg.ball_plan);
        rec.le("NRM-09", "bmo_norm(f + c) = bmo_norm(f) (rel)", std::abs(bmo_norm(shifted, cfg.ball_plan) - b) / b, 1e-12);
        GridSpec fine = g1;
        fine.N *= 2;
        const double bf = bmo_norm(make_test_function(TestFunctionSpec::windowed_log_abs(0.5), fine), cfg.ball_plan);
        rec.le("NRM-10", "windowed log|x| BMO estimate: N vs 2N relative change", std::abs(bf - b) / b, 0.05);
    });

    rec.block("NRM-11", [&] {
        // The d = 2 window transition needs h = L/512 to keep spectral derivatives at 1e-7.
        const GridSpec fine2{2, 40.0, 512};
        for (const auto& [label, g, a] : {std::tuple{std::string("d1"), g1, Index3{1, 0, 0}},
                                          std::tuple{std::string("d2"), fine2, Index3{1, 1, 0}}}) {
            const Field f = windowed_monomial(g, a);
            const int m = a[0] + a[1];
            BallSamplingPlan plan = cfg.ball_plan;
            plan.observation_radius = g.L / 8.0;
            double scale = 0.0;
            for (const MultiIndex& al : multi_indices_of_order(g.d, m)) scale = std::max(scale, spectral_derivative(f, al).max_abs());
            rec.le("NRM-11-" + label, "sobolev_bmo_norm of a windowed degree-m monomial on the plateau (/ scale)",
                   sobolev_bmo_norm(f, m, plan) / scale, 1e-6);
        }
    });

    rec.block("NRM-12", [&] {
        const Field f = s_infty_corpus(g2)[3];
        const double direct = bmo_norm(spectral_derivative(f, MultiIndex{{1, 0, 0}}), cfg.ball_plan) +
                              bmo_norm(spectral_derivative(f, MultiIndex{{0, 1, 0}}), cfg.ball_plan);
        rec.le("NRM-12", "sobolev_bmo_norm(m = 1; d = 2) = sum of first-derivative BMO norms (rel)",
               std::abs(sobolev_bmo_norm(f, 1, cfg.ball_plan) / direct - 1.0), 1e-14);
    });

    rec.block("NRM-13", [&] {
        const Field f = s_infty_corpus(g1)[0], g = s_infty_corpus(g1)[4];
        const double sum = sobolev_bmo_norm(f + g, 2, cfg.ball_plan);
        rec.le("NRM-13", "sobolev_bmo_norm(f + g) - sobolev_bmo_norm(f) - sobolev_bmo_norm(g) (m = 2)",
               sum - sobolev_bmo_norm(f, 2, cfg.ball_plan) - sobolev_bmo_norm(g, 2, cfg.ball_plan), 1e-10);
    });

    rec.block("NRM-14", [&] {
        const Field f = random_field(g1, rng);
        DiffSamplingPlan empty = cfg.diff_plan;
        empty.observation_radius = 0.5 * g1.spacing();
        rec.throws<PlanError>("NRM-14-lip", "empty Lipschitz plan is rejected", [&] { (void)lipschitz_norm(f, 0.5, empty); });
        BallSamplingPlan tiny = cfg.ball_plan;
        tiny.r0 = 2.0 * g1.spacing();
        rec.throws<PlanError>("NRM-14-bmo", "balls with fewer than 8 grid points are rejected", [&] { (void)bmo_norm(f, tiny); });
        BallSamplingPlan wide = cfg.ball_plan;
        wide.r0 = g1.L / 3.0;
        rec.throws<PlanError>("NRM-14-wide", "radii beyond L/4 leave an empty ball family", [&] { (void)bmo_norm(f, wide); });
        rec.throws<DomainError>("NRM-14-gamma", "gamma <= 0 is rejected", [&] { (void)lipschitz_norm(f, 0.0); });
        rec.throws<DomainError>("NRM-14-m", "sobolev_bmo_norm rejects m < 1", [&] { (void)sobolev_bmo_norm(f, 0); });
    });

    return rec.take();
}

}  // namespace homsob::suites
