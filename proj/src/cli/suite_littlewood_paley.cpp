#include <cmath>
#include <numbers>

#include "homsob/direct_norms.hpp"
#include "homsob/embedding.hpp"
#include "homsob/fourier.hpp"
#include "homsob/littlewood_paley.hpp"
#include "homsob/multiplier.hpp"
#include "homsob/oracles.hpp"
#include "suite_common.hpp"

namespace homsob::suites {

namespace {

constexpr double kPi = std::numbers::pi;

// cos(w0 x1) with w0 = 2 pi k / L.
Field resonant_cosine(const GridSpec& g, int k) {
    const double w0 = 2.0 * kPi * k / g.L;
    return Field::sample(g, [w0](const Vec3& x) { return std::cos(w0 * x[0]); });
}

// Smallest wavenumber k with 2 pi k / L inside [lo, hi], or 0.
int wavenumber_in(const GridSpec& g, double lo, double hi) {
    for (int k = 1; k < g.N / 2; ++k) {
        const double w = 2.0 * kPi * k / g.L;
        if (w >= lo && w <= hi) return k;
    }
    return 0;
}

}  // namespace

SuiteReport littlewood_paley_suite(const RunConfig& cfg) {
    Recorder rec("littlewood-paley");
    Rng rng(cfg.seed + 1);
    const GridSpec g1 = cfg.grid_for(1);
    const GridSpec g2 = cfg.grid_for(2);
    const DyadicPartition p1 = cfg.partition_for(g1);
    const DyadicPartition p2 = cfg.partition_for(g2);

    rec.block("LP-01", [&] {
        const DyadicPartition part(-6, 6);
        rec.le("LP-01-plateau", "eta(1.2) = 1", std::abs(part.eta(1.2) - 1.0), 0.0);
        rec.le("LP-01-support", "eta(3) = 0", std::abs(part.eta(3.0)), 0.0);
        double outside = 0.0, plateau = 0.0;
        for (int i = 0; i <= 400; ++i) {
            const double r = 4.0 * i / 400.0;
            if (r < 0.5 || r > 2.0) outside = std::max(outside, std::abs(part.eta(r)));
            if (r >= 1.0 && r <= 1.5) plateau = std::max(plateau, std::abs(part.eta(r) - 1.0));
        }
        rec.le("LP-01-supp", "eta vanishes outside 1/2 <= |w| <= 2", outside, 0.0);
        rec.le("LP-01-one", "eta = 1 on 1 <= |w| <= 3/2", plateau, 0.0);
    });

    rec.block("LP-02", [&] {
        const DyadicPartition part(-6, 6);
        double worst = 0.0;
        for (int i = 0; i <= 2000; ++i) {
            const double r = std::ldexp(1.0, -5) * std::pow(2.0, 10.0 * i / 2000.0);
            double sum = 0.0;
            for (int j = -6; j <= 6; ++j) sum += part.eta_j(j, r);
            worst = std::max(worst, std::abs(sum - 1.0));
        }
        rec.le("LP-02", "sum_{j=-6..6} eta(2^-j w) = 1 on |w| in [2^-5; 2^5]", worst, 1e-12);
        double grid_worst = 0.0;
        for (const GridSpec& g : {g1, g2, cfg.grid_for(3)}) {
            const DyadicPartition gp = cfg.partition_for(g);
            for (std::size_t i = 1; i < g.size(); ++i) {
                const double r = norm(g.frequency(i));
                double sum = 0.0;
                for (int j = gp.jmin(); j <= gp.jmax(); ++j) sum += gp.eta_j(j, r);
                grid_worst = std::max(grid_worst, std::abs(sum - 1.0));
            }
        }
        rec.le("LP-02-grid", "default partition sums to 1 at every nonzero grid frequency (d = 1; 2; 3)", grid_worst, 1e-12);
    });

    rec.block("LP-03", [&] {
        const Field c = Field::sample(g1, [](const Vec3&) { return 4.25; });
        double worst = 0.0;
        for (int j = p1.jmin(); j <= p1.jmax(); ++j) worst = std::max(worst, lp_block(c, j, p1).max_abs());
        rec.le("LP-03", "M_j(constant) = 0 for every j", worst, 0.0);
    });

    rec.block("LP-04", [&] {
        const Field f = random_field(g2, rng, 20);
        const LPBlockSet blocks = lp_blocks(f, p2);
        double worst = 0.0;
        for (const auto& [j, mj] : blocks.blocks)
            for (int k = p2.jmin(); k <= p2.jmax(); ++k)
                if (std::abs(k - j) > 1) worst = std::max(worst, lp_block(mj, k, p2).max_abs() / f.max_abs());
        rec.le("LP-04", "M_k M_j = 0 for |k - j| > 1 (sup / ||f||_inf)", worst, 1e-14);

        Field sum(g2);
        for (const auto& [j, mj] : blocks.blocks) sum += mj;
        rec.le("LP-05", "sum_j M_j f = f on band-covered f (rel sup)", rel_sup(sum, f), 1e-11);

        double sandwich = 0.0;
        for (const auto& [j, mj] : blocks.blocks) {
            Field three(g2);
            for (int k = j - 1; k <= j + 1; ++k)
                if (p2.covers(k)) three += lp_block(mj, k, p2);
            sandwich = std::max(sandwich, max_diff(mj, three) / f.max_abs());
        }
        rec.le("LP-06", "M_j f = (M_{j-1} + M_j + M_{j+1}) M_j f (sup / ||f||_inf)", sandwich, 1e-12);

        double commute = 0.0;
        for (int j = p2.jmin(); j <= p2.jmax(); ++j) {
            const Field a = lp_block(frac_laplacian(f, 1.4), j, p2);
            const Field b = frac_laplacian(blocks.blocks.at(j), 1.4);
            commute = std::max(commute, max_diff(a, b) / frac_laplacian(f, 1.4).max_abs());
        }
        rec.le("LP-07", "M_j Delta^{s/2} = Delta^{s/2} M_j (sup / scale)", commute, 1e-12);
    });

    rec.block("LP-08", [&] {
        // Blocks have spectrum in 2^{j-1} <= |w| <= 2^{j+1}.
        const Field f = random_field(g2, rng, 24);
        const SpectrumField F = forward_transform(f);
        double worst = 0.0;
        for (int j = p2.jmin(); j <= p2.jmax(); ++j) {
            const SpectrumField B = forward_transform(lp_block(f, j, p2));
            for (std::size_t i = 0; i < B.coeffs.size(); ++i) {
                const double r = norm(g2.frequency(i));
                if (r < std::ldexp(1.0, j - 1) || r > std::ldexp(1.0, j + 1))
                    worst = std::max(worst, std::abs(B.coeffs[i]) / F.max_abs());
            }
        }
        rec.le("LP-08", "block spectra vanish outside their dyadic annulus (relative)", worst, 1e-14);
    });

    rec.block("LP-09", [&] {
        const int j0 = 2;
        const int k = wavenumber_in(g1, std::ldexp(1.0, j0), 1.5 * std::ldexp(1.0, j0));
        const Field g = resonant_cosine(g1, k);
        rec.le("LP-09", "single-block field: square function with s = 0 equals |f| (abs sup)",
               max_diff(lp_square_function(g, 0.0, p1), Field::sample(g1, [&](const Vec3& x) {
                            return std::abs(std::cos(2.0 * kPi * k * x[0] / g1.L));
                        })),
               1e-12);
        const double gamma = 0.5;
        const double ratio = lp_lipschitz_norm(g, gamma, p1) / (std::pow(2.0, j0 * gamma) * g.max_abs());
        rec.in("LP-10", "single-block Lipschitz: value / (2^{j0 gamma} ||g||_inf)", ratio, 1.0, 3.0);
    });

    rec.block("LP-11", [&] {
        const int k = wavenumber_in(g1, 2.5, 1e9);
        Field f = resonant_cosine(g1, k);
        f += 0.5 * resonant_cosine(g1, k + 17);
        bool monotone = true;
        Field prev = lp_square_function(f, 0.0, p1);
        for (double s : {0.5, 1.0, 2.0}) {
            const Field cur = lp_square_function(f, s, p1);
            for (std::size_t i = 0; i < cur.size(); ++i) monotone = monotone && cur.values[i].real() >= prev.values[i].real();
            prev = cur;
        }
        rec.truth("LP-11", "square function nondecreasing in s for spectrum in |w| >= 2", monotone);
    });

    rec.block("LP-12", [&] {
        const Field zero(g1);
        rec.le("LP-12-sq", "zero field: square function is zero", lp_square_function(zero, 1.0, p1).max_abs(), 0.0);
        rec.le("LP-12-sob", "zero field: Sobolev norm is zero", lp_sobolev_norm(zero, 1.0, 2.0, p1), 0.0);
        rec.le("LP-12-lip", "zero field: Lipschitz norm is zero", lp_lipschitz_norm(zero, 0.5, p1), 0.0);
        rec.le("LP-12-bmo", "zero field: BMO norm is zero", lp_bmo_norm(zero, p1), 0.0);
    });

    rec.block("LP-13", [&] {
        const Field phi = s_infty_corpus(g1)[1];
        const double s = 1.0;
        double lo = 1e300, hi = 0.0;
        for (int k = -2; k <= 2; ++k) {
            const Field f = dilate_exact(phi, std::ldexp(1.0, k));
            const double r = lp_sobolev_norm(f, s, 2.0, DyadicPartition::for_grid(f.grid)) /
                             quadrature_lp_norm(frac_laplacian(f, s), 2.0);
            lo = std::min(lo, r);
            hi = std::max(hi, r);
        }
        rec.in("LP-13-lo", "p = 2 LP norm / ||Delta^{s/2} f||_2 over 5 dilations: smallest ratio", lo, 0.25, 4.0);
        rec.in("LP-13-hi", "p = 2 LP norm / ||Delta^{s/2} f||_2 over 5 dilations: largest ratio", hi, 0.25, 4.0);

        const Field f2 = dilate_exact(phi, 2.0);
        for (double p : {1.5, 2.0, 3.0}) {
            const double a = lp_sobolev_norm(phi, s, p, DyadicPartition::for_grid(phi.grid));
            const double b = lp_sobolev_norm(f2, s, p, DyadicPartition::for_grid(f2.grid));
            rec.le("LP-14-p" + format_double(p), "dyadic scaling norm(f(2.)) = 2^{s - d/p} norm(f) (rel)",
                   std::abs(b / (std::pow(2.0, s - 1.0 / p) * a) - 1.0), 1e-3);
        }
    });

    rec.block("LP-15", [&] {
        const Field phi = s_infty_corpus(g1)[0];
        double lo = 1e300, hi = 0.0;
        for (int k = -2; k <= 2; ++k) {
            const Field f = dilate_exact(phi, std::ldexp(1.0, k));
            const double r = lp_lipschitz_norm(f, 0.5, DyadicPartition::for_grid(f.grid)) / lipschitz_norm(f, 0.5, cfg.diff_plan);
            lo = std::min(lo, r);
            hi = std::max(hi, r);
        }
        rec.in("LP-15-lo", "LP / direct Lipschitz (gamma = 0.5; d = 1) over 5 dilations: smallest", lo, 0.1, 10.0);
        rec.in("LP-15-hi", "LP / direct Lipschitz (gamma = 0.5; d = 1) over 5 dilations: largest", hi, 0.1, 10.0);
    });

    rec.block("LP-16", [&] {
        const Field f = make_test_function(TestFunctionSpec::windowed_log_abs(0.5), g1);
        const double ratio = lp_bmo_norm(f, p1) / bmo_norm(f, cfg.ball_plan);
        rec.in("LP-16", "LP BMO / direct BMO on windowed log|x| (d = 1)", ratio, 0.1, 10.0);
    });

    rec.block("LP-17", [&] {
        const Field f = s_infty_corpus(g1)[3];
        Field shifted = f;
        shifted.add_constant(-1.5);
        const double scale = f.max_abs() + 1.5;
        double worst = std::abs(lp_sobolev_norm(shifted, 1.0, 2.0, p1) - lp_sobolev_norm(f, 1.0, 2.0, p1)) /
                       lp_sobolev_norm(f, 1.0, 2.0, p1);
        worst = std::max(worst, std::abs(lp_lipschitz_norm(shifted, 0.5, p1) - lp_lipschitz_norm(f, 0.5, p1)) / scale);
        worst = std::max(worst, std::abs(lp_bmo_norm(shifted, p1) - lp_bmo_norm(f, p1)) / scale);
        rec.le("LP-17", "LP norms invariant under adding a constant (relative)", worst, 1e-12);
    });

    rec.block("LP-18", [&] {
        const Field f = random_field(g1, rng, 12);
        rec.throws<PreconditionError>("LP-18-tail", "narrow partition fails the coverage check",
                                      [&] { (void)lp_sobolev_norm(f, 1.0, 2.0, DyadicPartition(0, 1)); });
        rec.throws<DomainError>("LP-18-range", "lp_block rejects j outside the partition",
                                [&] { (void)lp_block(f, p1.jmax() + 1, p1); });
        rec.throws<DomainError>("LP-18-order", "partition rejects jmin >= jmax", [&] { DyadicPartition(2, 2); });
        rec.throws<DomainError>("LP-18-profile", "partition rejects a non-monotone profile",
                                [&] { DyadicPartition(-1, 1, [](double t) { return t <= 0 ? 0.0 : (t >= 1 ? 1.0 : std::sin(9 * t) * std::sin(9 * t)); }); });
        rec.throws<DomainError>("LP-18-ends", "partition rejects theta(1) != 1",
                                [&] { DyadicPartition(-1, 1, [](double t) { return 0.5 * std::clamp(t, 0.0, 1.0); }); });
    });

    return rec.take();
}

}  // namespace homsob::suites
