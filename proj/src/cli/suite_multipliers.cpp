#include <cmath>
#include <numbers>

#include "homsob/embedding.hpp"
#include "homsob/fourier.hpp"
#include "homsob/multiplier.hpp"
#include "homsob/oracles.hpp"
#include "suite_common.hpp"

namespace homsob::suites {

namespace {

constexpr double kPi = std::numbers::pi;

std::string fmt(double v) { return format_double(v); }

}  // namespace

SuiteReport multipliers_suite(const RunConfig& cfg) {
    Recorder rec("multipliers");
    Rng rng(cfg.seed);
    const GridSpec g1 = cfg.grid_for(1);
    const GridSpec g2 = cfg.grid_for(2);
    const GridSpec g3 = cfg.grid_for(3);

    rec.block("MUL-01", [&] {
        const Field f = random_field(g2, rng);
        rec.le("MUL-01", "identity symbol reproduces the field (rel sup)", rel_sup(apply_multiplier(f, identity_symbol()), f),
               1e-13);
    });

    rec.block("MUL-02", [&] {
        const Field f = random_field(g2, rng);
        const MultiplierSpec m1 = frac_laplacian_symbol(0.7);
        const MultiplierSpec m2 = riesz_transform_symbol(1);
        const Field seq = apply_multiplier(apply_multiplier(f, m1), m2);
        rec.le("MUL-02", "apply(m2; apply(m1; f)) = apply(m1*m2; f) (rel sup)", rel_sup(seq, apply_multiplier(f, compose(m1, m2))),
               1e-12);
    });

    rec.block("MUL-03", [&] {
        // Random symbol triples from the library: commutativity and associativity of composition.
        const Field f = random_field(g2, rng);
        double worst = 0.0;
        for (int trial = 0; trial < 6; ++trial) {
            auto pick = [&]() -> MultiplierSpec {
                const int which = static_cast<int>(std::floor(rng.uniform(0.0, 4.0)));
                switch (which) {
                    case 0: return frac_laplacian_symbol(rng.uniform(0.1, 2.0));
                    case 1: return riesz_potential_symbol(rng.uniform(0.1, 1.9));
                    case 2: return riesz_transform_symbol(1 + static_cast<int>(std::floor(rng.uniform(0.0, 2.0))));
                    default: return derivative_symbol(MultiIndex{{1, 0, 0}});
                }
            };
            const MultiplierSpec a = pick(), b = pick(), c = pick();
            const Field ab = apply_multiplier(f, compose(a, b));
            worst = std::max(worst, rel_sup(apply_multiplier(f, compose(b, a)), ab));
            worst = std::max(worst, rel_sup(apply_multiplier(f, compose(compose(a, b), c)),
                                            apply_multiplier(f, compose(a, compose(b, c)))));
        }
        rec.le("MUL-03", "composition commutative and associative over random symbol triples (rel sup)", worst, 1e-12);
    });

    rec.block("MUL-04", [&] {
        const double w0 = 2.0 * kPi * 5 / g1.L;
        const Field f = Field::sample(g1, [w0](const Vec3& x) { return std::sin(w0 * x[0]); });
        const Field exact = Field::sample(g1, [w0](const Vec3& x) { return w0 * std::cos(w0 * x[0]); });
        rec.le("MUL-04", "symbol i*omega on sin(w0 x) gives w0 cos(w0 x) (abs sup)",
               max_diff(apply_multiplier(f, derivative_symbol(MultiIndex{{1, 0, 0}})), exact), 1e-12);
    });

    rec.block("MUL-05", [&] {
        const Field f = make_test_function(TestFunctionSpec::gaussian(1.0), g1);
        const Field exact = Field::sample(g1, [](const Vec3& x) { return (1.0 - x[0] * x[0]) * std::exp(-0.5 * x[0] * x[0]); });
        rec.le("MUL-05", "Delta^{2/2} of exp(-x^2/2) equals (1-x^2)exp(-x^2/2) on |x|<=5 (rel sup)",
               max_diff_within(frac_laplacian(f, 2.0), exact, 5.0) / max_abs_within(exact, 5.0), 1e-10);
        rec.le("MUL-06", "s = 0 is the identity (rel sup)", rel_sup(frac_laplacian(f, 0.0), f), 1e-13);
    });

    rec.block("MUL-07", [&] {
        double worst = 0.0;
        for (int d : {1, 2}) {
            const Field phi = s_infty_corpus(cfg.grid_for(d))[1];
            for (int pair = 0; pair < 10; ++pair) {
                const double s1 = rng.uniform(0.05, 2.0), s2 = rng.uniform(0.05, 2.0);
                worst = std::max(worst, rel_l2(frac_laplacian(frac_laplacian(phi, s1), s2), frac_laplacian(phi, s1 + s2)));
            }
        }
        rec.le("MUL-07", "semigroup Delta^{s1/2}Delta^{s2/2} = Delta^{(s1+s2)/2}; 10 random pairs per d in {1;2} (rel L2)",
               worst, 1e-11);
    });

    for (int d : {1, 2}) {
        const std::string id = "MUL-08-d" + std::to_string(d);
        rec.block(id, [&] {
            const auto corpus = s_infty_corpus(cfg.grid_for(d));
            double worst = 0.0;
            for (double s : {0.3, 0.5, 0.9 * d})
                for (const Field& phi : corpus) worst = std::max(worst, rel_l2(riesz_potential(frac_laplacian(phi, s), s), phi));
            rec.le(id, "I_s(Delta^{s/2} phi) = phi on the S_inf corpus; s in {0.3; 0.5; 0.9d} (rel L2)", worst, 1e-10);
            rec.info(id + "-info", "I_s o Delta^{s/2} residual reported for d = " + std::to_string(d), worst);
        });
    }

    rec.block("MUL-09", [&] {
        const Field phi = s_infty_corpus(g1)[0];
        rec.le("MUL-09", "I_0.5(Delta^{1.5/2} phi) = Delta^{1/2} phi (rel L2)",
               rel_l2(riesz_potential(frac_laplacian(phi, 1.5), 0.5), frac_laplacian(phi, 1.0)), 1e-10);
    });

    rec.block("MUL-10", [&] {
        const double w0 = 2.0 * kPi * 7 / g1.L;
        const Field f = Field::sample(g1, [w0](const Vec3& x) { return std::cos(w0 * x[0]); });
        const Field exact = Field::sample(g1, [w0](const Vec3& x) { return std::sin(w0 * x[0]); });
        rec.le("MUL-10", "Hilbert transform: R_1 cos(w0 x) = sin(w0 x) (abs sup)", max_diff(riesz_transform(f, 1), exact), 1e-12);
    });

    rec.block("MUL-11", [&] {
        double minus = 0.0, plus = 0.0;
        for (const GridSpec& g : {g2, g3}) {
            const Field f = random_field(g, rng);
            Field sum(g);
            for (int j = 1; j <= g.d; ++j) sum += riesz_transform(riesz_transform(f, j), j);
            minus = std::max(minus, rel_sup(-1.0 * sum, f));
            plus = std::max(plus, rel_l2(sum, f));
        }
        rec.le("MUL-11", "sum_j R_j^2 f = -f in d = 2; 3 (rel sup)", minus, 1e-12);
        rec.info("MUL-11-sign", "opposite-sign reading sum_j R_j^2 = I: measured ||sum R_j^2 f - f|| / ||f||", plus);
    });

    for (double s : {1.2, 2.5}) {
        const std::string id = "MUL-12-s" + fmt(s);
        rec.block(id, [&] {
            double worst = 0.0;
            for (const Field& phi : s_infty_corpus(g2)) {
                Field lhs(g2), rhs(g2);
                const Field ds = frac_laplacian(phi, s);
                const Field dsm1 = frac_laplacian(phi, s - 1.0);
                for (int j = 1; j <= 2; ++j) {
                    MultiIndex e;
                    e.a[j - 1] = 1;
                    const Field grad = spectral_derivative(dsm1, e);
                    const Field rj = riesz_transform(ds, j);
                    for (std::size_t i = 0; i < lhs.size(); ++i) {
                        lhs.values[i] += std::norm(grad.values[i]);
                        rhs.values[i] += std::norm(rj.values[i]);
                    }
                }
                worst = std::max(worst, quadrature_lp_norm(lhs - rhs, 1.0) / quadrature_lp_norm(rhs, 1.0));
            }
            rec.le(id, "|Delta^{(s-1)/2} grad phi|^2 = sum_j |R_j Delta^{s/2} phi|^2 pointwise; d = 2 (rel L1)", worst, 1e-10);
        });
    }

    rec.block("MUL-13", [&] {
        const Field f = random_field(g1, rng);
        Field shifted = f;
        const double c = 2.75;
        shifted.add_constant(c);
        const Field a = frac_laplacian(f, 0.8);
        rec.le("MUL-13", "Delta^{s/2}(f + c) = Delta^{s/2} f (abs sup / (scale + |c|))",
               max_diff(frac_laplacian(shifted, 0.8), a) / (a.max_abs() + c), 1e-12);
    });

    rec.block("MUL-14", [&] {
        Field f = random_field(g2, rng);
        f.kind = FieldKind::Complex;
        double worst = 0.0;
        for (const Field& out : {riesz_transform(f, 1), frac_laplacian(f, 1.3), riesz_potential(f, 0.7)}) {
            double im = 0.0;
            for (const auto& z : out.values) im = std::max(im, std::abs(z.imag()));
            worst = std::max(worst, im / out.max_abs());
        }
        rec.le("MUL-14", "Hermitian symbols keep real input real (max imaginary / max magnitude)", worst, 1e-13);
        const MultiplierSpec skew{[](const Vec3& w) { return Complex(0.0, norm(w)); }, ZeroModeRule::set_zero(), false};
        rec.truth("MUL-14-kind", "non-Hermitian symbol yields a Complex field",
                  apply_multiplier(random_field(g1, rng), skew).kind == FieldKind::Complex);
    });

    rec.block("MUL-15", [&] {
        const Field f = s_infty_corpus(g1)[2];
        const double s = 1.3;
        const Field scaled = frac_laplacian(dilate_exact(f, 2.0), s);
        Field expected = frac_laplacian(f, s);
        expected *= std::pow(2.0, s);
        expected.grid = scaled.grid;
        rec.le("MUL-15", "dilation covariance Delta^{s/2}(f(2.)) = 2^s (Delta^{s/2} f)(2.) (rel sup)", rel_sup(scaled, expected), 1e-10);
    });

    rec.block("MUL-16", [&] {
        const Field gauss = make_test_function(TestFunctionSpec::gaussian(1.0), g1);
        rec.throws<PreconditionError>("MUL-16-dc", "riesz_potential rejects a field with DC mass",
                                      [&] { (void)riesz_potential(gauss, 0.5); });
        rec.throws<PreconditionError>("MUL-16-dc-rt", "riesz_transform rejects a field with DC mass",
                                      [&] { (void)riesz_transform(gauss, 1); });
        rec.throws<DomainError>("MUL-16-s", "riesz_potential rejects s >= d", [&] { (void)riesz_potential(gauss, 1.0); });
        rec.throws<DomainError>("MUL-16-neg", "frac_laplacian rejects s < 0", [&] { (void)frac_laplacian(gauss, -0.5); });
        rec.throws<DomainError>("MUL-16-axis", "riesz_transform rejects axis > d", [&] { (void)riesz_transform(gauss, 2); });
        MultiplierSpec guarded = identity_symbol();
        guarded.zero_mode = ZeroModeRule::reject_if_massive(1e-8);
        rec.throws<PreconditionError>("MUL-16-rule", "RejectIfMassive rule rejects DC mass",
                                      [&] { (void)apply_multiplier(gauss, guarded); });
    });

    return rec.take();
}

}  // namespace homsob::suites
