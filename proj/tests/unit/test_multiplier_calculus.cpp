#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "helpers.hpp"
#include "homsob/errors.hpp"
#include "homsob/fourier.hpp"
#include "homsob/multiplier.hpp"
#include "homsob/polynomial.hpp"

using namespace homsob;
using homsob::testing::gaussian;
using homsob::testing::max_diff;
using homsob::testing::random_bandlimited;
using homsob::testing::rel_l2;

namespace {
constexpr double kPi = std::numbers::pi;

Field plane_cos(const GridSpec& g, const Index3& k) {
    return Field::sample(g, [&](const Vec3& x) {
        double ph = 0.0;
        for (int a = 0; a < g.d; ++a) ph += 2.0 * kPi * k[a] * x[a] / g.L;
        return std::cos(ph);
    });
}

double wave_norm(const GridSpec& g, const Index3& k) {
    double r2 = 0.0;
    for (int a = 0; a < g.d; ++a) r2 += std::pow(2.0 * kPi * k[a] / g.L, 2);
    return std::sqrt(r2);
}
}  // namespace

TEST(FracLaplacian, PlaneWaveEigenvalue) {
    const GridSpec g{2, 20.0, 64};
    const Index3 k{3, -5, 0};
    const Field f = plane_cos(g, k);
    for (double s : {0.3, 1.0, 1.7, 2.5}) {
        const Field lhs = frac_laplacian(f, s);
        EXPECT_LT(max_diff(lhs, std::pow(wave_norm(g, k), s) * f), 1e-12 * std::pow(wave_norm(g, k), s)) << s;
    }
}

// -d^2/dx^2 exp(-x^2/2) = (1 - x^2) exp(-x^2/2).
TEST(FracLaplacian, OrderTwoIsMinusSecondDerivative) {
    const GridSpec g{1, 40.0, 512};
    const Field lhs = frac_laplacian(gaussian(g), 2.0);
    const Field exact = Field::sample(g, [](const Vec3& x) { return (1.0 - x[0] * x[0]) * std::exp(-0.5 * x[0] * x[0]); });
    EXPECT_LT(max_diff(lhs, exact), 1e-11);
}

TEST(FracLaplacian, SemigroupAndDomain) {
    const GridSpec g{1, 40.0, 256};
    const Field f = random_bandlimited(g, 21);
    EXPECT_LT(rel_l2(frac_laplacian(frac_laplacian(f, 0.4), 0.9), frac_laplacian(f, 1.3)), 1e-12);
    EXPECT_LT(rel_l2(frac_laplacian(f, 0.0), f), 1e-14);
    EXPECT_THROW(frac_laplacian(f, -0.5), DomainError);
}

TEST(RieszPotential, InvertsFracLaplacianOnMeanZero) {
    for (int d : {1, 2, 3}) {
        const GridSpec g = GridSpec::desk(d);
        const Field f = random_bandlimited(g, 30 + d);
        const double s = 0.5 * d;
        EXPECT_LT(rel_l2(riesz_potential(frac_laplacian(f, s), s), f), 1e-12) << d;
    }
}

TEST(RieszPotential, PlaneWaveAndPreconditions) {
    const GridSpec g{1, 40.0, 128};
    const Index3 k{4, 0, 0};
    const Field f = plane_cos(g, k);
    EXPECT_LT(max_diff(riesz_potential(f, 0.6), std::pow(wave_norm(g, k), -0.6) * f), 1e-12);
    EXPECT_THROW(riesz_potential(gaussian(g), 0.5), PreconditionError);
    EXPECT_THROW(riesz_potential(f, 1.0), DomainError);
    EXPECT_THROW(riesz_potential(f, 0.0), DomainError);
}

// R_1 cos(w x) = sin(w x) for w > 0 under the symbol -i omega / |omega|.
TEST(RieszTransform, CosineToSine) {
    const GridSpec g{1, 40.0, 128};
    const double w = 2.0 * kPi * 5 / g.L;
    const Field c = Field::sample(g, [w](const Vec3& x) { return std::cos(w * x[0]); });
    const Field s = Field::sample(g, [w](const Vec3& x) { return std::sin(w * x[0]); });
    EXPECT_LT(max_diff(riesz_transform(c, 1), s), 1e-13);
    EXPECT_THROW(riesz_transform(c, 2), DomainError);
}

TEST(RieszTransform, SquaresSumToMinusIdentity) {
    for (int d : {1, 2, 3}) {
        const GridSpec g = GridSpec::desk(d);
        const Field f = random_bandlimited(g, 40 + d);
        Field acc(g);
        for (int a = 1; a <= d; ++a) acc += riesz_transform(riesz_transform(f, a), a);
        EXPECT_LT(rel_l2(acc, -1.0 * f), 1e-12) << d;
    }
}

TEST(RieszTransform, ScalingInvariantOnDilation) {
    // R_j commutes with dilations: transform of f(2x) equals (R_j f)(2x) on a grid of half period.
    const GridSpec g{1, 40.0, 256}, half{1, 20.0, 256};
    const Field f = random_bandlimited(g, 8);
    Field fd = f;
    fd.grid = half;
    Field lhs = riesz_transform(fd, 1);
    Field rhs = riesz_transform(f, 1);
    rhs.grid = half;
    EXPECT_LT(rel_l2(lhs, rhs), 1e-13);
}

TEST(SpectralDerivative, GaussianDerivatives) {
    const GridSpec g{1, 40.0, 512};
    const Field f = gaussian(g);
    const Field d1 = Field::sample(g, [](const Vec3& x) { return -x[0] * std::exp(-0.5 * x[0] * x[0]); });
    EXPECT_LT(max_diff(spectral_derivative(f, MultiIndex{{1, 0, 0}}), d1), 1e-11);
    const SpectrumField F = forward_transform(f);
    EXPECT_NEAR(spectral_derivative_at_origin(F, MultiIndex{{0, 0, 0}}).real(), 1.0, 1e-12);
    EXPECT_NEAR(spectral_derivative_at_origin(F, MultiIndex{{2, 0, 0}}).real(), -1.0, 1e-11);
    EXPECT_NEAR(spectral_derivative_at_origin(F, MultiIndex{{4, 0, 0}}).real(), 3.0, 1e-9);
    EXPECT_THROW(spectral_derivative(f, MultiIndex{{0, 1, 0}}), StructuralError);
}

TEST(SpectralDerivative, MixedPartialsCommute) {
    const GridSpec g{2, 20.0, 64};
    const Field f = random_bandlimited(g, 9);
    const Field a = spectral_derivative(spectral_derivative(f, MultiIndex{{1, 0, 0}}), MultiIndex{{0, 2, 0}});
    const Field b = spectral_derivative(f, MultiIndex{{1, 2, 0}});
    EXPECT_LT(rel_l2(a, b), 1e-12);
}

TEST(Multiplier, ComposeAndZeroModeRules) {
    const GridSpec g{1, 40.0, 128};
    const Field f = random_bandlimited(g, 5);
    const MultiplierSpec m = compose(frac_laplacian_symbol(0.7), frac_laplacian_symbol(0.6));
    EXPECT_LT(rel_l2(apply_multiplier(f, m), frac_laplacian(f, 1.3)), 1e-12);

    Field shifted = f;
    shifted.add_constant(2.0);
    const Field kept = apply_multiplier(shifted, identity_symbol());
    EXPECT_LT(max_diff(kept, shifted), 1e-13);
    MultiplierSpec zero = identity_symbol();
    zero.zero_mode = ZeroModeRule::set_zero();
    EXPECT_LT(max_diff(apply_multiplier(shifted, zero), f), 1e-13);
    MultiplierSpec strict = identity_symbol();
    strict.zero_mode = ZeroModeRule::reject_if_massive(1e-8);
    EXPECT_THROW(apply_multiplier(shifted, strict), PreconditionError);
    EXPECT_NO_THROW(apply_multiplier(f, strict));
}

TEST(Multiplier, RelativeDc) {
    const GridSpec g{1, 40.0, 128};
    EXPECT_LT(relative_dc(forward_transform(random_bandlimited(g, 2))), 1e-14);
    EXPECT_NEAR(relative_dc(forward_transform(gaussian(g))), 1.0, 1e-12);
}

TEST(MultiIndex, CountsAndOrder) {
    EXPECT_EQ(multi_indices_of_order(1, 4).size(), 1u);
    EXPECT_EQ(multi_indices_of_order(2, 3).size(), 4u);
    EXPECT_EQ(multi_indices_of_order(3, 2).size(), 6u);
    EXPECT_EQ(multi_indices_up_to(3, 2).size(), 10u);
    EXPECT_DOUBLE_EQ((MultiIndex{{2, 3, 0}}.factorial()), 12.0);
    const auto idx = multi_indices_up_to(2, 3);
    for (std::size_t i = 1; i < idx.size(); ++i) EXPECT_LE(idx[i - 1].order(), idx[i].order());
    EXPECT_THROW(multi_indices_of_order(4, 1), StructuralError);
}

TEST(Polynomial, HornerMatchesMonomialSum) {
    Polynomial p(3, {0.5, -1.0, 2.0});
    p.set(MultiIndex{{0, 0, 0}}, 1.5);
    p.set(MultiIndex{{2, 1, 0}}, -0.75);
    p.set(MultiIndex{{0, 1, 3}}, 2.0);
    p.add(MultiIndex{{0, 1, 3}}, 0.25);
    const Vec3 x{1.3, 0.2, -0.7};
    const double dx = x[0] - 0.5, dy = x[1] + 1.0, dz = x[2] - 2.0;
    const double naive = 1.5 - 0.75 * dx * dx * dy + 2.25 * dy * dz * dz * dz;
    EXPECT_NEAR(p(x), naive, 1e-13);
    EXPECT_EQ(p.degree(), 4);
    EXPECT_EQ(p.truncated(3).degree(), 3);
}

TEST(Polynomial, DerivativeAndArithmetic) {
    Polynomial p(2);
    p.set(MultiIndex{{3, 1, 0}}, 2.0);
    p.set(MultiIndex{{1, 0, 0}}, 5.0);
    const Polynomial dp = p.derivative(MultiIndex{{1, 1, 0}});
    EXPECT_DOUBLE_EQ(dp.coeff(MultiIndex{{2, 0, 0}}), 6.0);
    EXPECT_EQ(dp.coeffs().size(), 1u);
    Polynomial q = p;
    q -= p;
    EXPECT_NEAR(q({1.0, 2.0, 0.0}), 0.0, 1e-15);
    q += p;
    q *= -2.0;
    EXPECT_NEAR(q({1.0, 2.0, 0.0}), -2.0 * p({1.0, 2.0, 0.0}), 1e-13);
    Polynomial other(1);
    other.set(MultiIndex{{1, 0, 0}}, 1.0);
    EXPECT_THROW(p += other, StructuralError);
    EXPECT_THROW(p.sample(GridSpec{1, 10.0, 16}), StructuralError);
}

TEST(Polynomial, SampleMatchesEvaluation) {
    const GridSpec g{2, 10.0, 16};
    Polynomial p(2);
    p.set(MultiIndex{{1, 1, 0}}, 1.0);
    const Field f = p.sample(g);
    for (std::size_t i = 0; i < g.size(); i += 7) EXPECT_DOUBLE_EQ(f.values[i].real(), p(g.point(i)));
}
