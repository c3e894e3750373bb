#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "helpers.hpp"
#include "homsob/errors.hpp"
#include "homsob/fourier.hpp"
#include "homsob/littlewood_paley.hpp"
#include "homsob/multiplier.hpp"
#include "homsob/quadrature.hpp"

using namespace homsob;
using homsob::testing::gaussian;
using homsob::testing::max_diff;
using homsob::testing::random_bandlimited;
using homsob::testing::rel_l2;

namespace {
constexpr double kPi = std::numbers::pi;

// cos(w x) with w = 2 pi 8 / 40 ~ 1.2566, inside the plateau 1 <= r <= 3/2 of eta_0.
Field plateau_wave(const GridSpec& g) {
    const double w = 2.0 * kPi * 8 / g.L;
    return Field::sample(g, [w](const Vec3& x) { return std::cos(w * x[0]); });
}
}  // namespace

TEST(SmoothTransition, EndpointsSymmetryMonotone) {
    EXPECT_EQ(smooth_transition(-0.1), 0.0);
    EXPECT_EQ(smooth_transition(0.0), 0.0);
    EXPECT_EQ(smooth_transition(1.0), 1.0);
    EXPECT_EQ(smooth_transition(2.0), 1.0);
    double prev = 0.0;
    for (int i = 1; i < 100; ++i) {
        const double t = i / 100.0;
        const double v = smooth_transition(t);
        EXPECT_GE(v, prev);
        EXPECT_NEAR(v + smooth_transition(1.0 - t), 1.0, 1e-15);
        prev = v;
    }
}

TEST(RadialCutoff, PlateauAndSupport) {
    for (double r : {0.0, 0.5, 1.5}) EXPECT_EQ(radial_cutoff(r, 1.5, 2.0, smooth_transition), 1.0);
    for (double r : {2.0, 3.0}) EXPECT_EQ(radial_cutoff(r, 1.5, 2.0, smooth_transition), 0.0);
    EXPECT_NEAR(radial_cutoff(1.75, 1.5, 2.0, smooth_transition), 0.5, 1e-15);
}

TEST(DyadicPartition, BumpSupportAndPlateau) {
    const DyadicPartition part(-4, 6);
    EXPECT_EQ(part.eta(0.74), 0.0);
    EXPECT_EQ(part.eta(2.01), 0.0);
    for (double r : {1.0, 1.2, 1.5}) EXPECT_EQ(part.eta(r), 1.0);
    for (int j = -3; j <= 3; ++j) EXPECT_DOUBLE_EQ(part.eta_j(j, 1.2 * std::ldexp(1.0, j)), 1.0);
}

TEST(DyadicPartition, TelescopingCoverage) {
    const DyadicPartition part(-4, 6);
    // sum_{j=a}^{b} eta_j = psi(2^{-b} r) - psi(2^{1-a} r): exactly one on [2^a, 1.5 * 2^b].
    for (double r = std::ldexp(1.0, -4); r <= 1.5 * std::ldexp(1.0, 6); r *= 1.07)
        EXPECT_NEAR(part.coverage(r), 1.0, 1e-14) << r;
    for (double r = 0.01; r < 200.0; r *= 1.13) {
        const double c = part.coverage(r);
        EXPECT_GE(c, -1e-15);
        EXPECT_LE(c, 1.0 + 1e-15);
        EXPECT_NEAR(c, part.psi(std::ldexp(r, -6)) - part.psi(std::ldexp(r, 5)), 1e-14);
    }
}

TEST(DyadicPartition, Validation) {
    EXPECT_THROW(DyadicPartition(3, 3), DomainError);
    EXPECT_THROW(DyadicPartition(0, 3, [](double t) { return 1.0 - t; }), DomainError);
    EXPECT_THROW(DyadicPartition(0, 3, [](double t) { return std::sin(3.0 * kPi * t); }), DomainError);
    EXPECT_NO_THROW(DyadicPartition(0, 3, [](double t) { return t; }));
}

TEST(DyadicPartition, ForGridCoversEveryNonzeroFrequency) {
    for (int d : {1, 2, 3}) {
        const GridSpec g = GridSpec::desk(d);
        const DyadicPartition part = DyadicPartition::for_grid(g);
        double worst = 0.0;
        for (std::size_t i = 1; i < g.size(); ++i) worst = std::max(worst, std::abs(1.0 - part.coverage(norm(g.frequency(i)))));
        EXPECT_LT(worst, 1e-12) << d;
    }
}

TEST(LpBlocks, ReconstructMeanZeroField) {
    for (int d : {1, 2}) {
        const GridSpec g = GridSpec::desk(d);
        const Field f = random_bandlimited(g, 60 + d);
        const DyadicPartition part = DyadicPartition::for_grid(g);
        const LPBlockSet set = lp_blocks(f, part);
        Field sum(g);
        for (const auto& [j, b] : set.blocks) sum += b;
        EXPECT_LT(rel_l2(sum, f), 1e-12) << d;
        const int j0 = (part.jmin() + part.jmax()) / 2;
        EXPECT_LT(max_diff(set.blocks.at(j0), lp_block(f, j0, part)), 1e-13);
    }
}

TEST(LpBlocks, AnnihilateConstantsAndOrthogonalityOfDistantBlocks) {
    const GridSpec g = GridSpec::desk(1);
    const DyadicPartition part = DyadicPartition::for_grid(g);
    const Field c = Field::sample(g, [](const Vec3&) { return 3.0; });
    for (int j = part.jmin(); j <= part.jmax(); ++j) EXPECT_LT(lp_block(c, j, part).max_abs(), 1e-13);
    const Field f = gaussian(g);
    const Field b = lp_block(lp_block(f, 0, part), 2, part);
    EXPECT_LT(b.max_abs(), 1e-15);
    EXPECT_THROW(lp_block(f, part.jmax() + 1, part), DomainError);
}

TEST(LpBlocks, CommuteWithFracLaplacian) {
    const GridSpec g = GridSpec::desk(1);
    const DyadicPartition part = DyadicPartition::for_grid(g);
    const Field f = gaussian(g);
    EXPECT_LT(rel_l2(lp_block(frac_laplacian(f, 0.7), 1, part), frac_laplacian(lp_block(f, 1, part), 0.7)), 1e-12);
}

TEST(LpCoverage, TailFractionAndRequire) {
    const GridSpec g{1, 40.0, 512};
    const Field low = Field::sample(g, [&](const Vec3& x) { return std::cos(2.0 * kPi * x[0] / g.L); });
    const DyadicPartition narrow(0, 3);
    const SpectrumField F = forward_transform(low);
    EXPECT_NEAR(lp_tail_fraction(F, narrow), 1.0, 1e-14);
    EXPECT_THROW(require_lp_coverage(F, narrow), PreconditionError);
    EXPECT_NO_THROW(require_lp_coverage(F, DyadicPartition::for_grid(g)));
    EXPECT_EQ(lp_tail_fraction(forward_transform(Field(g)), narrow), 0.0);
}

TEST(LpNorms, SingleBlockClosedForms) {
    const GridSpec g{1, 40.0, 512};
    const DyadicPartition part = DyadicPartition::for_grid(g);
    const Field f = plateau_wave(g);
    const Field S = lp_square_function(f, 0.8, part);
    for (std::size_t i = 0; i < g.size(); i += 17) EXPECT_NEAR(S.values[i].real(), std::abs(f.values[i].real()), 1e-13);
    // ||cos||_{L^2} over one period of length 40 is sqrt(20).
    EXPECT_NEAR(lp_sobolev_norm(f, 0.8, 2.0, part), std::sqrt(20.0), 1e-12);
    EXPECT_NEAR(lp_lipschitz_norm(f, 0.4, part), 1.0, 1e-13);
    EXPECT_NEAR(lp_bmo_norm(f, part), 1.0, 1e-13);
}

TEST(LpNorms, DyadicShiftScalesByTwoPowerS) {
    // The same wave moved to the plateau of eta_1 gains a factor 2^s.
    const GridSpec g{1, 40.0, 512};
    const DyadicPartition part = DyadicPartition::for_grid(g);
    const double w = 2.0 * kPi * 16 / g.L;
    const Field f = Field::sample(g, [w](const Vec3& x) { return std::cos(w * x[0]); });
    EXPECT_NEAR(lp_sobolev_norm(f, 0.8, 2.0, part), std::pow(2.0, 0.8) * std::sqrt(20.0), 1e-11);
    EXPECT_NEAR(lp_lipschitz_norm(f, 0.4, part), std::pow(2.0, 0.4), 1e-13);
}

TEST(LpNorms, HomogeneityAndConstantInvariance) {
    const GridSpec g = GridSpec::desk(1);
    const DyadicPartition part = DyadicPartition::for_grid(g);
    const Field f = gaussian(g);
    Field shifted = f;
    shifted.add_constant(5.0);
    const double n = lp_sobolev_norm(f, 0.5, 3.0, part);
    EXPECT_NEAR(lp_sobolev_norm(-2.0 * f, 0.5, 3.0, part), 2.0 * n, 1e-12 * n);
    EXPECT_NEAR(lp_sobolev_norm(shifted, 0.5, 3.0, part), n, 1e-12 * n);
    EXPECT_NEAR(lp_bmo_norm(shifted, part), lp_bmo_norm(f, part), 1e-13);
    EXPECT_EQ(lp_sobolev_norm(Field(g), 0.5, 2.0, part), 0.0);
}

TEST(LpNorms, MonotoneInSmoothnessAboveUnitFrequency) {
    const GridSpec g = GridSpec::desk(1);
    const DyadicPartition part = DyadicPartition::for_grid(g);
    const LPBlockSet set = lp_blocks(gaussian(g, 0.5), part);
    Field f(g);
    for (const auto& [j, b] : set.blocks)
        if (j >= 1) f += b;
    double prev = 0.0;
    for (double s : {0.2, 0.6, 1.0, 1.4}) {
        const double v = lp_sobolev_norm(f, s, 2.0, part);
        EXPECT_GT(v, prev);
        prev = v;
    }
}

TEST(LpNorms, PEqualsTwoEquivalentToSpectralNorm) {
    const GridSpec g = GridSpec::desk(1);
    const DyadicPartition part = DyadicPartition::for_grid(g);
    for (double sigma : {0.5, 1.0, 2.0}) {
        const Field f = gaussian(g, sigma);
        const double r = lp_sobolev_norm(f, 0.7, 2.0, part) / quadrature_lp_norm(frac_laplacian(f, 0.7), 2.0);
        EXPECT_GT(r, 0.5);
        EXPECT_LT(r, 2.0);
    }
}
