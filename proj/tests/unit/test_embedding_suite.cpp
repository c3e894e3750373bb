#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "helpers.hpp"
#include "homsob/embedding.hpp"
#include "homsob/errors.hpp"
#include "homsob/oracles.hpp"

using namespace homsob;
using homsob::testing::gaussian;

namespace {
constexpr double kPi = std::numbers::pi;

// Sharp constant of ||f||_{L^{2d/(d-2s)}} <= S ||Delta^{s/2} f||_{L^2}.
double sharp_sobolev_constant(int d, double s) {
    const double sq = std::pow(2.0, -2.0 * s) * std::pow(kPi, -s) * std::tgamma((d - 2.0 * s) / 2.0) /
                      std::tgamma((d + 2.0 * s) / 2.0) * std::pow(std::tgamma(d) / std::tgamma(d / 2.0), 2.0 * s / d);
    return std::sqrt(sq);
}
}  // namespace

TEST(DilateExact, KeepsSamplesAndShrinksPeriod) {
    const GridSpec g = GridSpec::desk(2);
    const Field f = gaussian(g);
    const Field h = dilate_exact(f, 4.0);
    EXPECT_EQ(h.values, f.values);
    EXPECT_DOUBLE_EQ(h.grid.L, g.L / 4.0);
    EXPECT_EQ(h.grid.N, g.N);
    EXPECT_THROW(dilate_exact(f, 0.0), DomainError);
}

TEST(EmbeddingNorms, ExactScalingUnderGridDilation) {
    struct Case {
        double s, p;
        int d;
    };
    for (const Case c : {Case{0.3, 2.0, 1}, Case{0.5, 2.0, 1}, Case{2.0, 2.0, 1}, Case{0.5, 2.0, 2}, Case{2.5, 2.0, 2}}) {
        const RegimeParams rp = classify_regime(c.s, c.p, c.d);
        const Field f = s_infty_corpus(GridSpec::desk(c.d))[1];
        const EmbeddingNorms base = embedding_norms(f, rp);
        const double lambda = 2.0;
        const EmbeddingNorms dil = embedding_norms(dilate_exact(f, lambda), rp);
        const double right_exp = c.s - c.d / c.p;
        EXPECT_NEAR(dil.right / base.right, std::pow(lambda, right_exp), 1e-12 * std::pow(lambda, right_exp));
        const double left_exp = rp.regime == Regime::Subcritical ? -c.d / rp.pstar : right_exp;
        EXPECT_NEAR(dil.left / base.left, std::pow(lambda, left_exp), 1e-12 * std::pow(lambda, left_exp));
    }
}

TEST(EmbeddingNorms, SubcriticalRatioBelowSharpSobolevConstant) {
    for (const auto& [d, s] : {std::pair{1, 0.3}, {2, 0.5}, {2, 0.8}}) {
        const RegimeParams rp = classify_regime(s, 2.0, d);
        const GridSpec g = GridSpec::desk(d);
        const double S = sharp_sobolev_constant(d, s);
        for (double sigma : {0.7, 1.0, 1.5}) {
            const EmbeddingNorms n = embedding_norms(gaussian(g, sigma), rp);
            EXPECT_LE(n.left / n.right, S * (1.0 + 1e-6)) << "d=" << d << " s=" << s;
            EXPECT_GT(n.left / n.right, 0.5 * S);
        }
    }
}

TEST(EmbeddingNorms, DimensionMismatch) {
    EXPECT_THROW(embedding_norms(gaussian(GridSpec::desk(1)), classify_regime(0.5, 2.0, 2)), StructuralError);
}

TEST(EmbeddingStudy, SpreadsAndReport) {
    const RegimeParams rp = classify_regime(0.3, 2.0, 1);
    const auto corpus = s_infty_corpus(GridSpec::desk(1));
    const EmbeddingReport rep = embedding_ratio_study(rp, corpus, {"a", "b"});
    ASSERT_EQ(rep.members.size(), corpus.size());
    EXPECT_EQ(rep.members[0].label, "a");
    EXPECT_EQ(rep.members[2].label, "member2");
    for (const auto& m : rep.members) {
        EXPECT_EQ(m.dilations.size(), 5u);
        EXPECT_FALSE(m.degenerate);
        EXPECT_LT(m.spread, 1e-10);
    }
    EXPECT_EQ(rep.left_norm, "L^5");
    EXPECT_GT(rep.max_ratio, 0.0);
    std::ostringstream os;
    rep.write_csv(os);
    EXPECT_NE(os.str().find("member2"), std::string::npos);
}

TEST(EmbeddingStudy, ZeroFieldIsDegenerate) {
    const GridSpec g = GridSpec::desk(1);
    const RegimeParams rp = classify_regime(0.5, 2.0, 1);
    const EmbeddingReport rep = embedding_ratio_study(rp, {Field(g), s_infty_corpus(g)[0]});
    EXPECT_TRUE(rep.members[0].degenerate);
    EXPECT_FALSE(rep.members[1].degenerate);
    EXPECT_EQ(rep.notices.size(), 1u);
    EXPECT_EQ(rep.left_norm, "BMO");
    EXPECT_THROW(embedding_ratio_study(classify_regime(0.5, 2.0, 2), {Field(g)}), StructuralError);
}
