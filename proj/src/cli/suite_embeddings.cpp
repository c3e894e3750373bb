#include <cmath>
#include <numbers>

#include "homsob/embedding.hpp"
#include "homsob/oracles.hpp"
#include "suite_common.hpp"

namespace homsob::suites {

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<std::pair<int, double>> corpus_members() { return {{5, 1.0}, {6, 1.0}, {6, 0.75}, {8, 1.0}, {5, 0.75}}; }

std::vector<std::string> corpus_labels() { return {"HG5-s1", "HG6-s1", "HG6-s0.75", "HG8-s1", "HG5-s0.75"}; }

}  // namespace

SuiteReport embeddings_suite(const RunConfig& cfg) {
    Recorder rec("embeddings");

    struct Case {
        std::string label;
        int d;
        double s, p, limit;
    };
    const std::vector<Case> cases = {
        {"d2-sub", 2, 0.5, 2.0, 0.05},    {"d1-sub", 1, 0.3, 2.0, 0.05},     {"d1-sub-p1.5", 1, 0.4, 1.5, 0.05},
        {"d1-crit0", 1, 0.5, 2.0, 0.10},  {"d1-crit1", 1, 1.5, 2.0, 0.10},   {"d2-crit0", 2, 1.0, 2.0, 0.10},
        {"d1-super", 1, 2.0, 2.0, 0.10},  {"d2-super", 2, 2.5, 2.0, 0.10},
    };
    for (const Case& c : cases) {
        const std::string id = "EMB-" + c.label;
        rec.block(id, [&] {
            const RegimeParams rp = classify_regime(c.s, c.p, c.d);
            const EmbeddingReport rep = embedding_ratio_study(rp, s_infty_corpus(cfg.grid_for(c.d)), corpus_labels());
            rec.le(id, rep.left_norm + " / ||Delta^{s/2} f||_p: dilation spread over lambda = 2^-2..2^2 (" +
                           to_string(rp.regime) + ")",
                   rep.max_spread, c.limit);
            bool finite = true;
            for (const auto& m : rep.members)
                for (double r : m.ratio) finite = finite && std::isfinite(r) && r > 0.0;
            rec.truth(id + "-finite", "every ratio is finite and positive", finite);
            rec.info(id + "-max", "max ratio over the corpus", rep.max_ratio);

            // Second route: dilations resampled on the fixed grid, projection radius scaled with lambda.
            const GridSpec g = cfg.grid_for(c.d);
            double spread = 0.0;
            for (const auto& [order, sigma] : corpus_members()) {
                double lo = kInfinity, hi = 0.0;
                for (double lambda : {0.5, 1.0, 2.0}) {
                    TestFunctionSpec spec = TestFunctionSpec::hermite_gaussian(order, sigma);
                    spec.dilation = lambda;
                    const Field f = s_infty_project(make_test_function(spec, g), lambda * 8.0 * kPi / g.L);
                    const EmbeddingNorms e = embedding_norms(f, rp);
                    lo = std::min(lo, e.left / e.right);
                    hi = std::max(hi, e.left / e.right);
                }
                spread = std::max(spread, (hi - lo) / lo);
            }
            rec.le(id + "-grid", "same ratio with dilations resampled on the fixed grid (lambda = 1/2; 1; 2): spread", spread, c.limit);
        });
    }

    rec.block("EMB-family", [&] {
        const RegimeParams rp = classify_regime(0.3, 2.0, 1);
        const EmbeddingReport rep = embedding_ratio_study(rp, s_infty_corpus(cfg.grid_for(1)), corpus_labels());
        bool spans = rep.members.size() >= 5;
        for (const auto& m : rep.members) {
            double lo = kInfinity, hi = 0.0;
            for (double l : m.dilations) {
                lo = std::min(lo, l);
                hi = std::max(hi, l);
            }
            spans = spans && hi / lo >= 4.0;
        }
        rec.truth("EMB-family", "family has >= 5 members spanning >= 3 dyadic scales", spans);
    });

    rec.block("EMB-zero", [&] {
        const GridSpec g = cfg.grid_for(1);
        std::vector<Field> corpus = s_infty_corpus(g);
        corpus.push_back(Field(g));
        std::vector<std::string> labels = corpus_labels();
        labels.push_back("zero");
        const EmbeddingReport rep = embedding_ratio_study(classify_regime(0.3, 2.0, 1), corpus, labels);
        rec.truth("EMB-zero", "zero field is flagged degenerate with a notice and excluded",
                  rep.members.back().degenerate && rep.notices.size() == 1 && std::isfinite(rep.max_spread));
        rec.throws<StructuralError>("EMB-mismatch", "regime/corpus dimension mismatch is rejected",
                                    [&] { (void)embedding_ratio_study(classify_regime(0.5, 2.0, 2), s_infty_corpus(g)); });
    });

    return rec.take();
}

}  // namespace homsob::suites
