#pragma once

#include <string>
#include <vector>

#include "homsob/direct_norms.hpp"
#include "homsob/realization.hpp"

namespace homsob {

struct EmbeddingMember {
    std::string label;
    /// Dilation factor lambda of each family member f(lambda x) (grid-exact: L -> L / lambda).
    std::vector<double> dilations;
    std::vector<double> left;   // L^{p*}, S_m(BMO) or Lambda^{s-d/p} estimator
    std::vector<double> right;  // ||Delta^{s/2} f||_{L^p}
    std::vector<double> ratio;
    double spread = 0.0;        // (max ratio - min ratio) / min ratio
    bool degenerate = false;    // 0/0, excluded
};

struct EmbeddingReport {
    RegimeParams regime;
    std::string left_norm;
    std::vector<EmbeddingMember> members;
    std::vector<std::string> notices;
    double max_ratio = 0.0;
    double max_spread = 0.0;

    void write_csv(std::ostream& os) const;
};

/// Ratio of the regime's embedding norm to ||Delta^{s/2} f||_{L^p} across exact dyadic
/// dilations lambda = 2^k, k = -2..2, of every corpus member. Throws StructuralError when a
/// member's dimension differs from rp.d.
EmbeddingReport embedding_ratio_study(const RegimeParams& rp, const std::vector<Field>& corpus,
                                      const std::vector<std::string>& labels = {});

/// Regime-appropriate left norm and ||Delta^{s/2} f||_{L^p} of one field.
struct EmbeddingNorms {
    double left = 0.0;
    double right = 0.0;
};
EmbeddingNorms embedding_norms(const Field& f, const RegimeParams& rp);

/// Grid-exact dilation f(lambda x): same samples on a grid of period L / lambda.
Field dilate_exact(const Field& f, double lambda);

}  // namespace homsob
