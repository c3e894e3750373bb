#include "homsob/embedding.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include "homsob/errors.hpp"
#include "homsob/multiplier.hpp"
#include "homsob/quadrature.hpp"
#include "homsob/study_table.hpp"

namespace homsob {

namespace {

constexpr int kDilationPowers[] = {-2, -1, 0, 1, 2};

std::string left_norm_name(const RegimeParams& rp) {
    switch (rp.regime) {
        case Regime::Subcritical: return "L^" + format_double(rp.pstar);
        case Regime::Critical: return rp.m == 0 ? "BMO" : "S_" + std::to_string(rp.m) + "(BMO)";
        case Regime::Supercritical: return "Lambda^" + format_double(rp.s - rp.d / rp.p);
    }
    return "";
}

double left_norm(const Field& f, const RegimeParams& rp) {
    switch (rp.regime) {
        case Regime::Subcritical: return quadrature_lp_norm(f, rp.pstar);
        case Regime::Critical: return rp.m == 0 ? bmo_norm(f) : sobolev_bmo_norm(f, rp.m);
        case Regime::Supercritical: return lipschitz_norm(f, rp.s - rp.d / rp.p);
    }
    return 0.0;
}

}  // namespace

EmbeddingNorms embedding_norms(const Field& f, const RegimeParams& rp) {
    if (f.grid.d != rp.d) throw StructuralError("field dimension differs from the regime dimension");
    return {left_norm(f, rp), quadrature_lp_norm(frac_laplacian(f, rp.s), rp.p)};
}

Field dilate_exact(const Field& f, double lambda) {
    if (!(lambda > 0.0)) throw DomainError("dilation factor must be positive");
    Field out = f;
    out.grid.L = f.grid.L / lambda;
    return out;
}

EmbeddingReport embedding_ratio_study(const RegimeParams& rp, const std::vector<Field>& corpus,
                                      const std::vector<std::string>& labels) {
    EmbeddingReport rep;
    rep.regime = rp;
    rep.left_norm = left_norm_name(rp);
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const Field& f = corpus[i];
        if (f.grid.d != rp.d) throw StructuralError("corpus member dimension differs from the regime dimension");
        EmbeddingMember mem;
        mem.label = i < labels.size() ? labels[i] : "member" + std::to_string(i);
        for (int k : kDilationPowers) {
            const double lambda = std::ldexp(1.0, k);
            const Field g = dilate_exact(f, lambda);
            const auto [left, right] = embedding_norms(g, rp);
            mem.dilations.push_back(lambda);
            mem.left.push_back(left);
            mem.right.push_back(right);
            if (right == 0.0) {
                mem.degenerate = true;
                mem.ratio.push_back(std::nan(""));
            } else {
                mem.ratio.push_back(left / right);
            }
        }
        if (mem.degenerate) {
            rep.notices.push_back(mem.label + ": zero right-hand norm (0/0 sentinel), excluded");
        } else {
            const auto [lo, hi] = std::minmax_element(mem.ratio.begin(), mem.ratio.end());
            mem.spread = *lo > 0.0 ? (*hi - *lo) / *lo : (*hi > 0.0 ? std::numeric_limits<double>::infinity() : 0.0);
            rep.max_ratio = std::max(rep.max_ratio, *hi);
            rep.max_spread = std::max(rep.max_spread, mem.spread);
        }
        rep.members.push_back(std::move(mem));
    }
    return rep;
}

void EmbeddingReport::write_csv(std::ostream& os) const {
    os << "member,lambda,left,right,ratio,spread,degenerate\n";
    for (const auto& m : members)
        for (std::size_t i = 0; i < m.dilations.size(); ++i)
            os << m.label << ',' << format_double(m.dilations[i]) << ',' << format_double(m.left[i]) << ','
               << format_double(m.right[i]) << ',' << format_double(m.ratio[i]) << ',' << format_double(m.spread) << ','
               << (m.degenerate ? 1 : 0) << '\n';
}

}  // namespace homsob
