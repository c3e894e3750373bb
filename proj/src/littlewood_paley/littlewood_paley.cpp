#include "homsob/littlewood_paley.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "homsob/errors.hpp"
#include "homsob/fourier.hpp"
#include "homsob/multiplier.hpp"
#include "homsob/quadrature.hpp"

namespace homsob {

namespace {

constexpr double kTailTolerance = 1e-10;

MultiplierSpec block_symbol(const DyadicPartition& part, int j) {
    return {[&part, j](const Vec3& w) { return Complex(part.eta_j(j, norm(w)), 0.0); }, ZeroModeRule::set_zero(), true};
}

double largest_frequency(const GridSpec& g) { return std::sqrt(static_cast<double>(g.d)) * std::numbers::pi * g.N / g.L; }

}  // namespace

double smooth_transition(double t) {
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return 1.0;
    const double a = std::exp(-1.0 / t);
    const double b = std::exp(-1.0 / (1.0 - t));
    return a / (a + b);
}

double radial_cutoff(double r, double inner, double outer, const std::function<double(double)>& profile) {
    if (r <= inner) return 1.0;
    if (r >= outer) return 0.0;
    return profile((outer - r) / (outer - inner));
}

DyadicPartition::DyadicPartition(int jmin, int jmax, std::function<double(double)> profile)
    : jmin_(jmin), jmax_(jmax), profile_(std::move(profile)) {
    if (jmin >= jmax) throw DomainError("partition needs jmin < jmax");
    if (!profile_) throw DomainError("partition profile is empty");
    if (profile_(0.0) != 0.0 || profile_(1.0) != 1.0) throw DomainError("profile must satisfy theta(0) = 0 and theta(1) = 1");
    double prev = 0.0;
    constexpr int kSamples = 1024;
    for (int i = 1; i <= kSamples; ++i) {
        const double v = profile_(static_cast<double>(i) / kSamples);
        if (v < prev || v > 1.0) throw DomainError("profile is not monotone into [0,1]");
        prev = v;
    }
}

DyadicPartition DyadicPartition::for_grid(const GridSpec& g) {
    g.validate();
    const int jmin = static_cast<int>(std::ceil(std::log2(2.0 * std::numbers::pi / g.L))) - 1;
    const double top = largest_frequency(g);
    int jmax = jmin + 1;
    while (1.5 * std::ldexp(1.0, jmax) < top) ++jmax;
    return DyadicPartition(jmin, jmax);
}

double DyadicPartition::psi(double r) const { return radial_cutoff(std::abs(r), 1.5, 2.0, profile_); }

double DyadicPartition::eta(double r) const { return psi(r) - psi(2.0 * r); }

double DyadicPartition::eta_j(int j, double r) const { return eta(std::ldexp(r, -j)); }

double DyadicPartition::coverage(double r) const {
    // The sum telescopes.
    return psi(std::ldexp(r, -jmax_)) - psi(std::ldexp(r, -jmin_ + 1));
}

Field lp_block(const Field& f, int j, const DyadicPartition& part) {
    if (!part.covers(j))
        throw DomainError("block j = " + std::to_string(j) + " outside partition range [" + std::to_string(part.jmin()) +
                          ", " + std::to_string(part.jmax()) + "]");
    return apply_multiplier(f, block_symbol(part, j));
}

LPBlockSet lp_blocks(const Field& f, const DyadicPartition& part) {
    const SpectrumField F = forward_transform(f);
    LPBlockSet set{f.grid, part.jmin(), part.jmax(), {}};
    for (int j = part.jmin(); j <= part.jmax(); ++j)
        set.blocks.emplace(j, inverse_transform(apply_multiplier(F, block_symbol(part, j))));
    return set;
}

double lp_tail_fraction(const SpectrumField& F, const DyadicPartition& part) {
    std::vector<double> missed(F.coeffs.size(), 0.0);
    std::vector<double> total(F.coeffs.size(), 0.0);
    for (std::size_t i = 1; i < F.coeffs.size(); ++i) {
        const double e = std::norm(F.coeffs[i]);
        const double gap = 1.0 - part.coverage(norm(F.grid.frequency(i)));
        total[i] = e;
        missed[i] = e * gap * gap;
    }
    const double t = pairwise_sum(total);
    return t == 0.0 ? 0.0 : pairwise_sum(missed) / t;
}

void require_lp_coverage(const SpectrumField& F, const DyadicPartition& part) {
    const double tail = lp_tail_fraction(F, part);
    if (tail > kTailTolerance) {
        std::ostringstream msg;
        msg << "spectral energy outside the covered dyadic range is " << tail << " (limit 1e-10) for j in ["
            << part.jmin() << ", " << part.jmax() << "]";
        throw PreconditionError(msg.str());
    }
}

Field lp_square_function(const Field& f, double s, const DyadicPartition& part) {
    require_lp_coverage(forward_transform(f), part);
    const LPBlockSet set = lp_blocks(f, part);
    Field out(f.grid, FieldKind::Real);
    for (const auto& [j, block] : set.blocks) {
        const double w = std::pow(2.0, j * s);
        for (std::size_t i = 0; i < out.size(); ++i) {
            const double v = w * std::abs(block.values[i]);
            out.values[i] += v * v;
        }
    }
    for (auto& z : out.values) z = std::sqrt(z.real());
    return out;
}

double lp_sobolev_norm(const Field& f, double s, double p, const DyadicPartition& part) {
    return quadrature_lp_norm(lp_square_function(f, s, part), p);
}

double lp_lipschitz_norm(const Field& f, double gamma, const DyadicPartition& part) {
    if (!(gamma > 0.0)) throw DomainError("Lipschitz order must be positive");
    require_lp_coverage(forward_transform(f), part);
    const LPBlockSet set = lp_blocks(f, part);
    double best = 0.0;
    for (const auto& [j, block] : set.blocks) best = std::max(best, std::pow(2.0, j * gamma) * block.max_abs());
    return best;
}

double lp_bmo_norm(const Field& f, const DyadicPartition& part) { return lp_square_function(f, 0.0, part).max_abs(); }

}  // namespace homsob
