#pragma once

#include <functional>
#include <map>

#include "homsob/grid.hpp"

namespace homsob {

/// C^infinity transition e^{-1/t} / (e^{-1/t} + e^{-1/(1-t)}), 0 on t <= 0 and 1 on t >= 1.
double smooth_transition(double t);

/// Radial cutoff: 1 for r <= inner, 0 for r >= outer, smooth and monotone in between.
double radial_cutoff(double r, double inner, double outer, const std::function<double(double)>& profile);

/// Littlewood-Paley family eta_j = eta(2^{-j} .), eta(w) = psi(w) - psi(2w), with psi = 1 on
/// |w| <= 3/2 and psi = 0 on |w| >= 2.
class DyadicPartition {
public:
    /// Throws DomainError unless jmin < jmax, and when the profile is not a monotone map of
    /// [0,1] onto [0,1] with profile(0) = 0 and profile(1) = 1.
    DyadicPartition(int jmin, int jmax, std::function<double(double)> profile = smooth_transition);

    /// Default covering range for a grid: jmin = ceil(log2(2 pi/L)) - 1 and the smallest jmax
    /// with 1.5 * 2^jmax >= largest grid |omega|.
    static DyadicPartition for_grid(const GridSpec& g);

    int jmin() const { return jmin_; }
    int jmax() const { return jmax_; }
    bool covers(int j) const { return j >= jmin_ && j <= jmax_; }

    double psi(double r) const;
    /// Mother bump at radius r = |omega|.
    double eta(double r) const;
    /// eta(2^{-j} r); defined for every integer j.
    double eta_j(int j, double r) const;
    /// sum_{j=jmin}^{jmax} eta_j(r).
    double coverage(double r) const;

private:
    int jmin_;
    int jmax_;
    std::function<double(double)> profile_;
};

/// M_j f = F^{-1}(eta_j F f). Throws DomainError if j is outside the partition.
Field lp_block(const Field& f, int j, const DyadicPartition& part);

/// All blocks M_j f for j in [jmin, jmax], computed from one forward transform.
struct LPBlockSet {
    GridSpec grid;
    int jmin = 0;
    int jmax = -1;
    std::map<int, Field> blocks;
};
LPBlockSet lp_blocks(const Field& f, const DyadicPartition& part);

/// Relative energy of the non-DC spectrum not reproduced by the partition:
/// sum |F|^2 (1 - coverage)^2 / sum |F|^2 over omega != 0. Zero for the zero field.
double lp_tail_fraction(const SpectrumField& F, const DyadicPartition& part);
/// Throws PreconditionError (with the measured value) when the tail fraction exceeds 1e-10.
void require_lp_coverage(const SpectrumField& F, const DyadicPartition& part);

/// Pointwise (sum_j (2^{js} |M_j f|)^2)^{1/2}.
Field lp_square_function(const Field& f, double s, const DyadicPartition& part);
/// || lp_square_function(f, s) ||_{L^p}.
double lp_sobolev_norm(const Field& f, double s, double p, const DyadicPartition& part);
/// max_j 2^{j gamma} ||M_j f||_inf.
double lp_lipschitz_norm(const Field& f, double gamma, const DyadicPartition& part);
/// sup_x (sum_j |M_j f|^2)^{1/2}.
double lp_bmo_norm(const Field& f, const DyadicPartition& part);

}  // namespace homsob
