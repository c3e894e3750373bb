#pragma once

#include <map>
#include <vector>

#include "homsob/grid.hpp"

namespace homsob {

/// Multi-index alpha in N_0^d (components beyond d are zero).
struct MultiIndex {
    Index3 a{0, 0, 0};

    int order() const { return a[0] + a[1] + a[2]; }
    /// alpha! = prod alpha_i!
    double factorial() const;
    auto operator<=>(const MultiIndex&) const = default;
};

/// All multi-indices in dimension d with |alpha| == order, in graded-lexicographic order.
std::vector<MultiIndex> multi_indices_of_order(int d, int order);
/// All multi-indices with |alpha| <= order, by increasing order.
std::vector<MultiIndex> multi_indices_up_to(int d, int order);

/// sum_alpha c_alpha (x - x0)^alpha.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(int d, Vec3 center = {0.0, 0.0, 0.0}) : d_(d), center_(center) {}

    int dimension() const { return d_; }
    const Vec3& center() const { return center_; }
    int degree() const;
    bool empty() const { return coeffs_.empty(); }

    double coeff(const MultiIndex& alpha) const;
    void set(const MultiIndex& alpha, double c);
    void add(const MultiIndex& alpha, double c);
    const std::map<MultiIndex, double>& coeffs() const { return coeffs_; }

    /// Nested Horner evaluation, innermost variable last.
    double operator()(const Vec3& x) const;

    /// d^alpha of the polynomial as a new polynomial about the same center.
    Polynomial derivative(const MultiIndex& alpha) const;
    /// Terms of total degree <= max_order.
    Polynomial truncated(int max_order) const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(double c);

    /// Samples the polynomial on a grid.
    Field sample(const GridSpec& g) const;

private:
    double horner(int axis, const std::vector<std::pair<MultiIndex, double>>& terms, const Vec3& dx) const;

    int d_ = 1;
    Vec3 center_{0.0, 0.0, 0.0};
    std::map<MultiIndex, double> coeffs_;
};

}  // namespace homsob
