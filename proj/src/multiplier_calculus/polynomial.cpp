#include "homsob/polynomial.hpp"

#include <algorithm>
#include <cmath>

#include "homsob/errors.hpp"

namespace homsob {

double MultiIndex::factorial() const {
    double f = 1.0;
    for (int v : a)
        for (int k = 2; k <= v; ++k) f *= k;
    return f;
}

std::vector<MultiIndex> multi_indices_of_order(int d, int order) {
    if (d < 1 || d > 3) throw StructuralError("multi-index dimension must be 1..3");
    std::vector<MultiIndex> out;
    if (order < 0) return out;
    if (d == 1) {
        out.push_back({{order, 0, 0}});
    } else if (d == 2) {
        for (int i = order; i >= 0; --i) out.push_back({{i, order - i, 0}});
    } else {
        for (int i = order; i >= 0; --i)
            for (int j = order - i; j >= 0; --j) out.push_back({{i, j, order - i - j}});
    }
    return out;
}

std::vector<MultiIndex> multi_indices_up_to(int d, int order) {
    std::vector<MultiIndex> out;
    for (int k = 0; k <= order; ++k) {
        auto level = multi_indices_of_order(d, k);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

int Polynomial::degree() const {
    int deg = -1;
    for (const auto& [alpha, c] : coeffs_)
        if (c != 0.0) deg = std::max(deg, alpha.order());
    return deg;
}

double Polynomial::coeff(const MultiIndex& alpha) const {
    const auto it = coeffs_.find(alpha);
    return it == coeffs_.end() ? 0.0 : it->second;
}

void Polynomial::set(const MultiIndex& alpha, double c) {
    for (int axis = d_; axis < 3; ++axis)
        if (alpha.a[axis] != 0) throw StructuralError("multi-index exceeds polynomial dimension");
    coeffs_[alpha] = c;
}

void Polynomial::add(const MultiIndex& alpha, double c) { set(alpha, coeff(alpha) + c); }

double Polynomial::horner(int axis, const std::vector<std::pair<MultiIndex, double>>& terms, const Vec3& dx) const {
    if (terms.empty()) return 0.0;
    if (axis == d_) {
        double s = 0.0;
        for (const auto& t : terms) s += t.second;
        return s;
    }
    int top = 0;
    for (const auto& t : terms) top = std::max(top, t.first.a[axis]);
    double acc = 0.0;
    for (int e = top; e >= 0; --e) {
        std::vector<std::pair<MultiIndex, double>> slice;
        for (const auto& t : terms)
            if (t.first.a[axis] == e) slice.push_back(t);
        acc = acc * dx[axis] + horner(axis + 1, slice, dx);
    }
    return acc;
}

double Polynomial::operator()(const Vec3& x) const {
    const std::vector<std::pair<MultiIndex, double>> terms(coeffs_.begin(), coeffs_.end());
    const Vec3 dx{x[0] - center_[0], x[1] - center_[1], x[2] - center_[2]};
    return horner(0, terms, dx);
}

Polynomial Polynomial::derivative(const MultiIndex& alpha) const {
    Polynomial out(d_, center_);
    for (const auto& [beta, c] : coeffs_) {
        double factor = c;
        MultiIndex rest = beta;
        bool zero = false;
        for (int axis = 0; axis < 3; ++axis) {
            if (beta.a[axis] < alpha.a[axis]) {
                zero = true;
                break;
            }
            for (int k = 0; k < alpha.a[axis]; ++k) factor *= beta.a[axis] - k;
            rest.a[axis] -= alpha.a[axis];
        }
        if (!zero) out.add(rest, factor);
    }
    return out;
}

Polynomial Polynomial::truncated(int max_order) const {
    Polynomial out(d_, center_);
    for (const auto& [alpha, c] : coeffs_)
        if (alpha.order() <= max_order) out.set(alpha, c);
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.empty()) return *this;
    if (empty() && coeffs_.empty()) {
        d_ = o.d_;
        center_ = o.center_;
    }
    if (o.d_ != d_ || o.center_ != center_) throw StructuralError("polynomials differ in dimension or center");
    for (const auto& [alpha, c] : o.coeffs_) add(alpha, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    Polynomial neg = o;
    neg *= -1.0;
    return *this += neg;
}

Polynomial& Polynomial::operator*=(double c) {
    for (auto& [alpha, v] : coeffs_) v *= c;
    return *this;
}

Field Polynomial::sample(const GridSpec& g) const {
    if (g.d != d_) throw StructuralError("polynomial and grid dimensions differ");
    return Field::sample(g, [this](const Vec3& x) { return (*this)(x); });
}

}  // namespace homsob
