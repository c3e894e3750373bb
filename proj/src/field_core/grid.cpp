#include "homsob/grid.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "homsob/errors.hpp"

namespace homsob {

namespace {
bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }
}  // namespace

void GridSpec::validate() const {
    if (d < 1 || d > 3) throw StructuralError("grid dimension d must be 1, 2 or 3 (got " + std::to_string(d) + ")");
    if (!(L > 0.0) || !std::isfinite(L)) throw StructuralError("grid period L must be positive and finite");
    if (N < 8 || !is_power_of_two(N))
        throw StructuralError("grid size N must be a power of two >= 8 (got " + std::to_string(N) + ")");
}

std::size_t GridSpec::size() const {
    std::size_t n = 1;
    for (int i = 0; i < d; ++i) n *= static_cast<std::size_t>(N);
    return n;
}

double GridSpec::cell_volume() const { return std::pow(spacing(), d); }

GridSpec GridSpec::desk(int d) {
    switch (d) {
        case 1: return {1, 40.0, 512};
        case 2: return {2, 20.0, 128};
        case 3: return {3, 10.0, 32};
        default: throw StructuralError("no desk-scale grid for d = " + std::to_string(d));
    }
}

Index3 GridSpec::unflatten(std::size_t flat) const {
    Index3 idx{0, 0, 0};
    for (int axis = d - 1; axis >= 0; --axis) {
        idx[axis] = static_cast<int>(flat % static_cast<std::size_t>(N));
        flat /= static_cast<std::size_t>(N);
    }
    return idx;
}

std::size_t GridSpec::flatten(const Index3& idx) const {
    std::size_t flat = 0;
    for (int axis = 0; axis < d; ++axis) flat = flat * static_cast<std::size_t>(N) + static_cast<std::size_t>(idx[axis]);
    return flat;
}

Vec3 GridSpec::point(std::size_t flat) const {
    const Index3 idx = unflatten(flat);
    const double h = spacing();
    Vec3 x{0.0, 0.0, 0.0};
    for (int axis = 0; axis < d; ++axis) x[axis] = -0.5 * L + idx[axis] * h;
    return x;
}

std::size_t GridSpec::origin() const {
    Index3 idx{0, 0, 0};
    for (int axis = 0; axis < d; ++axis) idx[axis] = N / 2;
    return flatten(idx);
}

Index3 GridSpec::wavenumbers(std::size_t flat) const {
    Index3 idx = unflatten(flat);
    for (int axis = 0; axis < d; ++axis) idx[axis] = wavenumber(idx[axis]);
    return idx;
}

Vec3 GridSpec::frequency(std::size_t flat) const {
    const Index3 k = wavenumbers(flat);
    const double dw = 2.0 * std::numbers::pi / L;
    Vec3 w{0.0, 0.0, 0.0};
    for (int axis = 0; axis < d; ++axis) w[axis] = dw * k[axis];
    return w;
}

double norm(const Vec3& v) { return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]); }

Field::Field(GridSpec g, FieldKind k) : grid(g), values(g.size(), Complex(0.0, 0.0)), kind(k) { grid.validate(); }

Field::Field(GridSpec g, std::vector<Complex> v, FieldKind k) : grid(g), values(std::move(v)), kind(k) {
    validate();
}

std::vector<double> Field::real_part() const {
    std::vector<double> out(values.size());
    std::transform(values.begin(), values.end(), out.begin(), [](const Complex& z) { return z.real(); });
    return out;
}

double Field::max_abs() const {
    double m = 0.0;
    for (const auto& z : values) m = std::max(m, std::abs(z));
    return m;
}

void Field::validate() const {
    grid.validate();
    if (values.size() != grid.size())
        throw StructuralError("field has " + std::to_string(values.size()) + " values, grid needs " +
                              std::to_string(grid.size()));
    if (kind == FieldKind::Real) {
        double max_im = 0.0;
        for (const auto& z : values) max_im = std::max(max_im, std::abs(z.imag()));
        if (max_im > 1e-10 * max_abs()) throw StructuralError("real field carries imaginary parts");
    }
}

void require_same_grid(const GridSpec& a, const GridSpec& b, const char* what) {
    if (!(a == b)) throw StructuralError(std::string(what) + ": grids differ");
}

Field& Field::operator+=(const Field& o) {
    require_same_grid(grid, o.grid, "field addition");
    for (std::size_t i = 0; i < values.size(); ++i) values[i] += o.values[i];
    if (o.kind == FieldKind::Complex) kind = FieldKind::Complex;
    return *this;
}

Field& Field::operator-=(const Field& o) {
    require_same_grid(grid, o.grid, "field subtraction");
    for (std::size_t i = 0; i < values.size(); ++i) values[i] -= o.values[i];
    if (o.kind == FieldKind::Complex) kind = FieldKind::Complex;
    return *this;
}

Field& Field::operator*=(double c) {
    for (auto& z : values) z *= c;
    return *this;
}

Field& Field::add_constant(double c) {
    for (auto& z : values) z += c;
    return *this;
}

Field operator+(Field a, const Field& b) { return a += b; }
Field operator-(Field a, const Field& b) { return a -= b; }
Field operator*(double c, Field a) { return a *= c; }

std::size_t SpectrumField::position(const Index3& k) const {
    Index3 idx{0, 0, 0};
    for (int axis = 0; axis < grid.d; ++axis) {
        if (k[axis] < -grid.N / 2 || k[axis] >= grid.N / 2) throw StructuralError("wavenumber outside [-N/2, N/2)");
        idx[axis] = k[axis] < 0 ? k[axis] + grid.N : k[axis];
    }
    return grid.flatten(idx);
}

Complex& SpectrumField::at(const Index3& k) { return coeffs[position(k)]; }
const Complex& SpectrumField::at(const Index3& k) const { return coeffs[position(k)]; }

double SpectrumField::max_abs() const {
    double m = 0.0;
    for (const auto& z : coeffs) m = std::max(m, std::abs(z));
    return m;
}

}  // namespace homsob
