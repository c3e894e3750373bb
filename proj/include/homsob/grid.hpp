#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace homsob {

using Complex = std::complex<double>;
/// Point or frequency in R^d; components beyond d are zero.
using Vec3 = std::array<double, 3>;
/// Integer lattice offset or wavenumber; components beyond d are zero.
using Index3 = std::array<int, 3>;

/// Periodic uniform grid over [-L/2, L/2)^d with N samples per axis.
struct GridSpec {
    int d = 1;
    double L = 40.0;
    int N = 512;

    /// Throws StructuralError unless 1 <= d <= 3, L > 0 and N is a power of two >= 8.
    void validate() const;

    double spacing() const { return L / N; }
    std::size_t size() const;
    double cell_volume() const;

    /// Default desk-scale grid for the given dimension.
    static GridSpec desk(int d);

    /// Multi-index of a flat row-major position (last axis fastest).
    Index3 unflatten(std::size_t flat) const;
    std::size_t flatten(const Index3& idx) const;
    Vec3 point(std::size_t flat) const;
    /// Flat position of the sample at x = 0.
    std::size_t origin() const;

    /// Signed wavenumber in [-N/2, N/2) of storage position n along one axis.
    int wavenumber(int n) const { return n < N / 2 ? n : n - N; }
    Index3 wavenumbers(std::size_t flat) const;
    /// Angular frequency 2*pi*k/L of a storage position.
    Vec3 frequency(std::size_t flat) const;

    bool operator==(const GridSpec&) const = default;
};

double norm(const Vec3& v);

enum class FieldKind : std::uint8_t { Real = 0, Complex = 1 };

/// Function sampled on a GridSpec, row-major.
struct Field {
    GridSpec grid;
    std::vector<Complex> values;
    FieldKind kind = FieldKind::Real;

    Field() = default;
    Field(GridSpec g, FieldKind k = FieldKind::Real);
    Field(GridSpec g, std::vector<Complex> v, FieldKind k);

    /// Real field from a callable of the sample point.
    template <class F>
    static Field sample(const GridSpec& g, F&& fn) {
        Field out(g, FieldKind::Real);
        for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] = Complex(fn(g.point(i)), 0.0);
        return out;
    }

    std::size_t size() const { return values.size(); }
    std::vector<double> real_part() const;
    double max_abs() const;

    /// Throws StructuralError when the length does not match the grid or a Real field has
    /// imaginary parts above 1e-10 of its magnitude.
    void validate() const;

    Field& operator+=(const Field& o);
    Field& operator-=(const Field& o);
    Field& operator*=(double c);
    Field& add_constant(double c);
};

Field operator+(Field a, const Field& b);
Field operator-(Field a, const Field& b);
Field operator*(double c, Field a);

/// Discrete Fourier coefficients in FFT storage order (wavenumber 0 first, negative
/// wavenumbers in the upper half of each axis). coeffs[k] ~ int f(x) exp(-i x.omega_k) dx.
struct SpectrumField {
    GridSpec grid;
    std::vector<Complex> coeffs;
    FieldKind source_kind = FieldKind::Real;

    /// Coefficient at signed wavenumber k in [-N/2, N/2)^d.
    Complex& at(const Index3& k);
    const Complex& at(const Index3& k) const;
    std::size_t position(const Index3& k) const;
    double max_abs() const;
};

void require_same_grid(const GridSpec& a, const GridSpec& b, const char* what);

}  // namespace homsob
