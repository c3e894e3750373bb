#include "homsob/fourier.hpp"

#include <fftw3.h>

#include <cmath>
#include <cstring>
#include <memory>
#include <mutex>
#include <numbers>

#include "homsob/errors.hpp"

namespace homsob {

namespace {

// The FFTW planner is not re-entrant; execution of a finished plan is.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

struct FftwBuffer {
    explicit FftwBuffer(std::size_t n) : data(fftw_alloc_complex(n)), size(n) {
        if (data == nullptr) throw std::bad_alloc();
    }
    ~FftwBuffer() { fftw_free(data); }
    FftwBuffer(const FftwBuffer&) = delete;
    FftwBuffer& operator=(const FftwBuffer&) = delete;

    fftw_complex* data;
    std::size_t size;
};

// Unnormalized in-place DFT over all d axes.
void dft_in_place(const GridSpec& g, std::vector<Complex>& values, int sign) {
    FftwBuffer buf(values.size());
    int dims[3] = {g.N, g.N, g.N};
    fftw_plan plan;
    {
        std::lock_guard lock(planner_mutex());
        plan = fftw_plan_dft(g.d, dims, buf.data, buf.data, sign, FFTW_ESTIMATE);
    }
    static_assert(sizeof(Complex) == sizeof(fftw_complex));
    std::memcpy(static_cast<void*>(buf.data), static_cast<const void*>(values.data()), values.size() * sizeof(Complex));
    fftw_execute(plan);
    std::memcpy(static_cast<void*>(values.data()), static_cast<const void*>(buf.data), values.size() * sizeof(Complex));
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(plan);
}

// (-1)^{k_1 + ... + k_d}: the phase of a half-period shift of the sample origin.
double half_period_sign(const GridSpec& g, std::size_t flat) {
    const Index3 k = g.wavenumbers(flat);
    int total = 0;
    for (int axis = 0; axis < g.d; ++axis) total += k[axis];
    return (total % 2 == 0) ? 1.0 : -1.0;
}

}  // namespace

SpectrumField forward_transform(const Field& f) {
    f.validate();
    SpectrumField F{f.grid, f.values, f.kind};
    dft_in_place(f.grid, F.coeffs, FFTW_FORWARD);
    const double hd = f.grid.cell_volume();
    for (std::size_t i = 0; i < F.coeffs.size(); ++i) F.coeffs[i] *= hd * half_period_sign(f.grid, i);
    return F;
}

Field inverse_transform(const SpectrumField& F) {
    F.grid.validate();
    if (F.coeffs.size() != F.grid.size()) throw StructuralError("spectrum length does not match its grid");
    std::vector<Complex> v(F.coeffs.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = F.coeffs[i] * half_period_sign(F.grid, i);
    dft_in_place(F.grid, v, FFTW_BACKWARD);
    const double scale = 1.0 / std::pow(F.grid.L, F.grid.d);
    for (auto& z : v) z *= scale;
    Field out;
    out.grid = F.grid;
    out.kind = F.source_kind;
    if (out.kind == FieldKind::Real)
        for (auto& z : v) z = Complex(z.real(), 0.0);
    out.values = std::move(v);
    return out;
}

}  // namespace homsob
