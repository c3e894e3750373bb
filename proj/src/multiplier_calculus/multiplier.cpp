#include "homsob/multiplier.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "homsob/errors.hpp"
#include "homsob/fourier.hpp"
#include "homsob/quadrature.hpp"

namespace homsob {

namespace {

constexpr double kDcTolerance = 1e-8;

// Nyquist bins stand for both +N/2 and -N/2; the symbol is averaged over both signs.
Complex symbol_at(const GridSpec& g, std::size_t flat, const MultiplierSpec& m) {
    const Index3 k = g.wavenumbers(flat);
    const Vec3 w = g.frequency(flat);
    int nyq[3];
    int count = 0;
    for (int axis = 0; axis < g.d; ++axis)
        if (k[axis] == -g.N / 2) nyq[count++] = axis;
    if (count == 0) return m.symbol(w);
    Complex acc(0.0, 0.0);
    for (int mask = 0; mask < (1 << count); ++mask) {
        Vec3 v = w;
        for (int b = 0; b < count; ++b)
            if (mask & (1 << b)) v[nyq[b]] = -v[nyq[b]];
        acc += m.symbol(v);
    }
    return acc / static_cast<double>(1 << count);
}

void require_mean_zero(const SpectrumField& F, const char* op) {
    const double rel = relative_dc(F);
    if (rel > kDcTolerance) {
        std::ostringstream msg;
        msg << op << ": DC coefficient " << std::abs(F.coeffs[0]) << " is " << rel
            << " of max |coeffs| (limit 1e-8); input must be numerically mean-zero";
        throw PreconditionError(msg.str());
    }
}

}  // namespace

double relative_dc(const SpectrumField& F) {
    const double m = F.max_abs();
    return m == 0.0 ? 0.0 : std::abs(F.coeffs[0]) / m;
}

MultiplierSpec compose(const MultiplierSpec& first, const MultiplierSpec& second) {
    MultiplierSpec out;
    auto a = first.symbol;
    auto b = second.symbol;
    out.symbol = [a, b](const Vec3& w) { return a(w) * b(w); };
    const bool zero = first.zero_mode.kind == ZeroModeRule::Kind::SetZero ||
                      second.zero_mode.kind == ZeroModeRule::Kind::SetZero;
    out.zero_mode = zero ? ZeroModeRule::set_zero() : first.zero_mode;
    out.hermitian = first.hermitian && second.hermitian;
    return out;
}

SpectrumField apply_multiplier(const SpectrumField& F, const MultiplierSpec& m) {
    SpectrumField out = F;
    for (std::size_t i = 1; i < out.coeffs.size(); ++i) out.coeffs[i] *= symbol_at(F.grid, i, m);
    switch (m.zero_mode.kind) {
        case ZeroModeRule::Kind::SetZero: out.coeffs[0] = 0.0; break;
        case ZeroModeRule::Kind::Keep: out.coeffs[0] *= m.symbol(Vec3{0.0, 0.0, 0.0}); break;
        case ZeroModeRule::Kind::RejectIfMassive: out.coeffs[0] = 0.0; break;
    }
    if (!(F.source_kind == FieldKind::Real && m.hermitian)) out.source_kind = FieldKind::Complex;
    return out;
}

Field apply_multiplier(const Field& f, const MultiplierSpec& m) {
    const SpectrumField F = forward_transform(f);
    if (m.zero_mode.kind == ZeroModeRule::Kind::RejectIfMassive) {
        const double l1 = quadrature_lp_norm(f, 1.0);
        const double dc = std::abs(F.coeffs[0]);
        if (dc > m.zero_mode.tol * l1) {
            std::ostringstream msg;
            msg << "DC coefficient " << dc << " exceeds " << m.zero_mode.tol << " * ||f||_1 = " << m.zero_mode.tol * l1;
            throw PreconditionError(msg.str());
        }
    }
    return inverse_transform(apply_multiplier(F, m));
}

MultiplierSpec identity_symbol() {
    return {[](const Vec3&) { return Complex(1.0, 0.0); }, ZeroModeRule::keep(), true};
}

MultiplierSpec frac_laplacian_symbol(double s) {
    if (!(s >= 0.0)) throw DomainError("frac_laplacian needs s >= 0 (use riesz_potential for negative powers)");
    if (s == 0.0) return identity_symbol();
    return {[s](const Vec3& w) { return Complex(std::pow(norm(w), s), 0.0); }, ZeroModeRule::set_zero(), true};
}

MultiplierSpec riesz_potential_symbol(double s) {
    if (!(s > 0.0)) throw DomainError("riesz_potential needs s > 0");
    return {[s](const Vec3& w) { return Complex(std::pow(norm(w), -s), 0.0); }, ZeroModeRule::set_zero(), true};
}

MultiplierSpec riesz_transform_symbol(int axis) {
    if (axis < 1 || axis > 3) throw DomainError("Riesz transform axis must be 1..d");
    const int j = axis - 1;
    return {[j](const Vec3& w) { return Complex(0.0, -w[j] / norm(w)); }, ZeroModeRule::set_zero(), true};
}

MultiplierSpec derivative_symbol(const MultiIndex& alpha) {
    for (int v : alpha.a)
        if (v < 0) throw DomainError("negative multi-index component");
    return {[alpha](const Vec3& w) {
                Complex r(1.0, 0.0);
                for (int axis = 0; axis < 3; ++axis)
                    for (int k = 0; k < alpha.a[axis]; ++k) r *= Complex(0.0, w[axis]);
                return r;
            },
            alpha.order() == 0 ? ZeroModeRule::keep() : ZeroModeRule::set_zero(), true};
}

Field frac_laplacian(const Field& f, double s) { return apply_multiplier(f, frac_laplacian_symbol(s)); }

Field riesz_potential(const Field& f, double s) {
    if (!(s > 0.0 && s < f.grid.d))
        throw DomainError("riesz_potential needs 0 < s < d (got s = " + std::to_string(s) + ")");
    const SpectrumField F = forward_transform(f);
    require_mean_zero(F, "riesz_potential");
    return inverse_transform(apply_multiplier(F, riesz_potential_symbol(s)));
}

Field riesz_transform(const Field& f, int axis) {
    if (axis < 1 || axis > f.grid.d) throw DomainError("Riesz transform axis must be in 1..d");
    const SpectrumField F = forward_transform(f);
    require_mean_zero(F, "riesz_transform");
    return inverse_transform(apply_multiplier(F, riesz_transform_symbol(axis)));
}

Field spectral_derivative(const Field& f, const MultiIndex& alpha) {
    for (int axis = f.grid.d; axis < 3; ++axis)
        if (alpha.a[axis] != 0) throw StructuralError("multi-index exceeds field dimension");
    return apply_multiplier(f, derivative_symbol(alpha));
}

Complex spectral_derivative_at_origin(const SpectrumField& F, const MultiIndex& alpha) {
    const MultiplierSpec m = derivative_symbol(alpha);
    std::vector<Complex> terms(F.coeffs.size());
    for (std::size_t i = 0; i < terms.size(); ++i)
        terms[i] = (i == 0 ? m.symbol(Vec3{0.0, 0.0, 0.0}) : symbol_at(F.grid, i, m)) * F.coeffs[i];
    return pairwise_sum(terms) / std::pow(F.grid.L, F.grid.d);
}

}  // namespace homsob
