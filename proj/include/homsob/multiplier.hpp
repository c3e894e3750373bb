#pragma once

#include <functional>

#include "homsob/grid.hpp"
#include "homsob/polynomial.hpp"

namespace homsob {

/// How the omega = 0 bin is treated by apply_multiplier.
struct ZeroModeRule {
    enum class Kind { SetZero, Keep, RejectIfMassive } kind = Kind::SetZero;
    /// Relative DC tolerance for RejectIfMassive: |DC| <= tol * ||f||_{L^1}.
    double tol = 0.0;

    static ZeroModeRule set_zero() { return {Kind::SetZero, 0.0}; }
    static ZeroModeRule keep() { return {Kind::Keep, 0.0}; }
    static ZeroModeRule reject_if_massive(double tol) { return {Kind::RejectIfMassive, tol}; }
};

/// Fourier multiplier symbol m(omega), evaluated only at grid frequencies.
struct MultiplierSpec {
    std::function<Complex(const Vec3&)> symbol;
    ZeroModeRule zero_mode = ZeroModeRule::set_zero();
    /// m(-omega) = conj(m(omega)); real input then gives real output.
    bool hermitian = true;
};

/// Pointwise product of two symbols. The zero-mode rule of `first` is kept unless either is SetZero.
MultiplierSpec compose(const MultiplierSpec& first, const MultiplierSpec& second);

/// inverse_transform(m(omega_k) * coeffs[k]) with the DC bin handled per m.zero_mode.
Field apply_multiplier(const Field& f, const MultiplierSpec& m);
SpectrumField apply_multiplier(const SpectrumField& F, const MultiplierSpec& m);

MultiplierSpec identity_symbol();
/// |omega|^s, s >= 0.
MultiplierSpec frac_laplacian_symbol(double s);
/// |omega|^{-s}, 0 < s < d.
MultiplierSpec riesz_potential_symbol(double s);
/// -i omega_j / |omega|, axis j in 1..d.
MultiplierSpec riesz_transform_symbol(int axis);
/// (i omega)^alpha.
MultiplierSpec derivative_symbol(const MultiIndex& alpha);

/// Delta^{s/2} f; the DC bin is zeroed for s > 0.
Field frac_laplacian(const Field& f, double s);

/// I_s f for 0 < s < d. Throws PreconditionError unless |DC| <= 1e-8 max|coeffs|.
Field riesz_potential(const Field& f, double s);

/// R_j f, axis in 1..d, same DC precondition as riesz_potential.
Field riesz_transform(const Field& f, int axis);

/// Spectral partial derivative d^alpha f (symbol (i omega)^alpha).
Field spectral_derivative(const Field& f, const MultiIndex& alpha);

/// d^alpha f evaluated at the grid origin from the spectrum: L^{-d} sum (i omega)^alpha F.
Complex spectral_derivative_at_origin(const SpectrumField& F, const MultiIndex& alpha);

/// Relative DC magnitude used by the negative-power multipliers.
double relative_dc(const SpectrumField& F);

}  // namespace homsob
