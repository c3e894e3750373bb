#pragma once

#include "homsob/grid.hpp"

namespace homsob {

/// coeffs[k] = h^d * sum_x f(x) exp(-i x.omega_k), omega_k = 2 pi k / L, with x measured
/// from the grid center. Approximates the continuous transform int f(x) exp(-i x.omega) dx.
SpectrumField forward_transform(const Field& f);

/// Exact inverse of forward_transform: f(x) = L^{-d} sum_k coeffs[k] exp(i x.omega_k).
/// A spectrum whose source was Real yields a Real field (imaginary roundoff dropped).
Field inverse_transform(const SpectrumField& F);

}  // namespace homsob
