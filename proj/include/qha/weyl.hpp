#pragma once

#include "qha/operators.hpp"
#include "qha/phase_space.hpp"

namespace qha {

/// Cross-Wigner distribution
///   W(psi, phi)(x, xi) = int phi(x + t/2) conj(psi(x - t/2)) e^{-2pi i xi t} dt.
/// The half-step samples phi(x +- t/2) come from band-limited 2x
/// upsampling; the t-integral is a centered N-point DFT per position.
SymbolGrid cross_wigner(const WindowVector& psi, const WindowVector& phi);

/// Weyl quantisation with kernel
///   K(x, y) = int tau((x+y)/2, xi) e^{2pi i xi (x-y)} dxi.
/// Midpoints live on the half-step refinement of the grid (2x upsampling
/// in x); the xi-integral runs over the 2N-point refinement so that the
/// full anti-diagonal range |x-y| < 4L is alias-free. On the periodic
/// window each matrix entry has two midpoint representatives; the kernel
/// sums both charts, which is what makes quantisation exactly unitary
/// (Pool isometry) and exactly intertwined with the symplectic Fourier
/// transform for symbols band-limited inside the window.
OperatorMatrix weyl_quantize(const SymbolGrid& tau);

/// Exact inverse of weyl_quantize: rebuilds the (midpoint, separation)
/// table from the two kernel charts, reconstructs the off-parity half-step
/// rows spectrally, and runs the xi-DFT backwards.
SymbolGrid weyl_symbol(const OperatorMatrix& t);

/// Fourier-Weyl transform F_W(T)(z) = tr(T rho(-z)), evaluated on the
/// full phase-space grid through shift-diagonal DFTs of the kernel
/// (O(N^2 log N)). Satisfies F_W(weyl_quantize(tau)) = symplectic_fourier(tau).
SymbolGrid fourier_weyl(const OperatorMatrix& t);

}  // namespace qha
