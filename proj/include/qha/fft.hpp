#pragma once

#include "qha/types.hpp"

namespace qha {

enum class Axis { Rows = 0, Cols = 1 };  // Rows: transform over the row index

/// Centered forward DFT: out[k] = sum_m v[m] e^{-2pi i (k-N/2)(m-N/2)/N}.
/// Both index and frequency are centered at N/2; no normalization factor.
CVector centered_fft(const CVector& v);

/// Centered inverse-kernel DFT: out[m] = sum_k v[k] e^{+2pi i (k-N/2)(m-N/2)/N}.
/// Unnormalized (plain kernel sum); divide by N for the true inverse.
CVector centered_ifft(const CVector& v);

/// Apply the centered transforms along one axis of a matrix.
/// Axis::Rows transforms each column over the row index.
CMatrix centered_fft(const CMatrix& m, Axis axis);
CMatrix centered_ifft(const CMatrix& m, Axis axis);

/// Band-limited 2x upsampling of a centered periodic sequence
/// (spectrum zero-padding with symmetric Nyquist-bin split).
/// out[2j] == v[j] exactly; out has length 2N.
CVector upsample2(const CVector& v);
CMatrix upsample2(const CMatrix& m, Axis axis);

}  // namespace qha
