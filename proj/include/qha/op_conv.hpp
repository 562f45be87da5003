#pragma once

#include "qha/operators.hpp"
#include "qha/phase_space.hpp"

namespace qha {

enum class ConvMethod { Direct, Fast };

/// Werner operator convolution T * S (z) = tr(T alpha_z(P S P)), a
/// function on phase space.
///
/// Direct: evaluates the trace at every grid point z with a precomputed
/// P S P kernel (O(N^4), parallel over z). Fast: the Fourier-Weyl route
/// F_sigma^{-1}(F_W(T) . F_W(S)) in O(N^2 log N). The two must agree;
/// the agreement is itself a library invariant.
SymbolGrid op_conv(const OperatorMatrix& t, const OperatorMatrix& s,
                   ConvMethod method = ConvMethod::Fast);

}  // namespace qha
