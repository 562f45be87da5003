#include "qha/op_conv.hpp"

#include <cmath>

#include "qha/parallel.hpp"
#include "qha/weyl.hpp"

namespace qha {

namespace {

SymbolGrid op_conv_direct(const OperatorMatrix& t, const OperatorMatrix& s) {
    const PhaseGrid& g = t.grid;
    const int n = g.n;
    const CMatrix m = parity_conjugate(s).kernel;
    const CMatrix& kt = t.kernel;

    // Modulation table: phi(c, j) = e^{2pi i xi_c x_j}.
    CMatrix phi(n, n);
    for (int j = 0; j < n; ++j)
        for (int c = 0; c < n; ++c) phi(c, j) = std::exp(2.0 * kPi * kI * g.xi(c) * g.x(j));

    CMatrix out(n, n);
    parallel_for(0, n, [&](std::ptrdiff_t r) {
        const int a = static_cast<int>(r);  // translation by a - N/2 grid steps
        // D(j, i) = M((j-a')%N, (i-a')%N) * K_T(i, j) so that
        // tr(T alpha_z(M)) = h^2 phi_c^T D conj(phi_c).
        const int ash = ((a - n / 2) % n + n) % n;
        CMatrix d(n, n);
        for (int i = 0; i < n; ++i) {
            const int is = (i - ash + n) % n;
            for (int j = 0; j < n; ++j) d(j, i) = m((j - ash + n) % n, is) * kt(i, j);
        }
        for (int c = 0; c < n; ++c) {
            const CVector w = d * phi.row(c).conjugate().transpose();
            out(a, c) = g.h * g.h * (phi.row(c) * w)(0);
        }
    });
    return {g, std::move(out)};
}

SymbolGrid op_conv_fast(const OperatorMatrix& t, const OperatorMatrix& s) {
    SymbolGrid ft = fourier_weyl(t);
    SymbolGrid fs = fourier_weyl(s);
    ft.values.array() *= fs.values.array();
    return symplectic_fourier(ft);  // F_sigma is an involution
}

}  // namespace

SymbolGrid op_conv(const OperatorMatrix& t, const OperatorMatrix& s, ConvMethod method) {
    require_same_grid(t.grid, s.grid, "op_conv");
    validate(t, "op_conv");
    validate(s, "op_conv");
    return method == ConvMethod::Direct ? op_conv_direct(t, s) : op_conv_fast(t, s);
}

}  // namespace qha
