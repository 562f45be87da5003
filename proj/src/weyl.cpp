#include "qha/weyl.hpp"

#include <cmath>

#include "qha/fft.hpp"

namespace qha {

namespace {

CVector roll(const CVector& v, int a) {
    const int n = static_cast<int>(v.size());
    a = ((a % n) + n) % n;
    CVector out(n);
    for (int i = 0; i < n; ++i) out(i) = v((i - a + n) % n);
    return out;
}

/// Midpoint table G(p, d) on the doubled torus: p indexes the half-step
/// midpoint y_p = (p - N) h/2, d - N is the separation index delta, and
///   G(p, d) = (dxi/2) sum_{k'} tau2(p, k') e^{+2pi i (k'-N)(d-N)/(2N)}.
/// Realized by zero-padding the N-point delta spectrum (support
/// |delta| <= N/2, Nyquist bin split across +-N/2).
CMatrix midpoint_table(const SymbolGrid& tau) {
    const int n = tau.grid.n;
    CMatrix t2 = upsample2(tau.values, Axis::Rows);            // (2N, N)
    CMatrix g1 = tau.grid.dxi * centered_ifft(t2, Axis::Cols); // delta = d1 - N/2
    CMatrix g = CMatrix::Zero(2 * n, 2 * n);
    g.col(n / 2) = 0.5 * g1.col(0);
    g.col(3 * n / 2) = 0.5 * g1.col(0);
    g.block(0, n / 2 + 1, 2 * n, n - 1) = g1.block(0, 1, 2 * n, n - 1);
    return g;
}

}  // namespace

SymbolGrid cross_wigner(const WindowVector& psi, const WindowVector& phi) {
    require_same_grid(psi.grid, phi.grid, "cross_wigner");
    validate(psi, "cross_wigner");
    validate(phi, "cross_wigner");
    const PhaseGrid& grid = psi.grid;
    const int n = grid.n;
    CVector phi2 = upsample2(phi.values);
    CVector psi2 = upsample2(psi.values);
    CMatrix slices(n, n);
    for (int j = 0; j < n; ++j) {
        for (int m = 0; m < n; ++m) {
            const int ip = ((2 * j + m - n / 2) % (2 * n) + 2 * n) % (2 * n);
            const int im = ((2 * j - m + n / 2) % (2 * n) + 2 * n) % (2 * n);
            slices(j, m) = phi2(ip) * std::conj(psi2(im));
        }
    }
    return {grid, grid.h * centered_fft(slices, Axis::Cols)};
}

OperatorMatrix weyl_quantize(const SymbolGrid& tau) {
    validate(tau, "weyl_quantize");
    const int n = tau.grid.n;
    const CMatrix g = midpoint_table(tau);
    CMatrix kernel(n, n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            const int p1 = i + j, d1 = i - j + n;
            kernel(i, j) = g(p1, d1) + g((p1 + n) % (2 * n), (i - j + 2 * n) % (2 * n));
        }
    return {tau.grid, std::move(kernel)};
}

SymbolGrid weyl_symbol(const OperatorMatrix& t) {
    validate(t, "weyl_symbol");
    const int n = t.grid.n;
    CMatrix h = CMatrix::Zero(2 * n, 2 * n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            const int p1 = i + j, d1 = i - j + n;
            h(p1, d1) = t.kernel(i, j);
            h((p1 + n) % (2 * n), (i - j + 2 * n) % (2 * n)) = t.kernel(i, j);
        }
    // Each column of the table carries samples at every other midpoint
    // (parity p = N - d mod 2); fill the other parity by band-limited
    // interpolation of the known samples.
    CMatrix g = CMatrix::Zero(2 * n, 2 * n);
    for (int d = n / 2; d <= 3 * n / 2; ++d) {
        const int r0 = (n + d) % 2;
        CVector v(n);
        for (int s = 0; s < n; ++s) v(s) = h(2 * s + r0, d);
        g.col(d) = roll(upsample2(v), r0);
    }
    CMatrix t22 = centered_fft(g, Axis::Cols) / (n * t.grid.dxi);
    CMatrix tau(n, n);
    for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j) tau(j, k) = t22(2 * j, 2 * k);
    return {t.grid, std::move(tau)};
}

SymbolGrid fourier_weyl(const OperatorMatrix& t) {
    validate(t, "fourier_weyl");
    const PhaseGrid& grid = t.grid;
    const int n = grid.n;
    CMatrix diags(n, n);
    for (int r = 0; r < n; ++r) {
        const int a = r - n / 2;
        for (int m = 0; m < n; ++m) diags(r, m) = t.kernel(((m + a) % n + n) % n, m);
    }
    CMatrix out = grid.h * centered_fft(diags, Axis::Cols);
    for (int c = 0; c < n; ++c)
        for (int r = 0; r < n; ++r)
            out(r, c) *= std::exp(-kPi * kI * grid.x(r) * grid.xi(c));
    return {grid, std::move(out)};
}

}  // namespace qha
