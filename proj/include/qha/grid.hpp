#pragma once

#include <algorithm>
#include <cmath>

#include "qha/errors.hpp"
#include "qha/types.hpp"

namespace qha {

/// Square N x N discretization of phase space.
///
/// Position samples   x_j  = (j - N/2) * h,    h   = 2L/N
/// Frequency samples  xi_k = (k - N/2) * dxi,  dxi = 1/(2L)
///
/// h * dxi * N = 1 exactly, so every centered DFT below maps grid
/// samples onto grid samples. The frequency axis spans [-N/(4L), N/(4L));
/// it coincides with [-L, L) exactly when N = 4L^2 (the default setup).
///
/// Symplectic form: sigma((x,xi),(x',xi')) = xi*x' - x*xi'. The sign is a
/// convention; it is pinned jointly with the Fourier-Weyl transform by the
/// intertwining tests, not in isolation.
struct PhaseGrid {
    int n = 0;            ///< samples per axis (even, >= 8)
    double half_width = 0.0;  ///< L
    double h = 0.0;       ///< position spacing 2L/N
    double dxi = 0.0;     ///< frequency spacing 1/(2L)

    double x(int j) const { return (j - n / 2) * h; }
    double xi(int k) const { return (k - n / 2) * dxi; }
    /// Phase-space cell area h * dxi = 1/N, the quadrature weight for
    /// all symbol-plane integrals.
    double cell() const { return h * dxi; }
    /// Half-width of the frequency axis, N/(4L).
    double xi_half_width() const { return n * dxi / 2.0; }

    bool operator==(const PhaseGrid& o) const { return n == o.n && half_width == o.half_width; }
    bool operator!=(const PhaseGrid& o) const { return !(*this == o); }
};

inline PhaseGrid make_grid(int n, double half_width) {
    if (n < 8 || n % 2 != 0)
        throw InvalidParameterError("make_grid: N must be even and >= 8, got " + std::to_string(n));
    if (!(half_width > 0.0))
        throw InvalidParameterError("make_grid: L must be positive");
    PhaseGrid g;
    g.n = n;
    g.half_width = half_width;
    g.h = 2.0 * half_width / n;
    g.dxi = 1.0 / (2.0 * half_width);
    return g;
}

inline void require_same_grid(const PhaseGrid& a, const PhaseGrid& b, const char* where) {
    if (a != b) throw GridMismatchError(std::string(where) + ": operands live on different grids");
}

/// A disc or axis-aligned rectangle in phase space (the support region
/// Omega for band-limited symbols).
struct Region {
    enum class Shape { Disc, Rectangle };

    Shape shape = Shape::Disc;
    PhasePoint center;
    double radius = 0.0;     ///< disc only
    double half_x = 0.0;     ///< rectangle half-extent along x
    double half_xi = 0.0;    ///< rectangle half-extent along xi

    static Region disc(double radius, PhasePoint center = {}) {
        if (!(radius > 0.0)) throw InvalidParameterError("Region::disc: radius must be positive");
        Region r;
        r.shape = Shape::Disc;
        r.center = center;
        r.radius = radius;
        return r;
    }

    static Region rectangle(double half_x, double half_xi, PhasePoint center = {}) {
        if (!(half_x > 0.0) || !(half_xi > 0.0))
            throw InvalidParameterError("Region::rectangle: extents must be positive");
        Region r;
        r.shape = Shape::Rectangle;
        r.center = center;
        r.half_x = half_x;
        r.half_xi = half_xi;
        return r;
    }

    /// Euclidean distance from z to the region (0 inside).
    double distance(PhasePoint z) const {
        const double dx = z.x - center.x;
        const double dxi_ = z.xi - center.xi;
        if (shape == Shape::Disc) {
            return std::max(0.0, std::hypot(dx, dxi_) - radius);
        }
        const double ox = std::max(0.0, std::abs(dx) - half_x);
        const double oxi = std::max(0.0, std::abs(dxi_) - half_xi);
        return std::hypot(ox, oxi);
    }

    bool contains(PhasePoint z) const { return distance(z) == 0.0; }

    /// True if the region dilated by `margin` fits inside the grid window
    /// on both axes.
    bool fits(const PhaseGrid& g, double margin = 0.0) const {
        double rx, rxi;
        if (shape == Shape::Disc) {
            rx = rxi = radius;
        } else {
            rx = half_x;
            rxi = half_xi;
        }
        return std::abs(center.x) + rx + margin <= g.half_width &&
               std::abs(center.xi) + rxi + margin <= g.xi_half_width();
    }
};

}  // namespace qha
