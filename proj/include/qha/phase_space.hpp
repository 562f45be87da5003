#pragma once

#include <cstdint>
#include <string>

#include "qha/grid.hpp"
#include "qha/types.hpp"

namespace qha {

/// Complex samples of a phase-space function on a PhaseGrid.
/// values(j, k) = f(x_j, xi_k): row index = position, column = frequency.
struct SymbolGrid {
    PhaseGrid grid;
    CMatrix values;

    SymbolGrid() = default;
    SymbolGrid(PhaseGrid g, CMatrix v);
};

/// Throws InvalidParameterError on NaN/Inf entries or dimension mismatch.
void validate(const SymbolGrid& s, const char* where = "SymbolGrid");

/// Descriptor for the built-in symbol generators.
struct SymbolSpec {
    enum class Kind { Gaussian, Constant, Coordinate, File };
    Kind kind = Kind::Gaussian;
    double amplitude = 1.0;  ///< gaussian: a in a*exp(-pi |z|^2 / w^2)
    double width = 1.0;      ///< gaussian: w
    Complex constant = 1.0;
    char axis = 'x';         ///< coordinate: 'x' or 'f' (frequency)
    std::string path;        ///< file: QHAGRID1 input

    static SymbolSpec gaussian(double amplitude, double width);
    static SymbolSpec constant_value(Complex c);
    static SymbolSpec coordinate(char axis);
    static SymbolSpec file(std::string path);
};

SymbolGrid build_symbol(const PhaseGrid& grid, const SymbolSpec& spec);

/// Symplectic Fourier transform
///   F(S)(zeta) = int e^{-2pi i sigma(zeta, z)} S(z) dz,
/// sigma((x,xi),(x',xi')) = xi*x' - x*xi'. An exact involution on the grid
/// (the quadrature weight h*dxi and the DFT duality h*dxi*N = 1 cancel).
SymbolGrid symplectic_fourier(const SymbolGrid& s);

/// Periodic convolution (A*B)(z) = int A(z-w) B(w) dw, computed as
/// F(F(A) . F(B)) so that the convolution theorem holds to round-off.
SymbolGrid convolve_symbols(const SymbolGrid& a, const SymbolGrid& b);

/// L^p norm with cell-area quadrature: (h*dxi * sum |S|^p)^{1/p};
/// max modulus for p = inf. p >= 1 required.
double lp_norm(const SymbolGrid& s, double p);

/// Quadrature pairing <A, B> = h*dxi * sum A conj(B).
Complex symbol_pairing(const SymbolGrid& a, const SymbolGrid& b);

/// Smooth plateau function: exactly 1 on `region`, exactly 0 at distance
/// >= margin from it, with the bump profile exp(1 - 1/(1-s^2)) on the
/// transition shell (s = distance/margin).
SymbolGrid smooth_cutoff(const PhaseGrid& grid, const Region& region, double margin);

/// Random symbol whose symplectic Fourier transform is supported in
/// `region`: complex Gaussian noise on in-region grid points, shaped by a
/// smooth envelope that vanishes on the region boundary, then transformed.
/// Deterministic in (seed); if real_valued, the noise is symmetrized
/// (G(-z) = conj G(z)) so the output is real. The envelope transition
/// occupies the outer 20% of the region.
SymbolGrid random_bandlimited_symbol(const PhaseGrid& grid, const Region& region,
                                     std::uint64_t seed, bool real_valued = false);

/// Fraction of |F(tau)| mass outside the region (band-limit check).
double out_of_region_mass(const SymbolGrid& spectrum, const Region& region);

}  // namespace qha
