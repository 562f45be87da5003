#include "qha/phase_space.hpp"

#include <cmath>

#include "qha/fft.hpp"
#include "qha/io.hpp"
#include "qha/rng.hpp"

namespace qha {

SymbolGrid::SymbolGrid(PhaseGrid g, CMatrix v) : grid(g), values(std::move(v)) {
    if (values.rows() != grid.n || values.cols() != grid.n)
        throw InvalidParameterError("SymbolGrid: value array does not match grid size");
}

void validate(const SymbolGrid& s, const char* where) {
    if (s.values.rows() != s.grid.n || s.values.cols() != s.grid.n)
        throw InvalidParameterError(std::string(where) + ": dimensions do not match grid");
    if (!s.values.allFinite())
        throw InvalidParameterError(std::string(where) + ": non-finite sample values");
}

SymbolSpec SymbolSpec::gaussian(double amplitude, double width) {
    if (!(width > 0.0)) throw InvalidParameterError("gaussian symbol: width must be positive");
    SymbolSpec s;
    s.kind = Kind::Gaussian;
    s.amplitude = amplitude;
    s.width = width;
    return s;
}

SymbolSpec SymbolSpec::constant_value(Complex c) {
    SymbolSpec s;
    s.kind = Kind::Constant;
    s.constant = c;
    return s;
}

SymbolSpec SymbolSpec::coordinate(char axis) {
    if (axis != 'x' && axis != 'f')
        throw InvalidParameterError("coordinate symbol: axis must be 'x' or 'f'");
    SymbolSpec s;
    s.kind = Kind::Coordinate;
    s.axis = axis;
    return s;
}

SymbolSpec SymbolSpec::file(std::string path) {
    SymbolSpec s;
    s.kind = Kind::File;
    s.path = std::move(path);
    return s;
}

SymbolGrid build_symbol(const PhaseGrid& grid, const SymbolSpec& spec) {
    const int n = grid.n;
    CMatrix v(n, n);
    switch (spec.kind) {
        case SymbolSpec::Kind::Gaussian: {
            const double w2 = spec.width * spec.width;
            for (int k = 0; k < n; ++k)
                for (int j = 0; j < n; ++j) {
                    const double r2 = grid.x(j) * grid.x(j) + grid.xi(k) * grid.xi(k);
                    v(j, k) = spec.amplitude * std::exp(-kPi * r2 / w2);
                }
            break;
        }
        case SymbolSpec::Kind::Constant:
            v.setConstant(spec.constant);
            break;
        case SymbolSpec::Kind::Coordinate:
            for (int k = 0; k < n; ++k)
                for (int j = 0; j < n; ++j)
                    v(j, k) = spec.axis == 'x' ? grid.x(j) : grid.xi(k);
            break;
        case SymbolSpec::Kind::File: {
            SymbolGrid s = read_symbol(spec.path);
            if (s.grid != grid)
                throw GridMismatchError("build_symbol: file grid does not match requested grid");
            return s;
        }
    }
    return {grid, std::move(v)};
}

SymbolGrid symplectic_fourier(const SymbolGrid& s) {
    validate(s, "symplectic_fourier");
    // out[a,b] = cell * sum_{j,k} S[j,k] e^{+2pi i (a-N/2)(k-N/2)/N}
    //                                   e^{-2pi i (b-N/2)(j-N/2)/N}
    // The row/column swap (transpose) is the coordinate exchange induced
    // by the symplectic pairing.
    CMatrix t = centered_ifft(s.values, Axis::Cols);
    t = centered_fft(t, Axis::Rows);
    return {s.grid, s.grid.cell() * t.transpose()};
}

SymbolGrid convolve_symbols(const SymbolGrid& a, const SymbolGrid& b) {
    require_same_grid(a.grid, b.grid, "convolve_symbols");
    SymbolGrid fa = symplectic_fourier(a);
    SymbolGrid fb = symplectic_fourier(b);
    fa.values.array() *= fb.values.array();
    return symplectic_fourier(fa);
}

double lp_norm(const SymbolGrid& s, double p) {
    if (std::isinf(p)) return s.values.cwiseAbs().maxCoeff();
    if (!(p >= 1.0)) throw InvalidParameterError("lp_norm: p must be >= 1 or inf");
    if (p == 1.0) return s.grid.cell() * s.values.cwiseAbs().sum();
    if (p == 2.0) return std::sqrt(s.grid.cell()) * s.values.norm();
    const double sum = s.values.cwiseAbs().array().pow(p).sum();
    return std::pow(s.grid.cell() * sum, 1.0 / p);
}

Complex symbol_pairing(const SymbolGrid& a, const SymbolGrid& b) {
    require_same_grid(a.grid, b.grid, "symbol_pairing");
    return a.grid.cell() * (b.values.conjugate().cwiseProduct(a.values)).sum();
}

namespace {

double bump_profile(double s) {
    if (s <= 0.0) return 1.0;
    if (s >= 1.0) return 0.0;
    return std::exp(1.0 - 1.0 / (1.0 - s * s));
}

}  // namespace

SymbolGrid smooth_cutoff(const PhaseGrid& grid, const Region& region, double margin) {
    if (!(margin > 0.0)) throw InvalidParameterError("smooth_cutoff: margin must be positive");
    if (!region.fits(grid, margin))
        throw DomainError("smooth_cutoff: region + margin exceeds the grid window");
    CMatrix v(grid.n, grid.n);
    for (int k = 0; k < grid.n; ++k)
        for (int j = 0; j < grid.n; ++j)
            v(j, k) = bump_profile(region.distance({grid.x(j), grid.xi(k)}) / margin);
    return {grid, std::move(v)};
}

SymbolGrid random_bandlimited_symbol(const PhaseGrid& grid, const Region& region,
                                     std::uint64_t seed, bool real_valued) {
    if (!region.fits(grid))
        throw DomainError("random_bandlimited_symbol: region exceeds the grid window");
    // Envelope supported exactly on the region: shrink by the transition
    // width so plateau + shell = region.
    const double scale = region.shape == Region::Shape::Disc
                             ? region.radius
                             : std::min(region.half_x, region.half_xi);
    const double trans = 0.2 * scale;
    Region inner = region;
    if (region.shape == Region::Shape::Disc) {
        inner.radius -= trans;
    } else {
        inner.half_x -= trans;
        inner.half_xi -= trans;
    }

    const int n = grid.n;
    CMatrix noise(n, n);
    for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j) {
            const double env =
                bump_profile(inner.distance({grid.x(j), grid.xi(k)}) / trans);
            noise(j, k) = env > 0.0 ? env * rng::gaussian(seed, static_cast<std::uint64_t>(j),
                                                          static_cast<std::uint64_t>(k))
                                    : Complex(0.0, 0.0);
        }
    if (real_valued) {
        CMatrix sym(n, n);
        for (int k = 0; k < n; ++k)
            for (int j = 0; j < n; ++j) {
                const int jr = (n - j) % n, kr = (n - k) % n;
                sym(j, k) = 0.5 * (noise(j, k) + std::conj(noise(jr, kr)));
            }
        noise.swap(sym);
    }
    return symplectic_fourier({grid, std::move(noise)});
}

double out_of_region_mass(const SymbolGrid& spectrum, const Region& region) {
    double inside = 0.0, outside = 0.0;
    const PhaseGrid& g = spectrum.grid;
    for (int k = 0; k < g.n; ++k)
        for (int j = 0; j < g.n; ++j) {
            const double a = std::abs(spectrum.values(j, k));
            (region.contains({g.x(j), g.xi(k)}) ? inside : outside) += a;
        }
    const double total = inside + outside;
    return total > 0.0 ? outside / total : 0.0;
}

}  // namespace qha
