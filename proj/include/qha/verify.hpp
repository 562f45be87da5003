#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qha/op_conv.hpp"

namespace qha {

/// One certified inequality: pass <=> lhs <= rhs * (1 + tolerance).
struct BoundReport {
    std::string name;
    double p = 2.0;  ///< exponent (may be inf)
    double lhs = 0.0;
    double rhs = 0.0;
    double tolerance = 0.0;
    std::map<std::string, double> certificate;  ///< computed constants
    double slack() const { return rhs - lhs; }
    bool pass = false;

    static BoundReport make(std::string name, double p, double lhs, double rhs, double tol,
                            std::map<std::string, double> cert = {});
};

/// Relative sup-error of the intertwining  L_tau * L_phi = tau * phi
/// (operator convolution of quantisations vs symbol convolution).
/// Both symbols should be band-limited well inside the window; the caller
/// contract is checked with an energy heuristic recorded in the report.
BoundReport check_eq2(const SymbolGrid& tau, const SymbolGrid& phi,
                      ConvMethod method = ConvMethod::Fast);

/// Batch report for Young's inequality for the operator convolution:
/// ||S * T||_{L^r} <= ||S||_{S^p} ||T||_{S^q}, 1 + 1/r = 1/p + 1/q.
struct WernerYoungReport {
    double p = 1.0, q = 1.0, r = 1.0;
    int trials = 0;
    int violations = 0;
    double worst_ratio = 0.0;  ///< max over trials of lhs/rhs
    bool pass = false;
};

/// Random trials with rank <= 5 Gaussian-enveloped operators; pass iff
/// lhs <= rhs * (1 + 1e-6) in every trial. Deterministic in seed.
WernerYoungReport werner_young_trial(const PhaseGrid& grid, double p, double q, double r,
                                     int trials, std::uint64_t seed);

/// Both halves of the norm-equivalence certificate for one symbol.
struct BoundChain {
    double reconstruction_error = 0.0;  ///< ||tau - tau * F(Psi)||_2 / ||tau||_2
    BoundReport lp_vs_schatten;   ///< ||tau||_p <= ||L_{F(Psi)}||_{S^1} ||L_tau||_{S^p}
    BoundReport young_step;       ///< ||tau conv W||_p <= ||W||_1 ||tau||_p
    bool pass = false;
};

/// Runs the certificate chain for a symbol whose symplectic Fourier
/// transform is supported in `region` (validated; out-of-region mass
/// above 1e-8 of total raises HypothesisViolationError):
///   - reconstruction tau = tau * F(Psi) with Psi = smooth_cutoff(region, margin)
///   - ||tau||_p <= ||L_{F(Psi)}||_{S^1} ||L_tau||_{S^p} with the trace-norm
///     certificate computed, not assumed
///   - ||tau conv W(g,g)||_p <= ||W(g,g)||_1 ||tau||_p for the Gaussian
///     window g, plus the identity L_tau * (g (x) g) = tau conv W(g,g).
BoundChain verify_bound_chain(const SymbolGrid& tau, const Region& region, double p,
                              double margin);

/// Empirical statistics for the constant in
/// ||L_tau||_{S^p} <= C(Omega) ||L_tau * (g (x) g)||_{L^p}.
struct ConstantEstimate {
    Region region;
    double p = 2.0;
    int samples = 0;
    int excluded = 0;  ///< degenerate denominators skipped
    double ratio_min = 0.0, ratio_max = 0.0, ratio_mean = 0.0;
    std::vector<double> ratios;
    PhaseGrid grid;
    std::uint64_t seed = 0;
};

/// Draws `samples` band-limited symbols and reports the distribution of
/// ||L_tau||_{S^p} / ||L_tau * (g (x) g)||_{L^p} with g the Gaussian
/// window. Denominators below 1e-14 * numerator are excluded (counted).
ConstantEstimate estimate_constant(const Region& region, double p, int samples,
                                   std::uint64_t seed, const PhaseGrid& grid);

}  // namespace qha
