#include "qha/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qha/errors.hpp"
#include "qha/parallel.hpp"
#include "qha/rng.hpp"
#include "qha/weyl.hpp"

namespace qha {

BoundReport BoundReport::make(std::string name, double p, double lhs, double rhs, double tol,
                              std::map<std::string, double> cert) {
    BoundReport r;
    r.name = std::move(name);
    r.p = p;
    r.lhs = lhs;
    r.rhs = rhs;
    r.tolerance = tol;
    r.certificate = std::move(cert);
    r.pass = lhs <= rhs * (1.0 + tol);
    return r;
}

BoundReport check_eq2(const SymbolGrid& tau, const SymbolGrid& phi, ConvMethod method) {
    require_same_grid(tau.grid, phi.grid, "check_eq2");
    SymbolGrid lhs = op_conv(weyl_quantize(tau), weyl_quantize(phi), method);
    SymbolGrid rhs = convolve_symbols(tau, phi);
    const double scale = rhs.values.cwiseAbs().maxCoeff();
    const double diff = (lhs.values - rhs.values).cwiseAbs().maxCoeff();
    const double rel = scale > 0.0 ? diff / scale : diff;
    return BoundReport::make("eq2_intertwining", std::numeric_limits<double>::infinity(), rel,
                             1e-6, 0.0,
                             {{"sup_difference", diff}, {"sup_scale", scale}});
}

namespace {

double inv_exponent(double p) { return std::isinf(p) ? 0.0 : 1.0 / p; }

OperatorMatrix random_low_rank(const PhaseGrid& grid, std::uint64_t key, int max_rank = 5) {
    const WindowVector env = gaussian_window(grid);
    const int rank = 1 + static_cast<int>(rng::key(key, 0xabcdULL) % max_rank);
    CMatrix kernel = CMatrix::Zero(grid.n, grid.n);
    for (int r = 0; r < rank; ++r) {
        CVector u(grid.n), v(grid.n);
        for (int i = 0; i < grid.n; ++i) {
            u(i) = std::abs(env.values(i)) * rng::gaussian(key, 1, r, static_cast<std::uint64_t>(i));
            v(i) = std::abs(env.values(i)) * rng::gaussian(key, 2, r, static_cast<std::uint64_t>(i));
        }
        kernel += u * v.adjoint();
    }
    return {grid, std::move(kernel)};
}

}  // namespace

WernerYoungReport werner_young_trial(const PhaseGrid& grid, double p, double q, double r,
                                     int trials, std::uint64_t seed) {
    if (trials < 1) throw InvalidParameterError("werner_young_trial: trials must be >= 1");
    for (double e : {p, q, r})
        if (!std::isinf(e) && !(e >= 1.0))
            throw InvalidParameterError("werner_young_trial: exponents must be >= 1 or inf");
    if (std::abs(1.0 + inv_exponent(r) - inv_exponent(p) - inv_exponent(q)) > 1e-12)
        throw InvalidParameterError("werner_young_trial: need 1 + 1/r = 1/p + 1/q");

    WernerYoungReport report;
    report.p = p;
    report.q = q;
    report.r = r;
    report.trials = trials;
    std::vector<double> ratios(trials, 0.0);
    parallel_for(0, trials, [&](std::ptrdiff_t t) {
        const std::uint64_t ks = rng::key(seed, static_cast<std::uint64_t>(t), 11);
        const std::uint64_t kt = rng::key(seed, static_cast<std::uint64_t>(t), 22);
        OperatorMatrix s_op = random_low_rank(grid, ks);
        OperatorMatrix t_op = random_low_rank(grid, kt);
        const double lhs = lp_norm(op_conv(s_op, t_op, ConvMethod::Fast), r);
        const double rhs = schatten_norm(s_op, p).value * schatten_norm(t_op, q).value;
        ratios[t] = rhs > 0.0 ? lhs / rhs : 0.0;
    });
    report.worst_ratio = *std::max_element(ratios.begin(), ratios.end());
    for (double x : ratios)
        if (x > 1.0 + 1e-6) ++report.violations;
    report.pass = report.violations == 0;
    return report;
}

BoundChain verify_bound_chain(const SymbolGrid& tau, const Region& region, double p,
                              double margin) {
    validate(tau, "verify_bound_chain");
    SymbolGrid spectrum = symplectic_fourier(tau);
    const double leak = out_of_region_mass(spectrum, region);
    if (leak > 1e-8)
        throw HypothesisViolationError(
            "verify_bound_chain: F(tau) has mass fraction " + std::to_string(leak) +
            " outside the region; the band-limit hypothesis fails");

    const PhaseGrid& grid = tau.grid;
    BoundChain chain;

    SymbolGrid cutoff = smooth_cutoff(grid, region, margin);
    SymbolGrid f_cutoff = symplectic_fourier(cutoff);
    SymbolGrid reconstructed = convolve_symbols(tau, f_cutoff);
    const double tau_l2 = lp_norm(tau, 2.0);
    chain.reconstruction_error =
        lp_norm({grid, reconstructed.values - tau.values}, 2.0) / tau_l2;

    const double cert = schatten_norm(weyl_quantize(f_cutoff), 1.0).value;
    const double schatten_p = schatten_norm(weyl_quantize(tau), p).value;
    chain.lp_vs_schatten = BoundReport::make(
        "lp_le_trace_norm_times_schatten", p, lp_norm(tau, p), cert * schatten_p, 1e-3,
        {{"cutoff_quantization_trace_norm", cert},
         {"schatten_p", schatten_p},
         {"reconstruction_error", chain.reconstruction_error},
         {"spectral_leak", leak}});

    const WindowVector g = gaussian_window(grid);
    SymbolGrid wigner = cross_wigner(g, g);
    SymbolGrid conv = convolve_symbols(tau, wigner);
    const double w_l1 = lp_norm(wigner, 1.0);
    SymbolGrid via_op = op_conv(weyl_quantize(tau), rank_one(g, g), ConvMethod::Fast);
    const double conv_scale = conv.values.cwiseAbs().maxCoeff();
    const double ident_err =
        (via_op.values - conv.values).cwiseAbs().maxCoeff() / std::max(conv_scale, 1e-300);
    chain.young_step = BoundReport::make(
        "young_convolution_step", p, lp_norm(conv, p), w_l1 * lp_norm(tau, p), 1e-9,
        {{"wigner_l1", w_l1}, {"opconv_identity_error", ident_err}});
    chain.young_step.pass = chain.young_step.pass && ident_err <= 1e-6;

    chain.pass = chain.reconstruction_error <= 1e-8 && chain.lp_vs_schatten.pass &&
                 chain.young_step.pass;
    return chain;
}

ConstantEstimate estimate_constant(const Region& region, double p, int samples,
                                   std::uint64_t seed, const PhaseGrid& grid) {
    if (samples < 1) throw InvalidParameterError("estimate_constant: samples must be >= 1");
    if (!std::isinf(p) && !(p >= 1.0))
        throw InvalidParameterError("estimate_constant: p must be >= 1 or inf");
    if (!region.fits(grid))
        throw DomainError("estimate_constant: region does not fit the grid window");

    ConstantEstimate est;
    est.region = region;
    est.p = p;
    est.samples = samples;
    est.grid = grid;
    est.seed = seed;

    const WindowVector g = gaussian_window(grid);
    const OperatorMatrix projector = rank_one(g, g);
    std::vector<double> num(samples), den(samples);
    parallel_for(0, samples, [&](std::ptrdiff_t i) {
        SymbolGrid tau =
            random_bandlimited_symbol(grid, region, rng::key(seed, static_cast<std::uint64_t>(i)));
        OperatorMatrix op = weyl_quantize(tau);
        num[i] = schatten_norm(op, p).value;
        den[i] = lp_norm(op_conv(op, projector, ConvMethod::Fast), p);
    });
    for (int i = 0; i < samples; ++i) {
        if (den[i] < 1e-14 * num[i]) {
            ++est.excluded;
            continue;
        }
        est.ratios.push_back(num[i] / den[i]);
    }
    if (!est.ratios.empty()) {
        est.ratio_min = *std::min_element(est.ratios.begin(), est.ratios.end());
        est.ratio_max = *std::max_element(est.ratios.begin(), est.ratios.end());
        double sum = 0.0;
        for (double x : est.ratios) sum += x;
        est.ratio_mean = sum / static_cast<double>(est.ratios.size());
    }
    return est;
}

}  // namespace qha
