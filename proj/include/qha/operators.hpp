#pragma once

#include <vector>

#include "qha/grid.hpp"
#include "qha/types.hpp"

namespace qha {

/// Complex samples of an L^2(R) function on the position grid.
struct WindowVector {
    PhaseGrid grid;
    CVector values;

    WindowVector() = default;
    WindowVector(PhaseGrid g, CVector v);
};

void validate(const WindowVector& w, const char* where = "WindowVector");

/// Kernel matrix K of an integral operator on the discretized line.
/// Action: (T f)(x_i) = h * sum_j K(i,j) f(x_j). All trace and singular
/// value scalings below follow from this single quadrature convention.
struct OperatorMatrix {
    PhaseGrid grid;
    CMatrix kernel;

    OperatorMatrix() = default;
    OperatorMatrix(PhaseGrid g, CMatrix k);
};

void validate(const OperatorMatrix& t, const char* where = "OperatorMatrix");

/// The normalized Gaussian phi_0(t) = 2^{1/4} e^{-pi t^2} sampled on the
/// position grid.
WindowVector gaussian_window(const PhaseGrid& grid);

/// <f, g> = h * sum f conj(g).
Complex inner(const WindowVector& f, const WindowVector& g);
double norm(const WindowVector& f);

/// Apply the operator: out = h * K f.
WindowVector apply(const OperatorMatrix& t, const WindowVector& f);

enum class ShiftMode { Snapped, Interpolated };

/// Symmetric time-frequency shift
///   rho(x,xi) f(t) = e^{-pi i x xi} e^{2pi i xi t} f(t - x).
/// Snapped mode requires x on the position lattice (periodic index roll);
/// interpolated mode realizes the fractional translation spectrally. Both
/// are exactly unitary on the grid.
WindowVector tf_shift(const WindowVector& f, PhasePoint z, ShiftMode mode = ShiftMode::Snapped);

/// P T P with P f(t) = f(-t) (periodic index reflection on both axes).
OperatorMatrix parity_conjugate(const OperatorMatrix& t);

/// Operator translation alpha_z(T) = rho(z) T rho(-z); kernel
/// K(t - x, v - x) e^{2pi i xi (t - v)}. Snapped in x.
OperatorMatrix translate_operator(const OperatorMatrix& t, PhasePoint z);

/// Rank-one operator (g (x) h) f = <f, h> g; kernel g(x) conj(h(y)).
OperatorMatrix rank_one(const WindowVector& g, const WindowVector& h);

/// Quadrature trace h * sum_i K(i,i).
Complex trace(const OperatorMatrix& t);

OperatorMatrix adjoint(const OperatorMatrix& t);

/// Schatten p-norm data. Operator singular values are h times the matrix
/// singular values; values below 1e-12 * s_max count as numerically zero
/// for rank reporting.
struct SchattenValue {
    double p = 2.0;
    double value = 0.0;
    std::vector<double> singular_values;  ///< descending, operator scaling
    int numerical_rank = 0;

    static constexpr double kZeroThreshold = 1e-12;
};

SchattenValue schatten_norm(const OperatorMatrix& t, double p);

/// All Schatten norms from one decomposition.
std::vector<SchattenValue> schatten_norms(const OperatorMatrix& t, const std::vector<double>& ps);

/// Singular values only (descending, operator scaling).
std::vector<double> singular_values(const OperatorMatrix& t);

/// p-norm of a precomputed singular value sequence.
double schatten_from_singular_values(const std::vector<double>& sv, double p);

}  // namespace qha
