#include "qha/operators.hpp"

#include <cmath>

#include "qha/errors.hpp"
#include "qha/fft.hpp"

namespace qha {

WindowVector::WindowVector(PhaseGrid g, CVector v) : grid(g), values(std::move(v)) {
    if (values.size() != grid.n)
        throw InvalidParameterError("WindowVector: length does not match grid");
}

void validate(const WindowVector& w, const char* where) {
    if (w.values.size() != w.grid.n)
        throw InvalidParameterError(std::string(where) + ": length does not match grid");
    if (!w.values.allFinite())
        throw InvalidParameterError(std::string(where) + ": non-finite entries");
}

OperatorMatrix::OperatorMatrix(PhaseGrid g, CMatrix k) : grid(g), kernel(std::move(k)) {
    if (kernel.rows() != grid.n || kernel.cols() != grid.n)
        throw InvalidParameterError("OperatorMatrix: kernel does not match grid size");
}

void validate(const OperatorMatrix& t, const char* where) {
    if (t.kernel.rows() != t.grid.n || t.kernel.cols() != t.grid.n)
        throw InvalidParameterError(std::string(where) + ": kernel does not match grid size");
    if (!t.kernel.allFinite())
        throw InvalidParameterError(std::string(where) + ": non-finite entries");
}

WindowVector gaussian_window(const PhaseGrid& grid) {
    CVector v(grid.n);
    const double amp = std::pow(2.0, 0.25);
    for (int j = 0; j < grid.n; ++j) v(j) = amp * std::exp(-kPi * grid.x(j) * grid.x(j));
    return {grid, std::move(v)};
}

Complex inner(const WindowVector& f, const WindowVector& g) {
    require_same_grid(f.grid, g.grid, "inner");
    return f.grid.h * g.values.dot(f.values);  // dot conjugates the left factor
}

double norm(const WindowVector& f) { return std::sqrt(f.grid.h) * f.values.norm(); }

WindowVector apply(const OperatorMatrix& t, const WindowVector& f) {
    require_same_grid(t.grid, f.grid, "apply");
    return {t.grid, t.grid.h * (t.kernel * f.values)};
}

namespace {

int snapped_steps(const PhaseGrid& g, double x, const char* where) {
    const double a = x / g.h;
    const double r = std::round(a);
    if (std::abs(a - r) > 1e-12)
        throw GridAlignmentError(std::string(where) +
                                 ": x-component is not a grid multiple (use interpolated mode)");
    return static_cast<int>(r);
}

CVector roll(const CVector& v, int a) {
    const int n = static_cast<int>(v.size());
    a = ((a % n) + n) % n;
    CVector out(n);
    for (int i = 0; i < n; ++i) out(i) = v((i - a + n) % n);
    return out;
}

}  // namespace

WindowVector tf_shift(const WindowVector& f, PhasePoint z, ShiftMode mode) {
    validate(f, "tf_shift");
    const PhaseGrid& g = f.grid;
    CVector shifted;
    if (mode == ShiftMode::Snapped) {
        shifted = roll(f.values, snapped_steps(g, z.x, "tf_shift"));
    } else {
        // Spectral fractional translation: multiply the centered spectrum
        // by e^{-2pi i nu x}; unit modulus, hence still unitary.
        CVector spec = centered_fft(f.values);
        for (int q = 0; q < g.n; ++q) spec(q) *= std::exp(-2.0 * kPi * kI * g.xi(q) * z.x);
        shifted = centered_ifft(spec) / static_cast<double>(g.n);
    }
    CVector out(g.n);
    const Complex phase = std::exp(-kPi * kI * z.x * z.xi);
    for (int i = 0; i < g.n; ++i)
        out(i) = phase * std::exp(2.0 * kPi * kI * z.xi * g.x(i)) * shifted(i);
    return {g, std::move(out)};
}

OperatorMatrix parity_conjugate(const OperatorMatrix& t) {
    const int n = t.grid.n;
    CMatrix out(n, n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) out(i, j) = t.kernel((n - i) % n, (n - j) % n);
    return {t.grid, std::move(out)};
}

OperatorMatrix translate_operator(const OperatorMatrix& t, PhasePoint z) {
    validate(t, "translate_operator");
    const PhaseGrid& g = t.grid;
    const int n = g.n;
    const int a = ((snapped_steps(g, z.x, "translate_operator") % n) + n) % n;
    CMatrix out(n, n);
    for (int j = 0; j < n; ++j) {
        const int js = (j - a + n) % n;
        for (int i = 0; i < n; ++i) {
            const int is = (i - a + n) % n;
            out(i, j) = std::exp(2.0 * kPi * kI * z.xi * (g.x(i) - g.x(j))) * t.kernel(is, js);
        }
    }
    return {g, std::move(out)};
}

OperatorMatrix rank_one(const WindowVector& g, const WindowVector& h) {
    require_same_grid(g.grid, h.grid, "rank_one");
    return {g.grid, g.values * h.values.adjoint()};
}

Complex trace(const OperatorMatrix& t) { return t.grid.h * t.kernel.trace(); }

OperatorMatrix adjoint(const OperatorMatrix& t) { return {t.grid, t.kernel.adjoint()}; }

std::vector<double> singular_values(const OperatorMatrix& t) {
    validate(t, "singular_values");
    Eigen::BDCSVD<CMatrix> svd(t.kernel);
    const auto& sv = svd.singularValues();
    std::vector<double> out(sv.size());
    for (Eigen::Index i = 0; i < sv.size(); ++i) out[i] = t.grid.h * sv(i);
    return out;
}

double schatten_from_singular_values(const std::vector<double>& sv, double p) {
    if (std::isinf(p)) return sv.empty() ? 0.0 : sv.front();
    if (!(p >= 1.0)) throw InvalidParameterError("schatten norm: p must be >= 1 or inf");
    double acc = 0.0;
    for (double s : sv) acc += std::pow(s, p);
    return std::pow(acc, 1.0 / p);
}

namespace {

SchattenValue make_schatten(std::vector<double> sv, double p) {
    SchattenValue out;
    out.p = p;
    out.value = schatten_from_singular_values(sv, p);
    const double floor = sv.empty() ? 0.0 : SchattenValue::kZeroThreshold * sv.front();
    out.numerical_rank = 0;
    for (double s : sv)
        if (s > floor) ++out.numerical_rank;
    out.singular_values = std::move(sv);
    return out;
}

}  // namespace

SchattenValue schatten_norm(const OperatorMatrix& t, double p) {
    if (!std::isinf(p) && !(p >= 1.0))
        throw InvalidParameterError("schatten_norm: p must be >= 1 or inf");
    return make_schatten(singular_values(t), p);
}

std::vector<SchattenValue> schatten_norms(const OperatorMatrix& t, const std::vector<double>& ps) {
    std::vector<double> sv = singular_values(t);
    std::vector<SchattenValue> out;
    out.reserve(ps.size());
    for (double p : ps) {
        if (!std::isinf(p) && !(p >= 1.0))
            throw InvalidParameterError("schatten_norms: p must be >= 1 or inf");
        out.push_back(make_schatten(sv, p));
    }
    return out;
}

}  // namespace qha
