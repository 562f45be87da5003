#include "qha/fft.hpp"

#include <unsupported/Eigen/FFT>

namespace qha {

namespace {

Eigen::FFT<double>& engine() {
    thread_local Eigen::FFT<double> fft;
    return fft;
}

// Swap halves of an even-length vector (index j <-> j + N/2 mod N).
// Self-inverse for even N, so it serves as both shift and unshift.
CVector half_rotate(const CVector& v) {
    const Eigen::Index n = v.size();
    CVector out(n);
    out.head(n / 2) = v.tail(n / 2);
    out.tail(n / 2) = v.head(n / 2);
    return out;
}

}  // namespace

CVector centered_fft(const CVector& v) {
    CVector tmp = half_rotate(v), out(v.size());
    engine().fwd(out, tmp);
    return half_rotate(out);
}

CVector centered_ifft(const CVector& v) {
    CVector tmp = half_rotate(v), out(v.size());
    engine().inv(out, tmp);
    return half_rotate(out) * static_cast<double>(v.size());
}

namespace {

template <typename Fn>
CMatrix apply_axis(const CMatrix& m, Axis axis, Fn fn) {
    CMatrix out(m.rows(), m.cols());
    if (axis == Axis::Rows) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) out.col(j) = fn(CVector(m.col(j)));
    } else {
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            out.row(i) = fn(CVector(m.row(i).transpose())).transpose();
    }
    return out;
}

}  // namespace

CMatrix centered_fft(const CMatrix& m, Axis axis) {
    return apply_axis(m, axis, [](const CVector& v) { return centered_fft(v); });
}

CMatrix centered_ifft(const CMatrix& m, Axis axis) {
    return apply_axis(m, axis, [](const CVector& v) { return centered_ifft(v); });
}

CVector upsample2(const CVector& v) {
    const Eigen::Index n = v.size();
    CVector spec(n), padded = CVector::Zero(2 * n);
    CVector tmp = half_rotate(v);
    engine().fwd(spec, tmp);  // standard-order spectrum of the unshifted signal
    padded.head(n / 2) = spec.head(n / 2);
    padded(n / 2) = spec(n / 2) * 0.5;
    padded(2 * n - n / 2) = spec(n / 2) * 0.5;
    padded.segment(2 * n - n / 2 + 1, n / 2 - 1) = spec.segment(n / 2 + 1, n / 2 - 1);
    CVector out(2 * n);
    engine().inv(out, padded);
    return half_rotate(out) * 2.0;
}

CMatrix upsample2(const CMatrix& m, Axis axis) {
    CMatrix out(axis == Axis::Rows ? 2 * m.rows() : m.rows(),
                axis == Axis::Rows ? m.cols() : 2 * m.cols());
    if (axis == Axis::Rows) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) out.col(j) = upsample2(CVector(m.col(j)));
    } else {
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            out.row(i) = upsample2(CVector(m.row(i).transpose())).transpose();
    }
    return out;
}

}  // namespace qha
