#pragma once

#include <Eigen/Dense>
#include <complex>

namespace qha {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr Complex kI{0.0, 1.0};

/// A point z = (x, xi) in phase space.
struct PhasePoint {
    double x = 0.0;
    double xi = 0.0;
};

}  // namespace qha
