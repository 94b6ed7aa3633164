#pragma once

#include <complex>
#include <numbers>

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>

namespace qrsp {

using Complex = std::complex<double>;
using Matrix3 = Eigen::Matrix3cd;
using Matrix9 = Eigen::Matrix<Complex, 9, 9>;
using Vector9 = Eigen::Matrix<Complex, 9, 1>;
using MatrixX = Eigen::MatrixXcd;

/// Cube root of unity, e^{2*pi*i/3}, built from trig constants so that
/// omega()^3 == 1 at machine precision.
inline Complex omega() {
  const double t = 2.0 * std::numbers::pi / 3.0;
  return {std::cos(t), std::sin(t)};
}

/// Tensor (Kronecker) product. Basis ordering for two qutrits is
/// |ab> -> index 3a+b, i.e. the left factor is the slow index.
template <typename DerivedA, typename DerivedB>
auto tensor(const Eigen::MatrixBase<DerivedA>& a,
            const Eigen::MatrixBase<DerivedB>& b) {
  return Eigen::kroneckerProduct(a, b).eval();
}

/// Conjugate transpose.
template <typename Derived>
auto dagger(const Eigen::MatrixBase<Derived>& a) {
  return a.adjoint().eval();
}

/// Largest absolute entry of a - b.
template <typename DerivedA, typename DerivedB>
double max_abs_diff(const Eigen::MatrixBase<DerivedA>& a,
                    const Eigen::MatrixBase<DerivedB>& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

/// Cyclic shift Y: |0>->|2>, |1>->|0>, |2>->|1>.
inline Matrix3 shift_y() {
  Matrix3 y = Matrix3::Zero();
  y(0, 1) = 1.0;
  y(1, 2) = 1.0;
  y(2, 0) = 1.0;
  return y;
}

/// Phase operator diag(1, w, w^2) with w = e^{2*pi*i/3}.
inline Matrix3 phase_z() {
  Matrix3 z = Matrix3::Zero();
  const Complex w = omega();
  z(0, 0) = 1.0;
  z(1, 1) = w;
  z(2, 2) = w * w;
  return z;
}

}  // namespace qrsp
