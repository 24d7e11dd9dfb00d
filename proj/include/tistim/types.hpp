#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>
#include <Eigen/Sparse>

namespace tistim {

using Complex = std::complex<double>;
using Index = Eigen::Index;

using Vec3 = Eigen::Vector3d;
using VectorXc = Eigen::VectorXcd;
using MatrixXc = Eigen::MatrixXcd;
using SparseMatrixXc = Eigen::SparseMatrix<Complex>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Raised when an iterative or direct solve cannot produce a trustworthy
/// answer (non-convergence, breakdown, singular factor, degenerate cell).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// File-system or parse failures on the documented text formats.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Precondition and configuration violations use std::invalid_argument.

}  // namespace tistim
