#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "tistim/cem_assembly.hpp"
#include "tistim/types.hpp"

namespace tistim {

enum class Preconditioner { diagonal, none };

struct SolveOptions {
  double rtol = 1e-10;
  int max_iter = 5000;
  Preconditioner preconditioner = Preconditioner::diagonal;
  int threads = 1;

  void validate() const;
};

struct SolveStats {
  int iterations = 0;
  double residual = 0.0;  // ||b - Ax|| / ||b||
};

template <typename Scalar>
struct PcgResult {
  Vector<Scalar> x;
  SolveStats stats;
};

/// Unconjugated dot product x^T y.
template <typename Scalar>
Scalar bilinear_dot(const Vector<Scalar>& x, const Vector<Scalar>& y) {
  return x.cwiseProduct(y).sum();
}

/// Preconditioned conjugate gradients for A = A^T. For complex symmetric
/// (non-Hermitian) A every inner product is the bilinear form x^T y, which
/// reduces to ordinary CG for real symmetric matrices. Residuals are measured
/// in the Euclidean norm. Throws NumericalError on breakdown or when
/// `max_iter` is exhausted.
template <typename Scalar>
PcgResult<Scalar> pcg_solve(const Eigen::SparseMatrix<Scalar>& A, const Vector<Scalar>& b,
                            const SolveOptions& opts) {
  opts.validate();
  const Index n = A.rows();
  if (A.cols() != n || b.size() != n) throw std::invalid_argument("pcg: dimension mismatch");
  if (!b.allFinite()) throw std::invalid_argument("pcg: right-hand side is not finite");

  PcgResult<Scalar> out{Vector<Scalar>::Zero(n), {}};
  const double bnorm = b.norm();
  if (bnorm == 0.0) return out;

  Vector<Scalar> inv_diag = Vector<Scalar>::Ones(n);
  if (opts.preconditioner == Preconditioner::diagonal) {
    const Vector<Scalar> d = A.diagonal();
    for (Index i = 0; i < n; ++i) {
      if (d(i) == Scalar(0)) throw NumericalError("pcg: zero diagonal entry " + std::to_string(i));
      inv_diag(i) = Scalar(1) / d(i);
    }
  }

  Vector<Scalar>& x = out.x;
  Vector<Scalar> r = b;
  Vector<Scalar> z = inv_diag.cwiseProduct(r);
  Vector<Scalar> p = z;
  Vector<Scalar> q(n);
  Scalar rho = bilinear_dot(r, z);

  for (int it = 1; it <= opts.max_iter; ++it) {
    q.noalias() = A * p;
    const Scalar pq = bilinear_dot(p, q);
    if (pq == Scalar(0) || !std::isfinite(std::abs(pq))) {
      throw NumericalError("pcg: breakdown (p^T A p = 0) at iteration " + std::to_string(it));
    }
    const Scalar alpha = rho / pq;
    x += alpha * p;
    r -= alpha * q;
    const double res = r.norm() / bnorm;
    out.stats = {it, res};
    if (res <= opts.rtol) return out;
    z = inv_diag.cwiseProduct(r);
    const Scalar rho_next = bilinear_dot(r, z);
    if (rho_next == Scalar(0)) throw NumericalError("pcg: breakdown (r^T z = 0) at iteration " + std::to_string(it));
    p = z + (rho_next / rho) * p;
    rho = rho_next;
  }
  throw NumericalError("pcg: no convergence after " + std::to_string(opts.max_iter) +
                       " iterations (relative residual " + std::to_string(out.stats.residual) + ")");
}

/// Solves A X = RHS column by column; columns may run on `opts.threads`
/// threads and are written to fixed slots, so results do not depend on the
/// thread count.
MatrixXc solve_columns(const SparseMatrixXc& A, const MatrixXc& rhs, const SolveOptions& opts,
                       std::vector<SolveStats>* stats = nullptr);

/// R = T S_g^{-1}, T = A^{-1} B, S = C - B^T T, S_g = S + g 1 1^T.
///
/// The CEM block system annihilates (1; 1), so S 1 = 0. The rank-one term
/// with g = `CemSystem::ground_scale` selects the solution with sum(U) = 0 for
/// every current pattern with sum(i) = 0 and leaves R i unchanged for them.
struct ResistanceMatrix {
  MatrixXc R;  // N x L, Ohm
  MatrixXc T;  // N x L
  MatrixXc S;  // L x L, 1/Ohm
  MatrixXc S_ground_inverse;  // S_g^{-1}, Ohm
  double ground_scale = 0.0;
  std::vector<SolveStats> stats;  // one per T column
  std::string fingerprint;        // of the CemSystem it was built from
};

ResistanceMatrix resistance_matrix(const CemSystem& sys, const SolveOptions& opts);

struct BlockSolution {
  VectorXc u;  // nodal potentials
  VectorXc U;  // electrode voltages, sum zero
};

/// Monolithic dense LU of the block system bordered by the ground row
/// sum(U) = 0. Guarded to N <= 20000.
BlockSolution dense_direct_oracle(const CemSystem& sys, const VectorXc& currents);

/// U = C^{-1}(i + B^T R i), shifted to zero mean.
VectorXc electrode_voltages(const ResistanceMatrix& rm, const CemSystem& sys, const VectorXc& currents);

/// Rejects patterns with |sum(i)| > 1e-12 ||i||.
void check_kirchhoff(const VectorXc& currents, const std::string& what = "current pattern");

/// Electrode-space map i -> U restricted to zero-sum patterns:
/// P C^{-1}(I + B^T R) P with P = I - 1 1^T / L.
MatrixXc electrode_transfer(const ResistanceMatrix& rm, const CemSystem& sys);

/// Centering projector I - 1 1^T / L.
MatrixXc centering_projector(Index l);

}  // namespace tistim
