#pragma once

#include <string>
#include <vector>

#include "tistim/cem_assembly.hpp"
#include "tistim/solver.hpp"
#include "tistim/types.hpp"

namespace tistim {

// Derivatives with respect to the impedance Z_l of one electrode. A, B and C
// depend on Z only through 1/Z_l, so every derivative below is the complex
// derivative and agrees with the directional derivative along real dRc.

/// -M̃(l) / (Z_l^2 |e_l|); supported on the nodes of patch l.
SparseMatrixXc dA_dZ(const CemSystem& sys, Index l);
/// -B̃(:,l) / Z_l^2 in column l, zero elsewhere.
SparseMatrixXc dB_dZ(const CemSystem& sys, Index l);
/// Diagonal of dC/dZ_l: -1/Z_l^2 at entry l.
VectorXc dC_dZ(const CemSystem& sys, Index l);

/// dS/dZ_l = dC - dB^T T - T^T dB + T^T dA T, from the base transfer matrix.
MatrixXc dS_dZ(const ResistanceMatrix& rm, const CemSystem& sys, Index l);

/// How A^{-1} (dA/dZ_l) R is obtained: by solving against the patch-node
/// columns of A (rank of dA) or against the L columns of dA R.
enum class DerivativeRoute { automatic, patch_columns, electrode_columns };

/// dR/dZ_l = -A^{-1} dA R + A^{-1} dB S_g^{-1} - R dS S_g^{-1}.
MatrixXc dR_dZ(const ResistanceMatrix& rm, const CemSystem& sys, Index l, const SolveOptions& opts,
               DerivativeRoute route = DerivativeRoute::automatic);

struct ImpedanceJacobian {
  std::vector<Index> electrodes;
  std::vector<MatrixXc> dR;  // dR/dZ_l per selected electrode
  VectorXc base_z;
  std::string fingerprint;
};

ImpedanceJacobian impedance_jacobian(const ResistanceMatrix& rm, const CemSystem& sys,
                                     const std::vector<Index>& electrodes, const SolveOptions& opts);

/// R + sum_l dR/dZ_l dZ_l, with dz aligned to `jac.electrodes`. Entries with
/// dz = 0 contribute nothing, so dz = 0 returns R unchanged.
MatrixXc linearized_R(const ResistanceMatrix& rm, const ImpedanceJacobian& jac, const VectorXc& dz);

}  // namespace tistim
