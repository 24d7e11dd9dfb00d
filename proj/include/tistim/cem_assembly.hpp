#pragma once

#include <string>
#include <vector>

#include "tistim/electrode.hpp"
#include "tistim/materials.hpp"
#include "tistim/mesh.hpp"
#include "tistim/types.hpp"

namespace tistim {

/// S/m -> S/mm; coordinates are in millimetres.
inline constexpr double kSiemensPerMetreToPerMm = 1e-3;

/// Discrete complete-electrode-model system
///
///   [ A   -B ] [u]   [0]
///   [-B^T  C ] [U] = [i]
///
/// together with the impedance-independent factors
///
///   A = Ã + sum_l M̃(l) / (Z_l |e_l|),   B = B̃ diag(1/Z),   C = diag(1/Z).
///
/// A, B and C are in 1/Ohm, M̃(l) in mm^2, B̃ is dimensionless.
struct CemSystem {
  SparseMatrixXc A;
  SparseMatrixXc B;
  VectorXc C;  // diagonal entries

  SparseMatrixXc stiffness;                   // Ã
  std::vector<SparseMatrixXc> boundary_mass;  // M̃(l)
  SparseMatrixXc mean_weights;                // B̃

  Eigen::VectorXd areas;                   // |e_l|, mm^2
  VectorXc z;                              // Z_l, Ohm
  std::vector<std::vector<int>> patch_nodes;
  /// Rank-one grounding weight for the Schur complement (1/Ohm). Depends on
  /// the mesh and admittivity only, never on Z.
  double ground_scale = 0.0;

  std::string factor_fingerprint;  // mesh + admittivity + patches
  std::string fingerprint;         // ... + Z

  Index num_nodes() const { return A.rows(); }
  Index num_electrodes() const { return B.cols(); }
};

CemSystem assemble(const TetMesh& mesh, const AdmittivityField& field,
                   const std::vector<ElectrodePatch>& patches, const ImpedanceVector& z);

/// Rebuilds A, B, C for new impedances from the stored factors.
CemSystem with_impedances(const CemSystem& sys, const VectorXc& z);

/// max|A - Ã - sum_l M̃(l)/(Z_l|e_l|)| / max|A|.
double verify_factorization(const CemSystem& sys, const VectorXc& z);

double max_abs(const SparseMatrixXc& m);

}  // namespace tistim
