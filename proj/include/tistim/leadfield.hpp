#pragma once

#include <string>
#include <vector>

#include "tistim/materials.hpp"
#include "tistim/mesh.hpp"
#include "tistim/solver.hpp"
#include "tistim/types.hpp"

namespace tistim {

/// Electrode currents (mA) grouped into source pairs, each pair driven at
/// its own frequency.
struct CurrentPattern {
  VectorXc amplitudes;
  std::vector<std::vector<Index>> pairs;
  std::vector<double> pair_frequency_hz;

  /// Throws std::invalid_argument on Kirchhoff violations (overall and per
  /// pair), out-of-range or shared electrodes, or nonpositive frequencies.
  void validate() const;
  /// |f_2 - f_1| for a two-pair pattern, 0 for a single pair.
  double beat_hz() const;
  /// The pattern with every electrode outside pair k set to zero.
  VectorXc pair_currents(std::size_t k) const;
};

/// Block-sparse (3 M) x N map from nodal potentials to per-tet current
/// density: rows 3t..3t+2 hold -zeta_t grad(psi_h) for the nodes h of tet t.
/// zeta is converted to S/mm, so D u is in mA/mm^2 for u in mV.
SparseMatrixXc conductance_density(const TetMesh& mesh, const AdmittivityField& field);

/// L = D R; (3 M) x L complex, 1/mm^2.
struct LeadField {
  MatrixXc matrix;
  double frequency_hz = 0.0;

  Index num_tets() const { return matrix.rows() / 3; }
  Index num_electrodes() const { return matrix.cols(); }
};

LeadField lead_field(const SparseMatrixXc& D, const MatrixXc& R, double frequency_hz);

/// Per-tet complex current density (mA/mm^2).
struct VolumeCurrentField {
  Eigen::Matrix3Xcd J;
  std::string provenance;
};

/// J = L i; i must satisfy Kirchhoff's law.
VolumeCurrentField volume_current(const LeadField& L, const VectorXc& currents,
                                  const std::string& provenance = {});

/// Reshapes a (3 M)-vector into per-tet columns.
Eigen::Matrix3Xcd per_tet(const VectorXc& stacked);

/// Per-tet Frobenius norm of the 3 x L lead-field block.
Eigen::VectorXd lead_field_magnitudes(const LeadField& L);

}  // namespace tistim
