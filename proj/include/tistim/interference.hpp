#pragma once

#include <array>
#include <string>
#include <vector>

#include "tistim/leadfield.hpp"
#include "tistim/mesh.hpp"
#include "tistim/types.hpp"

namespace tistim {

/// w_k(t) = A_k sin(2 pi f_k t + theta_k).
struct SinusoidPair {
  double a1 = 1.0, a2 = 1.0;
  double f1 = 1000.0, f2 = 1010.0;  // Hz
  double theta1 = 0.0, theta2 = 0.0;
};

enum class EnvelopeSign { sum, diff };

/// Envelope of |w_1 +- w_2|:
///   sqrt(A1^2 + A2^2 +- 2 A1 A2 cos(2 pi (f1 - f2) t + (theta1 - theta2))).
double analytic_envelope(const SinusoidPair& p, double t, EnvelopeSign sign);

/// CSV `t,w1,w2,sum,diff,envelope_sum,envelope_diff` over [0, duration].
std::string envelope_demo_csv(const SinusoidPair& p, double duration, int samples);

/// How complex per-tet vectors become real vectors before the envelope.
enum class EnvelopeReduction {
  /// (|Jx|, |Jy|, |Jz|).
  component_modulus,
  /// Re(exp(-i phi) J) with phi = arg(J^T J)/2, the major axis of the
  /// polarisation ellipse; exact for real (in-phase) fields.
  principal_axis,
};

Eigen::Matrix3Xd reduce_to_real(const Eigen::Matrix3Xcd& J, EnvelopeReduction reduction);

/// | |a + b| - |a - b| | per column.
Eigen::VectorXd envelope_magnitude(const Eigen::Matrix3Xd& a, const Eigen::Matrix3Xd& b);

struct EnvelopeField {
  Eigen::VectorXd I;  // mA/mm^2
  std::string provenance;
};

EnvelopeField interference_field(const VolumeCurrentField& j1, const VolumeCurrentField& j2,
                                 EnvelopeReduction reduction = EnvelopeReduction::component_modulus);

/// Two electrode pairs, each with its own lead field; `pair` lists the
/// (sink, source) electrode indices.
struct SteeringMontage {
  const TetMesh* mesh = nullptr;
  const LeadField* left_field = nullptr;
  const LeadField* right_field = nullptr;
  std::array<Index, 2> left_pair{};
  std::array<Index, 2> right_pair{};
  Vec3 left_center = Vec3::Zero();
  Vec3 right_center = Vec3::Zero();
  EnvelopeReduction reduction = EnvelopeReduction::component_modulus;
};

struct SteeringStep {
  double left_ma = 0.0;
  double right_ma = 0.0;
  EnvelopeField field;
  Index argmax = -1;  // -1 when the field vanishes
  Vec3 location = Vec3::Zero();
  double max_value = 0.0;
  double axis_position = 0.0;  // signed distance along the montage axis
};

struct SteeringScan {
  std::vector<SteeringStep> steps;
  Vec3 axis = Vec3::Zero();  // left centre -> right centre, unit
  Vec3 midpoint = Vec3::Zero();
  /// Argmax moves toward the right pair as the left pair gets stronger.
  bool monotone = false;
};

/// Splits `total_ma` as (a, total - a) between the left and right pairs for
/// each a in `left_splits` (0 <= a <= total).
SteeringScan steering_scan(const SteeringMontage& montage, double total_ma, const std::vector<double>& left_splits);

/// CSV `split_left_ma,split_right_ma,argmax_tet,x,y,z,max_value`.
std::string steering_csv(const SteeringScan& scan);

}  // namespace tistim
