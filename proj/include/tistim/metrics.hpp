#pragma once

#include <string>

#include "tistim/types.hpp"

namespace tistim {

/// Amplitude convention: 10^(dB/20).
double delta_from_db(double db);

inline constexpr double kDefaultDbFloor = -200.0;

/// 20 log10(x / ref), never below `floor` (x = 0 maps to the floor).
double to_db(double x, double ref, double floor = kDefaultDbFloor);

/// |g1 - g2| / max(|g2|, delta max|g2|), delta = 10^(dB/20), dB < 0.
Eigen::VectorXd rel_diff(const Eigen::VectorXd& g1, const Eigen::VectorXd& g2, double db);

/// | |g1| - |g2| | per entry.
Eigen::VectorXd abs_diff(const Eigen::VectorXd& g1, const Eigen::VectorXd& g2);

/// Per-tet Euclidean magnitudes of a complex vector field.
Eigen::VectorXd magnitudes(const Eigen::Matrix3Xcd& field);

struct DiffReport {
  Eigen::VectorXd rel;
  Eigen::VectorXd abs;
  double db = 0.0;
  double delta = 0.0;
  double max_rel = 0.0;
  double max_abs = 0.0;
  double mean_rel = 0.0;
  double max_g1 = 0.0;
  double max_g2 = 0.0;
  double norm_g1 = 0.0;
  double norm_g2 = 0.0;
};

/// Both metrics on already reduced per-tet magnitudes.
DiffReport compare_magnitudes(const Eigen::VectorXd& g1, const Eigen::VectorXd& g2, double db);

/// CSV `tet,rel_diff,abs_diff`.
std::string diff_report_csv(const DiffReport& report);

}  // namespace tistim
