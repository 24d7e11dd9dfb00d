#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "tistim/mesh.hpp"
#include "tistim/types.hpp"

namespace tistim {

inline constexpr double kVacuumPermittivity = 8.854e-12;  // F/m

/// Compartment ids used by the built-in table.
namespace tissue {
inline constexpr int skin = 1;
inline constexpr int skull = 2;
inline constexpr int csf = 3;
inline constexpr int grey_matter = 4;
inline constexpr int white_matter = 5;
}  // namespace tissue

struct TissueSample {
  double frequency_hz;
  double sigma;  // S/m
  double eps_r;
};

/// Conductivity and relative permittivity per compartment, sampled at
/// strictly increasing frequencies.
class TissueTable {
 public:
  /// Five-compartment skin/skull/CSF/GM/WM table at 100 Hz .. 100 kHz.
  static TissueTable builtin();
  /// CSV with header `compartment,frequency_hz,sigma,eps_r`.
  static TissueTable from_csv(std::istream& is);

  void add(int compartment, TissueSample sample);
  bool contains(int compartment) const { return rows_.count(compartment) != 0; }
  const std::vector<TissueSample>& samples(int compartment) const;
  std::vector<int> compartments() const;

  /// (sigma, eps_r) at `f`, log-log interpolated between samples.
  std::pair<double, double> sample_at(int compartment, double frequency_hz) const;

  void write_csv(std::ostream& os) const;

 private:
  std::map<int, std::vector<TissueSample>> rows_;
};

/// Name of a built-in compartment ("skin", "skull", "csf", "gm", "wm").
int compartment_from_name(const std::string& name);

/// sigma + i 2 pi f eps0 eps_r in S/m; the imaginary part is exactly zero when
/// `with_permittivity` is false.
Complex admittivity_at(const TissueTable& table, int compartment, double frequency_hz,
                       bool with_permittivity);

struct AdmittivityField {
  double frequency_hz = 0.0;
  double omega = 0.0;  // rad/s
  bool with_permittivity = true;
  VectorXc zeta;       // S/m, one value per tet
};

AdmittivityField build_admittivity_field(const TetMesh& mesh, const TissueTable& table,
                                         double frequency_hz, bool with_permittivity);

}  // namespace tistim
