#pragma once

#include <vector>

#include "tistim/mesh.hpp"
#include "tistim/types.hpp"

namespace tistim {

/// Sign of the reactive part of the double-layer capacitor impedance.
/// `negative` is the usual -i/(wC); `positive` flips Im(Z) and leaves |Z|.
enum class CapacitorSign { negative, positive };

/// Contact resistance in series with a parallel double-layer R||C.
struct ElectrodeModel {
  double rc = 270.0;           // Ohm
  double rdl = 10000.0;        // Ohm
  double cdl = 1.0e-7;         // F
  double frequency_hz = 1000.0;
  CapacitorSign capacitor_sign = CapacitorSign::negative;

  void validate() const;
};

Complex impedance_of_f(const ElectrodeModel& m);

struct ContactPerturbation {
  ElectrodeModel model;
  Complex dz;  // Z(new) - Z(old)
};

/// Shifts the contact resistance by `d_rc` and reports the impedance change.
ContactPerturbation perturb_contact(const ElectrodeModel& m, double d_rc);

/// Electrode impedances ordered by electrode index.
struct ImpedanceVector {
  VectorXc z;  // Ohm

  Index size() const { return z.size(); }
  /// Z_l |e_l| (Ohm mm^2).
  VectorXc effective(const std::vector<ElectrodePatch>& patches) const;
  void validate() const;
};

ImpedanceVector impedances(const std::vector<ElectrodeModel>& models);

}  // namespace tistim
