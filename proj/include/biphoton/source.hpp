#pragma once

#include "biphoton/types.hpp"

namespace biphoton {

/// Physical source controls and imperfection knobs.
/// chi is the pump polarization angle from vertical; phi the entanglement
/// phase; delta the axis-crosstalk amplitude |V'> ~ |V> + delta|H>;
/// attenuation the pump power transmission seen by the second crystal;
/// gamma the weight of the |HH><HH| + gamma|VV><VV| mixed-state generator.
struct SourceConfig {
  double chi_deg = 45.0;
  double phi_deg = 0.0;
  Complex delta = 0.0;
  double attenuation = 1.0;
  double gamma = 0.0;

  void validate() const;
};

/// |psi> = (|HH> + eps e^{i phi} |VV>)/sqrt(1+eps^2) with eps = tan(chi).
TwoPhotonState pump_to_state(double chi_deg, double phi_deg);

TwoPhotonState state_from_epsilon(double epsilon, double phi_deg);

/// Amplitude ratio with crystal-1 absorption: sqrt(attenuation) * tan(chi).
double effective_epsilon(double chi_deg, double attenuation);

/// Replace the VV component by V'V' with |V'> = (|V> + delta|H>)/sqrt(1+|delta|^2),
/// then renormalize. Models non-orthogonal source axes; the state stays pure.
TwoPhotonState apply_crosstalk(const TwoPhotonState& state, Complex delta);

/// diag(1, 0, 0, gamma) / (1 + gamma).
DensityMatrix mixed_state(double gamma);

/// Full pipeline: pump angle -> attenuated epsilon -> crosstalk.
TwoPhotonState source_state(const SourceConfig& config);

}  // namespace biphoton
