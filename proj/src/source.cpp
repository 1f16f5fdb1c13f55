#include "biphoton/source.hpp"

#include <cmath>

namespace biphoton {

void SourceConfig::validate() const {
  if (!(attenuation > 0.0 && attenuation <= 1.0))
    throw std::invalid_argument("SourceConfig: attenuation must be in (0, 1]");
  if (!(gamma >= 0.0) || !std::isfinite(gamma))
    throw std::invalid_argument("SourceConfig: gamma must be >= 0");
  if (std::abs(delta) >= 1.0)
    throw std::invalid_argument("SourceConfig: |delta| must be < 1");
  if (!std::isfinite(chi_deg) || !std::isfinite(phi_deg))
    throw std::invalid_argument("SourceConfig: non-finite angle");
}

TwoPhotonState pump_to_state(double chi_deg, double phi_deg) {
  if (!(chi_deg >= 0.0 && chi_deg < 90.0))
    throw std::invalid_argument(
        "pump_to_state: chi must be in [0, 90) degrees (epsilon = tan chi "
        "diverges at 90; use state_from_epsilon with 1/eps instead)");
  return state_from_epsilon(std::tan(deg_to_rad(chi_deg)), phi_deg);
}

TwoPhotonState state_from_epsilon(double epsilon, double phi_deg) {
  if (!(epsilon >= 0.0) || !std::isfinite(epsilon))
    throw std::invalid_argument("state_from_epsilon: epsilon must be finite and >= 0");
  Complex vv = epsilon * std::exp(Complex(0.0, deg_to_rad(phi_deg)));
  return TwoPhotonState(1.0, 0.0, 0.0, vv);  // ctor normalizes by sqrt(1+eps^2)
}

double effective_epsilon(double chi_deg, double attenuation) {
  if (!(chi_deg >= 0.0 && chi_deg < 90.0))
    throw std::invalid_argument("effective_epsilon: chi must be in [0, 90)");
  if (!(attenuation > 0.0 && attenuation <= 1.0))
    throw std::invalid_argument("effective_epsilon: attenuation must be in (0, 1]");
  return std::sqrt(attenuation) * std::tan(deg_to_rad(chi_deg));
}

TwoPhotonState apply_crosstalk(const TwoPhotonState& state, Complex delta) {
  if (std::abs(delta) >= 1.0)
    throw std::invalid_argument("apply_crosstalk: |delta| must be < 1");
  // |V'V'> = (|VV> + delta|VH> + delta|HV> + delta^2|HH>) / (1+|delta|^2)
  double norm = 1.0 + std::norm(delta);
  Complex c = state.amp(3);
  Vector4c amps = state.amps();
  amps(3) = 0.0;
  amps(0) += c * delta * delta / norm;
  amps(1) += c * delta / norm;
  amps(2) += c * delta / norm;
  amps(3) += c / norm;
  return TwoPhotonState(amps);  // ctor renormalizes
}

DensityMatrix mixed_state(double gamma) {
  if (!(gamma >= 0.0) || !std::isfinite(gamma))
    throw std::invalid_argument("mixed_state: gamma must be >= 0");
  Matrix4c m = Matrix4c::Zero();
  m(0, 0) = 1.0 / (1.0 + gamma);
  m(3, 3) = gamma / (1.0 + gamma);
  return DensityMatrix(m);
}

TwoPhotonState source_state(const SourceConfig& config) {
  config.validate();
  double eps = effective_epsilon(config.chi_deg, config.attenuation);
  TwoPhotonState s = state_from_epsilon(eps, config.phi_deg);
  if (std::abs(config.delta) > 0.0) s = apply_crosstalk(s, config.delta);
  return s;
}

}  // namespace biphoton
