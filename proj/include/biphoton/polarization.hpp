#pragma once

#include <utility>
#include <vector>

#include "biphoton/types.hpp"

namespace biphoton {

enum class WaveplateKind { HWP, QWP };

/// Linear polarization at theta degrees, with <theta|H> = cos(theta).
JonesVector linear_state(double theta_deg);

/// Named basis states H, V, D, A, L, R.
/// Handedness convention: L = (|H> + i|V>)/sqrt2, R = (|H> - i|V>)/sqrt2,
/// chosen so that a (|HH>+|VV>)/sqrt2 pair gives P(R,L) = 1/2.
JonesVector named_state(char name);
JonesVector named_state(const std::string& name);

/// Jones matrix of a waveplate with fast axis at angle_deg from horizontal.
/// HWP(t) = R(t) diag(1,-1) R(-t); QWP(t) = R(t) diag(1,i) R(-t).
/// Global phase is fixed by these forms and never asserted anywhere.
Matrix2c waveplate_operator(WaveplateKind kind, double angle_deg);

/// State transmitted with probability 1 through an HWP -> QWP -> PBS chain
/// (PBS transmits H): HWP(h)^dag QWP(q)^dag |H>.
JonesVector analyzer_projection(double qwp_deg, double hwp_deg);

DensityMatrix density_from_pure(const TwoPhotonState& state);

struct EigenPair {
  double value;
  Vector4c vector;
};

/// Spectral decomposition, eigenvalues sorted descending. The input need not
/// be positive; raw tomography output is accepted. Non-Hermitian input throws.
std::vector<EigenPair> eigendecompose(const Matrix4c& hermitian);
std::vector<EigenPair> eigendecompose(const DensityMatrix& rho);

double purity(const DensityMatrix& rho);
double fidelity_with_pure(const DensityMatrix& rho, const TwoPhotonState& target);

/// Entropy of entanglement in nats for |HH> + eps|VV> (normalized):
/// E(eps) = ln(1+eps^2) - eps^2 ln(eps^2) / (1+eps^2), with E(0) = 0.
double entanglement_entropy(double epsilon);

/// 0.5 * sum |eig(a - b)|.
double trace_distance(const DensityMatrix& a, const DensityMatrix& b);

}  // namespace biphoton
