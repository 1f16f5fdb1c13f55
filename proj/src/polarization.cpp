#include "biphoton/polarization.hpp"

#include <algorithm>
#include <cmath>

namespace biphoton {

JonesVector linear_state(double theta_deg) {
  double t = deg_to_rad(theta_deg);
  return JonesVector(std::cos(t), std::sin(t));
}

JonesVector named_state(char name) {
  const double s = 1.0 / std::sqrt(2.0);
  const Complex i(0.0, 1.0);
  switch (name) {
    case 'H': return JonesVector(1.0, 0.0);
    case 'V': return JonesVector(0.0, 1.0);
    case 'D': return JonesVector(s, s);
    case 'A': return JonesVector(s, -s);
    case 'L': return JonesVector(s, i * s);
    case 'R': return JonesVector(s, -i * s);
    default:
      throw std::invalid_argument(std::string("unknown polarization name: ") + name);
  }
}

JonesVector named_state(const std::string& name) {
  if (name.size() != 1) throw std::invalid_argument("unknown polarization name: " + name);
  return named_state(name[0]);
}

static Matrix2c rotation(double t) {
  Matrix2c r;
  r << std::cos(t), -std::sin(t), std::sin(t), std::cos(t);
  return r;
}

Matrix2c waveplate_operator(WaveplateKind kind, double angle_deg) {
  double t = deg_to_rad(angle_deg);
  Matrix2c retarder = Matrix2c::Zero();
  retarder(0, 0) = 1.0;
  retarder(1, 1) = (kind == WaveplateKind::HWP) ? Complex(-1.0, 0.0) : Complex(0.0, 1.0);
  return rotation(t) * retarder * rotation(-t);
}

JonesVector analyzer_projection(double qwp_deg, double hwp_deg) {
  Matrix2c q = waveplate_operator(WaveplateKind::QWP, qwp_deg);
  Matrix2c h = waveplate_operator(WaveplateKind::HWP, hwp_deg);
  Vector2c psi = h.adjoint() * (q.adjoint() * Vector2c(1.0, 0.0));
  return JonesVector(psi);
}

DensityMatrix density_from_pure(const TwoPhotonState& state) {
  Matrix4c m = state.amps() * state.amps().adjoint();
  return DensityMatrix(m);
}

std::vector<EigenPair> eigendecompose(const Matrix4c& hermitian) {
  if ((hermitian - hermitian.adjoint()).cwiseAbs().maxCoeff() > 1e-10)
    throw std::invalid_argument("eigendecompose: matrix is not Hermitian");
  Eigen::SelfAdjointEigenSolver<Matrix4c> es(hermitian);
  std::vector<EigenPair> out;
  for (int i = 3; i >= 0; --i)
    out.push_back({es.eigenvalues()(i), es.eigenvectors().col(i)});
  return out;
}

std::vector<EigenPair> eigendecompose(const DensityMatrix& rho) {
  return eigendecompose(rho.mat());
}

double purity(const DensityMatrix& rho) {
  return (rho.mat() * rho.mat()).trace().real();
}

double fidelity_with_pure(const DensityMatrix& rho, const TwoPhotonState& target) {
  Complex f = target.amps().adjoint() * rho.mat() * target.amps();
  if (std::abs(f.imag()) > 1e-8)
    throw std::runtime_error("fidelity_with_pure: non-real expectation value");
  return f.real();
}

double entanglement_entropy(double epsilon) {
  if (epsilon < 0.0 || !std::isfinite(epsilon))
    throw std::invalid_argument("entanglement_entropy: epsilon must be >= 0");
  if (epsilon == 0.0) return 0.0;
  double e2 = epsilon * epsilon;
  return std::log(1.0 + e2) - e2 * std::log(e2) / (1.0 + e2);
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
  Eigen::SelfAdjointEigenSolver<Matrix4c> es(a.mat() - b.mat(), Eigen::EigenvaluesOnly);
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

}  // namespace biphoton
