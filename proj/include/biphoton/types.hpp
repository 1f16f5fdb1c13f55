#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>

// Basis order for all two-photon objects: (HH, HV, VH, VV).
// Angles are degrees at every public interface, radians internally.

namespace biphoton {

using Complex = std::complex<double>;
using Matrix2c = Eigen::Matrix2cd;
using Matrix4c = Eigen::Matrix4cd;
using Vector2c = Eigen::Vector2cd;
using Vector4c = Eigen::Vector4cd;

inline constexpr double kPi = 3.14159265358979323846;

inline double deg_to_rad(double deg) { return deg * kPi / 180.0; }
inline double rad_to_deg(double rad) { return rad * 180.0 / kPi; }

struct DegenerateSchemeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SchemeMismatchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct EmptyDataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InconsistentAcquisitionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UndefinedVisibilityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DegenerateEntanglementError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Normalized single-photon polarization state (Jones vector).
class JonesVector {
 public:
  JonesVector(Complex amp_h, Complex amp_v) : v_(amp_h, amp_v) {
    double n = v_.norm();
    if (n < 1e-15) throw std::invalid_argument("JonesVector: zero amplitude");
    v_ /= n;
  }
  explicit JonesVector(const Vector2c& v) : JonesVector(v(0), v(1)) {}

  Complex amp_h() const { return v_(0); }
  Complex amp_v() const { return v_(1); }
  const Vector2c& vec() const { return v_; }

 private:
  Vector2c v_;
};

/// Normalized two-photon polarization state, amplitudes over (HH, HV, VH, VV).
class TwoPhotonState {
 public:
  explicit TwoPhotonState(const Vector4c& amps) : v_(amps) {
    double n = v_.norm();
    if (n < 1e-15) throw std::invalid_argument("TwoPhotonState: zero amplitude");
    v_ /= n;
  }
  TwoPhotonState(Complex hh, Complex hv, Complex vh, Complex vv)
      : TwoPhotonState(Vector4c(hh, hv, vh, vv)) {}

  const Vector4c& amps() const { return v_; }
  Complex amp(int i) const { return v_(i); }

 private:
  Vector4c v_;
};

/// 4x4 Hermitian trace-one matrix over (HH, HV, VH, VV).
///
/// Positivity is deliberately not an invariant: raw linear-inversion
/// tomography can produce small negative eigenvalues. Use is_physical()
/// to query and project_to_physical() to clean up.
class DensityMatrix {
 public:
  explicit DensityMatrix(const Matrix4c& m) : m_(m) {
    if ((m_ - m_.adjoint()).cwiseAbs().maxCoeff() > 1e-10)
      throw std::invalid_argument("DensityMatrix: not Hermitian");
    if (std::abs(m_.trace().real() - 1.0) > 1e-10 ||
        std::abs(m_.trace().imag()) > 1e-10)
      throw std::invalid_argument("DensityMatrix: trace != 1");
    // symmetrize away float-level asymmetry
    m_ = 0.5 * (m_ + m_.adjoint().eval());
  }

  const Matrix4c& mat() const { return m_; }
  Complex elem(int i, int j) const { return m_(i, j); }

  double min_eigenvalue() const {
    Eigen::SelfAdjointEigenSolver<Matrix4c> es(m_, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
  }
  bool is_physical(double tol = 1e-10) const {
    return min_eigenvalue() >= -tol;
  }

 private:
  Matrix4c m_;
};

}  // namespace biphoton
