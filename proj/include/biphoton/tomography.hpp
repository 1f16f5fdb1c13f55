#pragma once

#include <array>
#include <optional>
#include <vector>

#include "biphoton/measurement.hpp"

namespace biphoton {

/// Real parameterization of a Hermitian 4x4 matrix, 16 entries:
///   r[0..3]   diagonal (HH,HH) .. (VV,VV)
///   r[4..9]   Re of off-diagonals (0,1),(0,2),(0,3),(1,2),(1,3),(2,3)
///   r[10..15] Im of the same off-diagonals
/// Hermiticity is structural in this layout.
Eigen::VectorXd real_parameters(const Matrix4c& hermitian);
Matrix4c from_real_parameters(const Eigen::VectorXd& r);

/// 16 ordered analyzer setting pairs plus the measurement matrix M with
/// P_k = sum_j M(k,j) r_j for the parameterization above.
struct TomographyScheme {
  std::vector<SettingPair> settings;
  Eigen::MatrixXd m_matrix;
  std::array<int, 4> normalization_indices{0, 1, 2, 3};
};

/// The published 16-setting scheme:
/// HH HV VH VV HD HL DH RH DD RD RL DR DV RV VD VL.
/// The first four pairs form a complete basis set and fix the normalization.
TomographyScheme table1_scheme();

TomographyScheme make_scheme(std::vector<SettingPair> settings);

/// Row k holds the coefficients of P_k = Tr(rho Pi_k) in the real
/// parameterization. Throws DegenerateSchemeError (naming the deficient
/// parameter directions) when the condition number exceeds 1e6.
Eigen::MatrixXd build_measurement_matrix(const std::vector<SettingPair>& settings);

/// Counts normalized by the sum over normalization_indices. Records must
/// match the scheme's settings (by label, not position alone) and share a
/// common acquisition duration to within 1%.
Eigen::VectorXd probability_vector(const std::vector<CountRecord>& counts,
                                   const TomographyScheme& scheme);

/// Linear-inversion reconstruction: unstack(M^-1 P). Hermitian and trace-one
/// by construction; positivity is not enforced.
DensityMatrix reconstruct(const std::vector<CountRecord>& counts,
                          const TomographyScheme& scheme);
DensityMatrix reconstruct_from_probabilities(const Eigen::VectorXd& probabilities,
                                             const TomographyScheme& scheme);

/// Clip negative eigenvalues to zero and renormalize the trace. Idempotent.
DensityMatrix project_to_physical(const DensityMatrix& rho);

/// 2d-2 parameters for a pure state, d^2-1 for a general mixed state.
int parameter_count(int dimension, bool pure);

struct TomographyDiagnostics {
  std::array<double, 4> eigenvalues;  // descending
  double purity;
  double min_eigenvalue;
  bool is_physical;
  std::optional<double> fidelity;  // vs an (eps, phi) target, when given
};

TomographyDiagnostics diagnose(const DensityMatrix& rho,
                               std::optional<TwoPhotonState> target = std::nullopt);

}  // namespace biphoton
