#include "biphoton/tomography.hpp"

#include <cmath>
#include <sstream>
#include <unsupported/Eigen/KroneckerProduct>

namespace biphoton {

namespace {
constexpr int kOffRow[6] = {0, 0, 0, 1, 1, 2};
constexpr int kOffCol[6] = {1, 2, 3, 2, 3, 3};
constexpr const char* kParamNames[16] = {
    "diag(HH)",  "diag(HV)",  "diag(VH)",  "diag(VV)",
    "Re(HH,HV)", "Re(HH,VH)", "Re(HH,VV)", "Re(HV,VH)", "Re(HV,VV)", "Re(VH,VV)",
    "Im(HH,HV)", "Im(HH,VH)", "Im(HH,VV)", "Im(HV,VH)", "Im(HV,VV)", "Im(VH,VV)"};
}  // namespace

Eigen::VectorXd real_parameters(const Matrix4c& m) {
  Eigen::VectorXd r(16);
  for (int i = 0; i < 4; ++i) r(i) = m(i, i).real();
  for (int j = 0; j < 6; ++j) {
    r(4 + j) = m(kOffRow[j], kOffCol[j]).real();
    r(10 + j) = m(kOffRow[j], kOffCol[j]).imag();
  }
  return r;
}

Matrix4c from_real_parameters(const Eigen::VectorXd& r) {
  Matrix4c m = Matrix4c::Zero();
  for (int i = 0; i < 4; ++i) m(i, i) = r(i);
  for (int j = 0; j < 6; ++j) {
    Complex e(r(4 + j), r(10 + j));
    m(kOffRow[j], kOffCol[j]) = e;
    m(kOffCol[j], kOffRow[j]) = std::conj(e);
  }
  return m;
}

Eigen::MatrixXd build_measurement_matrix(const std::vector<SettingPair>& settings) {
  if (settings.size() != 16)
    throw std::invalid_argument("build_measurement_matrix: need exactly 16 setting pairs");
  Eigen::MatrixXd m(16, 16);
  for (int k = 0; k < 16; ++k) {
    Vector4c ket = Eigen::kroneckerProduct(settings[k].first.resolve().vec(),
                                           settings[k].second.resolve().vec());
    Matrix4c pi = ket * ket.adjoint();
    // Tr(rho Pi) = sum_i rho_ii Pi_ii + sum_{i<j} 2(Re rho_ij Re Pi_ij + Im rho_ij Im Pi_ij)
    for (int i = 0; i < 4; ++i) m(k, i) = pi(i, i).real();
    for (int j = 0; j < 6; ++j) {
      m(k, 4 + j) = 2.0 * pi(kOffRow[j], kOffCol[j]).real();
      m(k, 10 + j) = 2.0 * pi(kOffRow[j], kOffCol[j]).imag();
    }
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
  double cond = svd.singularValues()(0) / svd.singularValues()(15);
  if (!(cond < 1e6)) {
    // report which parameter directions the scheme fails to resolve
    std::ostringstream msg;
    msg << "degenerate tomography scheme (condition number " << cond
        << "); unresolved directions:";
    Eigen::VectorXd null_dir = svd.matrixV().col(15).cwiseAbs();
    for (int j = 0; j < 16; ++j)
      if (null_dir(j) > 0.3) msg << " " << kParamNames[j];
    throw DegenerateSchemeError(msg.str());
  }
  return m;
}

TomographyScheme make_scheme(std::vector<SettingPair> settings) {
  TomographyScheme scheme;
  scheme.m_matrix = build_measurement_matrix(settings);
  scheme.settings = std::move(settings);
  return scheme;
}

TomographyScheme table1_scheme() {
  const char* names[16][2] = {{"H", "H"}, {"H", "V"}, {"V", "H"}, {"V", "V"},
                              {"H", "D"}, {"H", "L"}, {"D", "H"}, {"R", "H"},
                              {"D", "D"}, {"R", "D"}, {"R", "L"}, {"D", "R"},
                              {"D", "V"}, {"R", "V"}, {"V", "D"}, {"V", "L"}};
  std::vector<SettingPair> settings;
  for (auto& [a, b] : names)
    settings.emplace_back(AnalyzerSetting::named(a[0]), AnalyzerSetting::named(b[0]));
  TomographyScheme scheme = make_scheme(std::move(settings));
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(scheme.m_matrix);
  double cond = svd.singularValues()(0) / svd.singularValues()(15);
  if (!(cond < 100.0))
    throw DegenerateSchemeError("table1_scheme: unexpected conditioning");
  return scheme;
}

Eigen::VectorXd probability_vector(const std::vector<CountRecord>& counts,
                                   const TomographyScheme& scheme) {
  if (counts.size() != scheme.settings.size())
    throw SchemeMismatchError("probability_vector: expected " +
                              std::to_string(scheme.settings.size()) + " records, got " +
                              std::to_string(counts.size()));
  double dur0 = counts[0].duration_s;
  for (size_t k = 0; k < counts.size(); ++k) {
    if (!counts[k].setting_1.approx_equal(scheme.settings[k].first) ||
        !counts[k].setting_2.approx_equal(scheme.settings[k].second))
      throw SchemeMismatchError("probability_vector: record " + std::to_string(k) +
                                " has settings (" + counts[k].setting_1.label() + "," +
                                counts[k].setting_2.label() + "), scheme expects (" +
                                scheme.settings[k].first.label() + "," +
                                scheme.settings[k].second.label() + ")");
    if (std::abs(counts[k].duration_s - dur0) > 0.01 * dur0)
      throw InconsistentAcquisitionError(
          "probability_vector: acquisition durations differ by more than 1%");
    if (counts[k].coincidences < 0)
      throw std::invalid_argument("probability_vector: negative count");
  }
  double total = 0.0;
  for (int i : scheme.normalization_indices) total += counts[i].coincidences;
  if (total <= 0.0)
    throw EmptyDataError("probability_vector: normalization counts sum to zero");
  Eigen::VectorXd p(counts.size());
  for (size_t k = 0; k < counts.size(); ++k) p(k) = counts[k].coincidences / total;
  return p;
}

DensityMatrix reconstruct_from_probabilities(const Eigen::VectorXd& probabilities,
                                             const TomographyScheme& scheme) {
  Eigen::VectorXd r = scheme.m_matrix.partialPivLu().solve(probabilities);
  return DensityMatrix(from_real_parameters(r));
}

DensityMatrix reconstruct(const std::vector<CountRecord>& counts,
                          const TomographyScheme& scheme) {
  return reconstruct_from_probabilities(probability_vector(counts, scheme), scheme);
}

DensityMatrix project_to_physical(const DensityMatrix& rho) {
  auto pairs = eigendecompose(rho);
  double total = 0.0;
  for (auto& p : pairs) total += std::max(0.0, p.value);
  Matrix4c m = Matrix4c::Zero();
  for (auto& p : pairs)
    m += (std::max(0.0, p.value) / total) * (p.vector * p.vector.adjoint());
  return DensityMatrix(m);
}

int parameter_count(int dimension, bool pure) {
  if (dimension < 2) throw std::invalid_argument("parameter_count: dimension must be >= 2");
  return pure ? 2 * dimension - 2 : dimension * dimension - 1;
}

TomographyDiagnostics diagnose(const DensityMatrix& rho,
                               std::optional<TwoPhotonState> target) {
  TomographyDiagnostics d{};
  auto pairs = eigendecompose(rho);
  for (int i = 0; i < 4; ++i) d.eigenvalues[i] = pairs[i].value;
  d.purity = purity(rho);
  d.min_eigenvalue = pairs[3].value;
  d.is_physical = d.min_eigenvalue >= -1e-10;
  if (target) d.fidelity = fidelity_with_pure(rho, *target);
  return d;
}

}  // namespace biphoton
