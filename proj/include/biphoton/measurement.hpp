#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "biphoton/polarization.hpp"
#include "biphoton/types.hpp"

namespace biphoton {

/// One arm's analyzer: a named basis state, a linear polarizer angle, or a
/// QWP/HWP waveplate pair. Literal forms: "H".."R", "lin:<deg>", "wp:<q>/<h>".
class AnalyzerSetting {
 public:
  struct Linear {
    double theta_deg;
  };
  struct Waveplates {
    double qwp_deg;
    double hwp_deg;
  };

  static AnalyzerSetting named(char name);
  static AnalyzerSetting linear(double theta_deg);
  static AnalyzerSetting waveplates(double qwp_deg, double hwp_deg);

  JonesVector resolve() const;
  std::string label() const;
  static AnalyzerSetting parse(const std::string& literal);

  bool is_linear() const { return std::holds_alternative<Linear>(v_); }
  /// Linear angle in degrees; named H/V/D/A map to 0/90/45/-45. Circular
  /// settings throw.
  double linear_angle_deg() const;

  bool approx_equal(const AnalyzerSetting& other, double tol_deg = 1e-9) const;

 private:
  explicit AnalyzerSetting(std::variant<char, Linear, Waveplates> v) : v_(std::move(v)) {}
  std::variant<char, Linear, Waveplates> v_;
};

using SettingPair = std::pair<AnalyzerSetting, AnalyzerSetting>;

struct NoiseConfig {
  double singles_rate_1 = 0.0;  // counts/s
  double singles_rate_2 = 0.0;  // counts/s
  double coincidence_window = 0.0;  // s
  double acquisition_time = 1.0;    // s
  std::uint64_t rng_seed = 0;

  void validate() const;
};

struct CountRecord {
  AnalyzerSetting setting_1;
  AnalyzerSetting setting_2;
  long long coincidences = 0;
  double duration_s = 1.0;
};

/// Tr(rho Pi(s1) x Pi(s2)) with Pi the rank-1 projector of each setting.
double coincidence_probability(const DensityMatrix& rho, const AnalyzerSetting& s1,
                               const AnalyzerSetting& s2);

/// Closed form of the coincidence probability for linear analyzers on the
/// pure state |HH> + eps e^{i phi}|VV>:
///   |cos t1 cos t2 + eps e^{i phi} sin t1 sin t2|^2 / (1 + eps^2).
/// Independent of the projector path; kept as a cross-check oracle.
double linear_pair_probability(double epsilon, double phi_deg, double theta1_deg,
                               double theta2_deg);

/// Analyzer angle theta2 zeroing the coincidence rate for the phi = 0 pure
/// state: tan(theta2) = -cot(theta1)/eps, principal branch (-90, 90].
double minima_angle(double epsilon, double theta1_deg);

struct FringeSample {
  double theta2_deg;
  double probability;
};

/// Uniform sweep of the arm-2 linear angle over [0, 180) with arm 1 fixed.
std::vector<FringeSample> fringe(const DensityMatrix& rho, const AnalyzerSetting& fixed,
                                 int n_points);

/// (max - min) / (max + min); throws UndefinedVisibilityError on an all-zero
/// fringe.
double visibility(const std::vector<FringeSample>& samples);

/// singles1 * singles2 * window.
double accidental_rate(double singles1, double singles2, double window_s);

/// Poisson counts per setting pair with mean
///   pairs_per_setting * P_k + accidental_rate * acquisition_time.
/// Deterministic per (seed, inputs); accidentals are added, never subtracted,
/// unless subtract_accidentals is set.
std::vector<CountRecord> simulate_counts(const DensityMatrix& rho,
                                         const std::vector<SettingPair>& settings,
                                         double pairs_per_setting, const NoiseConfig& noise,
                                         bool subtract_accidentals = false);

/// SplitMix64 step; used to derive independent per-row seeds.
std::uint64_t mix_seed(std::uint64_t base, std::uint64_t index);

}  // namespace biphoton
