#pragma once

#include <array>
#include <utility>

#include "biphoton/measurement.hpp"

namespace biphoton {

/// Analyzer angles for the inequality-free test at a given 0 < eps < 1.
/// alpha = arctan(sqrt(1/eps)); the signed beta solving the zero conditions
/// is negative, tan(beta) = -(1/eps)^{3/2}; beta_mag_deg stores |beta|.
/// Both magnitudes lie in (45, 90) degrees.
struct HardyAngles {
  double alpha_deg;
  double beta_mag_deg;
  double beta_signed_deg() const { return -beta_mag_deg; }
};

HardyAngles hardy_angles(double epsilon);

/// The four linear setting pairs, in the order
/// (beta,-beta), (alpha,-alpha), (beta,-alpha_perp), (alpha_perp,-beta),
/// with alpha_perp = alpha + 90 and beta taken signed (negative).
/// The last three have zero coincidence probability for the (eps, phi=0)
/// pure state; the first is the Hardy fraction.
std::array<SettingPair, 4> hardy_settings(double epsilon);

/// P(beta, -beta) for the (eps, phi=0) pure state, evaluated through the
/// projector path.
double hardy_fraction(double epsilon);

/// Same quantity as an algebraic closed form,
///   eps^2 (1-eps)^2 / ((eps^2 - eps + 1)^2 (1 + eps^2)),
/// obtained by substituting tan(beta) = -(1/eps)^{3/2} into the coincidence
/// formula. Kept as an independent cross-check of hardy_fraction.
double hardy_fraction_closed_form(double epsilon);

/// Golden-section maximization of hardy_fraction over (0, 1).
struct OptimalEpsilon {
  double epsilon_star;
  double fraction_star;
};
OptimalEpsilon find_optimal_epsilon(double tolerance);

/// Min and max of the coincidence probability over analyzer offsets
/// [-u, +u]^2 around (beta, -beta), scanned at 0.05 degree resolution.
std::pair<double, double> hardy_band(double epsilon, double uncertainty_deg);
/// Serial reference for the scan above; must agree exactly.
std::pair<double, double> hardy_band_serial(double epsilon, double uncertainty_deg);

/// Explicit H<->V relabel for eps >= 1 inputs: returns 1/eps.
double mirror_epsilon(double epsilon);

struct HardyResult {
  std::array<double, 4> probabilities;  // p_bb, p_aa, p_b_aperp, p_aperp_b
  double violation;                     // p_bb - (p_aa + p_b_aperp + p_aperp_b)
  double std_error;                     // independent-Poisson propagation
  double sigma;                         // |violation| / std_error
  std::array<long long, 4> counts;
  std::array<double, 4> totals;

  double signed_significance() const { return violation / std_error; }
};

/// Evaluate the inequality P(b,-b) > P(a,-a) + P(b,-a_perp) + P(a_perp,-b) on
/// measured counts. Records must carry linear settings forming the Hardy
/// pattern, in the order of hardy_settings; totals are per-setting pair
/// fluxes (the probability denominators).
HardyResult hardy_test(const std::array<CountRecord, 4>& records,
                       const std::array<double, 4>& totals);

}  // namespace biphoton
