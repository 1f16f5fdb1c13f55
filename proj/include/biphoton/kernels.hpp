#pragma once

#include <vector>

#include "biphoton/hardy.hpp"
#include "biphoton/tomography.hpp"

namespace biphoton {

// Data-parallel batch drivers. Each has an OpenMP version and a serial
// reference with identical output: per-row RNG seeds are derived from
// (base seed, row index), so results do not depend on thread count or
// execution order.

struct HardyCurveRow {
  double epsilon;
  double predicted;  // hardy_fraction
  double band_lo;    // hardy_band at +-0.5 degrees
  double band_hi;
  double sim_pbb;    // simulated Hardy fraction
  double sim_sigma;  // signed significance of the simulated violation
};

std::vector<HardyCurveRow> hardy_curve(const std::vector<double>& epsilons,
                                       double pairs_per_setting, const NoiseConfig& noise);
std::vector<HardyCurveRow> hardy_curve_serial(const std::vector<double>& epsilons,
                                              double pairs_per_setting,
                                              const NoiseConfig& noise);

/// Simulate counts for rho under the scheme, reconstruct, and return the
/// trace distance to rho, once per trial with per-trial seeds.
std::vector<double> roundtrip_trials(const DensityMatrix& rho, const TomographyScheme& scheme,
                                     double pairs_per_setting, int n_trials,
                                     std::uint64_t base_seed);
std::vector<double> roundtrip_trials_serial(const DensityMatrix& rho,
                                            const TomographyScheme& scheme,
                                            double pairs_per_setting, int n_trials,
                                            std::uint64_t base_seed);

}  // namespace biphoton
