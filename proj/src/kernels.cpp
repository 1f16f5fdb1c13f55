#include "biphoton/kernels.hpp"

#include "biphoton/polarization.hpp"
#include "biphoton/source.hpp"

namespace biphoton {

namespace {

HardyCurveRow curve_row(double eps, double pairs_per_setting, const NoiseConfig& noise,
                        std::uint64_t row_seed) {
  HardyCurveRow row{};
  row.epsilon = eps;
  row.predicted = hardy_fraction(eps);
  auto [lo, hi] = hardy_band_serial(eps, 0.5);
  row.band_lo = lo;
  row.band_hi = hi;

  auto settings = hardy_settings(eps);
  DensityMatrix rho = density_from_pure(state_from_epsilon(eps, 0.0));
  NoiseConfig n = noise;
  n.rng_seed = row_seed;
  auto counts = simulate_counts(
      rho, std::vector<SettingPair>(settings.begin(), settings.end()), pairs_per_setting, n);
  std::array<CountRecord, 4> recs{counts[0], counts[1], counts[2], counts[3]};
  std::array<double, 4> totals;
  totals.fill(pairs_per_setting);
  HardyResult res = hardy_test(recs, totals);
  row.sim_pbb = res.probabilities[0];
  row.sim_sigma = res.signed_significance();
  return row;
}

double one_trial(const DensityMatrix& rho, const TomographyScheme& scheme,
                 double pairs_per_setting, std::uint64_t seed) {
  NoiseConfig n;
  n.rng_seed = seed;
  auto counts = simulate_counts(rho, scheme.settings, pairs_per_setting, n);
  return trace_distance(reconstruct(counts, scheme), rho);
}

}  // namespace

std::vector<HardyCurveRow> hardy_curve(const std::vector<double>& epsilons,
                                       double pairs_per_setting, const NoiseConfig& noise) {
  std::vector<HardyCurveRow> rows(epsilons.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < epsilons.size(); ++i)
    rows[i] = curve_row(epsilons[i], pairs_per_setting, noise,
                        mix_seed(noise.rng_seed, i));
  return rows;
}

std::vector<HardyCurveRow> hardy_curve_serial(const std::vector<double>& epsilons,
                                              double pairs_per_setting,
                                              const NoiseConfig& noise) {
  std::vector<HardyCurveRow> rows(epsilons.size());
  for (std::size_t i = 0; i < epsilons.size(); ++i)
    rows[i] = curve_row(epsilons[i], pairs_per_setting, noise,
                        mix_seed(noise.rng_seed, i));
  return rows;
}

std::vector<double> roundtrip_trials(const DensityMatrix& rho, const TomographyScheme& scheme,
                                     double pairs_per_setting, int n_trials,
                                     std::uint64_t base_seed) {
  std::vector<double> out(n_trials);
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < n_trials; ++i)
    out[i] = one_trial(rho, scheme, pairs_per_setting, mix_seed(base_seed, i));
  return out;
}

std::vector<double> roundtrip_trials_serial(const DensityMatrix& rho,
                                            const TomographyScheme& scheme,
                                            double pairs_per_setting, int n_trials,
                                            std::uint64_t base_seed) {
  std::vector<double> out(n_trials);
  for (int i = 0; i < n_trials; ++i)
    out[i] = one_trial(rho, scheme, pairs_per_setting, mix_seed(base_seed, i));
  return out;
}

}  // namespace biphoton
