#include "biphoton/hardy.hpp"

#include <cmath>

#include "biphoton/polarization.hpp"
#include "biphoton/source.hpp"

namespace biphoton {

HardyAngles hardy_angles(double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0))
    throw DegenerateEntanglementError(
        "hardy_angles: epsilon must lie in (0, 1); the Hardy fraction vanishes "
        "for product and maximally entangled states (use mirror_epsilon for "
        "eps > 1)");
  double alpha = rad_to_deg(std::atan(std::sqrt(1.0 / epsilon)));
  double beta_mag = rad_to_deg(std::atan(std::pow(1.0 / epsilon, 1.5)));
  return {alpha, beta_mag};
}

std::array<SettingPair, 4> hardy_settings(double epsilon) {
  HardyAngles a = hardy_angles(epsilon);
  double b = a.beta_signed_deg();
  double al = a.alpha_deg;
  double alp = al + 90.0;
  auto lin = [](double t1, double t2) {
    return SettingPair(AnalyzerSetting::linear(t1), AnalyzerSetting::linear(t2));
  };
  return {lin(b, -b), lin(al, -al), lin(b, -alp), lin(alp, -b)};
}

double hardy_fraction(double epsilon) {
  HardyAngles a = hardy_angles(epsilon);
  DensityMatrix rho = density_from_pure(state_from_epsilon(epsilon, 0.0));
  double b = a.beta_signed_deg();
  return coincidence_probability(rho, AnalyzerSetting::linear(b),
                                 AnalyzerSetting::linear(-b));
}

double hardy_fraction_closed_form(double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0))
    throw DegenerateEntanglementError("hardy_fraction: epsilon must lie in (0, 1)");
  double e = epsilon;
  double q = e * e - e + 1.0;
  return e * e * (1.0 - e) * (1.0 - e) / (q * q * (1.0 + e * e));
}

OptimalEpsilon find_optimal_epsilon(double tolerance) {
  if (!(tolerance > 0.0)) throw std::invalid_argument("find_optimal_epsilon: tolerance <= 0");
  // golden-section search; hardy_fraction is unimodal on (0, 1)
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = 1e-6, b = 1.0 - 1e-6;
  double c = b - gr * (b - a);
  double d = a + gr * (b - a);
  double fc = hardy_fraction(c), fd = hardy_fraction(d);
  while (b - a > tolerance) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - gr * (b - a);
      fc = hardy_fraction(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + gr * (b - a);
      fd = hardy_fraction(d);
    }
  }
  double x = 0.5 * (a + b);
  return {x, hardy_fraction(x)};
}

static std::pair<double, double> band_extrema(double epsilon, double u_deg, bool parallel) {
  HardyAngles ang = hardy_angles(epsilon);
  double b = ang.beta_signed_deg();
  DensityMatrix rho = density_from_pure(state_from_epsilon(epsilon, 0.0));
  const double res = 0.05;
  int n = std::max(0, static_cast<int>(std::ceil(u_deg / res)));
  double step = n > 0 ? u_deg / n : 0.0;
  int side = 2 * n + 1;
  double lo = 1.0, hi = 0.0;
#pragma omp parallel for reduction(min : lo) reduction(max : hi) schedule(static) if (parallel)
  for (int idx = 0; idx < side * side; ++idx) {
    double d1 = (idx / side - n) * step;
    double d2 = (idx % side - n) * step;
    double p = coincidence_probability(rho, AnalyzerSetting::linear(b + d1),
                                       AnalyzerSetting::linear(-b + d2));
    lo = std::min(lo, p);
    hi = std::max(hi, p);
  }
  return {lo, hi};
}

std::pair<double, double> hardy_band(double epsilon, double uncertainty_deg) {
  if (!(uncertainty_deg >= 0.0)) throw std::invalid_argument("hardy_band: negative uncertainty");
  return band_extrema(epsilon, uncertainty_deg, true);
}

std::pair<double, double> hardy_band_serial(double epsilon, double uncertainty_deg) {
  if (!(uncertainty_deg >= 0.0)) throw std::invalid_argument("hardy_band: negative uncertainty");
  return band_extrema(epsilon, uncertainty_deg, false);
}

double mirror_epsilon(double epsilon) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon))
    throw std::invalid_argument("mirror_epsilon: epsilon must be finite and > 0");
  return 1.0 / epsilon;
}

HardyResult hardy_test(const std::array<CountRecord, 4>& records,
                       const std::array<double, 4>& totals) {
  for (double t : totals)
    if (!(t > 0.0)) throw std::invalid_argument("hardy_test: totals must be positive");

  // the records must form the Hardy pattern (b,-b),(a,-a),(b,-a90),(a90,-b)
  auto angle = [](const AnalyzerSetting& s) { return s.linear_angle_deg(); };
  double b = angle(records[0].setting_1);
  double a = angle(records[1].setting_1);
  auto expect = [&](int k, double t1, double t2) {
    const double tol = 1e-6;
    if (std::abs(angle(records[k].setting_1) - t1) > tol ||
        std::abs(angle(records[k].setting_2) - t2) > tol)
      throw std::invalid_argument("hardy_test: record " + std::to_string(k) +
                                  " does not match the Hardy setting pattern");
  };
  expect(0, b, -b);
  expect(1, a, -a);
  expect(2, b, -(a + 90.0));
  expect(3, a + 90.0, -b);

  HardyResult r{};
  double var = 0.0;
  for (int k = 0; k < 4; ++k) {
    if (records[k].coincidences < 0)
      throw std::invalid_argument("hardy_test: negative count");
    r.counts[k] = records[k].coincidences;
    r.totals[k] = totals[k];
    r.probabilities[k] = records[k].coincidences / totals[k];
    var += records[k].coincidences / (totals[k] * totals[k]);
  }
  r.violation =
      r.probabilities[0] - r.probabilities[1] - r.probabilities[2] - r.probabilities[3];
  r.std_error = std::sqrt(var);
  r.sigma = r.std_error > 0.0 ? std::abs(r.violation) / r.std_error : 0.0;
  return r;
}

}  // namespace biphoton
