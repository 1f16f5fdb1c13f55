#include "biphoton/measurement.hpp"

#include <cmath>
#include <cstdio>
#include <random>
#include <unsupported/Eigen/KroneckerProduct>

namespace biphoton {

AnalyzerSetting AnalyzerSetting::named(char name) {
  named_state(name);  // validate
  return AnalyzerSetting(std::variant<char, Linear, Waveplates>(name));
}

AnalyzerSetting AnalyzerSetting::linear(double theta_deg) {
  if (!std::isfinite(theta_deg))
    throw std::invalid_argument("AnalyzerSetting: non-finite angle");
  return AnalyzerSetting(std::variant<char, Linear, Waveplates>(Linear{theta_deg}));
}

AnalyzerSetting AnalyzerSetting::waveplates(double qwp_deg, double hwp_deg) {
  if (!std::isfinite(qwp_deg) || !std::isfinite(hwp_deg))
    throw std::invalid_argument("AnalyzerSetting: non-finite angle");
  return AnalyzerSetting(std::variant<char, Linear, Waveplates>(Waveplates{qwp_deg, hwp_deg}));
}

JonesVector AnalyzerSetting::resolve() const {
  if (auto* c = std::get_if<char>(&v_)) return named_state(*c);
  if (auto* l = std::get_if<Linear>(&v_)) return linear_state(l->theta_deg);
  auto& wp = std::get<Waveplates>(v_);
  return analyzer_projection(wp.qwp_deg, wp.hwp_deg);
}

static std::string fmt_deg(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

std::string AnalyzerSetting::label() const {
  if (auto* c = std::get_if<char>(&v_)) return std::string(1, *c);
  if (auto* l = std::get_if<Linear>(&v_)) return "lin:" + fmt_deg(l->theta_deg);
  auto& wp = std::get<Waveplates>(v_);
  return "wp:" + fmt_deg(wp.qwp_deg) + "/" + fmt_deg(wp.hwp_deg);
}

AnalyzerSetting AnalyzerSetting::parse(const std::string& literal) {
  if (literal.size() == 1) return named(literal[0]);
  if (literal.rfind("lin:", 0) == 0) {
    size_t pos = 0;
    double t = std::stod(literal.substr(4), &pos);
    if (pos != literal.size() - 4)
      throw std::invalid_argument("bad setting literal: " + literal);
    return linear(t);
  }
  if (literal.rfind("wp:", 0) == 0) {
    auto slash = literal.find('/', 3);
    if (slash == std::string::npos)
      throw std::invalid_argument("bad setting literal: " + literal);
    return waveplates(std::stod(literal.substr(3, slash - 3)),
                      std::stod(literal.substr(slash + 1)));
  }
  throw std::invalid_argument("bad setting literal: " + literal);
}

double AnalyzerSetting::linear_angle_deg() const {
  if (auto* l = std::get_if<Linear>(&v_)) return l->theta_deg;
  if (auto* c = std::get_if<char>(&v_)) {
    switch (*c) {
      case 'H': return 0.0;
      case 'V': return 90.0;
      case 'D': return 45.0;
      case 'A': return -45.0;
      default:
        throw std::invalid_argument("linear_angle_deg: circular setting");
    }
  }
  throw std::invalid_argument("linear_angle_deg: waveplate setting");
}

bool AnalyzerSetting::approx_equal(const AnalyzerSetting& other, double tol_deg) const {
  if (v_.index() != other.v_.index()) {
    // H/V/D/A and lin:<deg> can denote the same projector
    try {
      double a = linear_angle_deg();
      double b = other.linear_angle_deg();
      double d = std::remainder(a - b, 180.0);
      return std::abs(d) <= tol_deg;
    } catch (const std::invalid_argument&) {
      return false;
    }
  }
  if (auto* c = std::get_if<char>(&v_)) return *c == std::get<char>(other.v_);
  if (auto* l = std::get_if<Linear>(&v_)) {
    double d = std::remainder(l->theta_deg - std::get<Linear>(other.v_).theta_deg, 180.0);
    return std::abs(d) <= tol_deg;
  }
  auto& a = std::get<Waveplates>(v_);
  auto& b = std::get<Waveplates>(other.v_);
  return std::abs(a.qwp_deg - b.qwp_deg) <= tol_deg &&
         std::abs(a.hwp_deg - b.hwp_deg) <= tol_deg;
}

void NoiseConfig::validate() const {
  if (singles_rate_1 < 0 || singles_rate_2 < 0 || coincidence_window < 0 ||
      acquisition_time < 0)
    throw std::invalid_argument("NoiseConfig: negative rate, window or time");
}

double coincidence_probability(const DensityMatrix& rho, const AnalyzerSetting& s1,
                               const AnalyzerSetting& s2) {
  Vector4c k = Eigen::kroneckerProduct(s1.resolve().vec(), s2.resolve().vec());
  return (k.adjoint() * rho.mat() * k).real()(0, 0);
}

double linear_pair_probability(double epsilon, double phi_deg, double theta1_deg,
                               double theta2_deg) {
  double t1 = deg_to_rad(theta1_deg), t2 = deg_to_rad(theta2_deg);
  Complex amp = std::cos(t1) * std::cos(t2) +
                epsilon * std::exp(Complex(0.0, deg_to_rad(phi_deg))) *
                    std::sin(t1) * std::sin(t2);
  return std::norm(amp) / (1.0 + epsilon * epsilon);
}

double minima_angle(double epsilon, double theta1_deg) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon))
    throw std::invalid_argument("minima_angle: epsilon must be > 0");
  double wrapped = std::remainder(theta1_deg, 180.0);
  if (std::abs(wrapped) < 1e-12) return 90.0;  // cot diverges; limit of the locus
  double t2 = std::atan(-1.0 / (std::tan(deg_to_rad(theta1_deg)) * epsilon));
  double deg = rad_to_deg(t2);
  if (deg <= -90.0) deg += 180.0;
  return deg;
}

std::vector<FringeSample> fringe(const DensityMatrix& rho, const AnalyzerSetting& fixed,
                                 int n_points) {
  if (n_points < 4) throw std::invalid_argument("fringe: need at least 4 points");
  std::vector<FringeSample> out;
  out.reserve(n_points);
  for (int i = 0; i < n_points; ++i) {
    double t2 = 180.0 * i / n_points;
    out.push_back({t2, coincidence_probability(rho, fixed, AnalyzerSetting::linear(t2))});
  }
  return out;
}

double visibility(const std::vector<FringeSample>& samples) {
  if (samples.size() < 4) throw std::invalid_argument("visibility: need at least 4 samples");
  double lo = samples[0].probability, hi = samples[0].probability;
  for (const auto& s : samples) {
    lo = std::min(lo, s.probability);
    hi = std::max(hi, s.probability);
  }
  if (hi + lo <= 0.0)
    throw UndefinedVisibilityError("visibility: fringe is identically zero");
  return (hi - lo) / (hi + lo);
}

double accidental_rate(double singles1, double singles2, double window_s) {
  if (singles1 < 0 || singles2 < 0 || window_s < 0)
    throw std::invalid_argument("accidental_rate: negative input");
  return singles1 * singles2 * window_s;
}

std::vector<CountRecord> simulate_counts(const DensityMatrix& rho,
                                         const std::vector<SettingPair>& settings,
                                         double pairs_per_setting, const NoiseConfig& noise,
                                         bool subtract_accidentals) {
  noise.validate();
  if (!(pairs_per_setting >= 0.0))
    throw std::invalid_argument("simulate_counts: pairs_per_setting must be >= 0");
  double acc = accidental_rate(noise.singles_rate_1, noise.singles_rate_2,
                               noise.coincidence_window) *
               noise.acquisition_time;
  std::mt19937_64 rng(noise.rng_seed);
  std::vector<CountRecord> out;
  out.reserve(settings.size());
  for (const auto& [s1, s2] : settings) {
    double mean = pairs_per_setting * coincidence_probability(rho, s1, s2) + acc;
    long long n = 0;
    if (mean > 0.0) {
      std::poisson_distribution<long long> pois(mean);
      n = pois(rng);
    }
    if (subtract_accidentals) n = std::max(0LL, n - static_cast<long long>(std::llround(acc)));
    double duration = noise.acquisition_time > 0.0 ? noise.acquisition_time : 1.0;
    out.push_back({s1, s2, n, duration});
  }
  return out;
}

std::uint64_t mix_seed(std::uint64_t base, std::uint64_t index) {
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace biphoton
