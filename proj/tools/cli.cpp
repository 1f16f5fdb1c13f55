// Command-line front end: source definition, count simulation, tomography,
// minima curves, and the Hardy analysis, with file-based I/O.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "biphoton/io.hpp"
#include "biphoton/kernels.hpp"
#include "biphoton/polarization.hpp"
#include "biphoton/source.hpp"

using namespace biphoton;
using nlohmann::json;

namespace {

constexpr const char* kVersion = "1.0.0";

// exit codes, one per error class
enum ExitCode {
  kOk = 0,
  kCheckFailed = 1,
  kParseError = 2,
  kSchemeMismatch = 3,
  kDegenerateInput = 4,
  kNumericalFailure = 5,
};

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty())
    std::cout << content;
  else
    io::write_file(out_path, content);
}

std::string fixtures_dir(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  if (const char* env = std::getenv("BIPHOTON_FIXTURES")) return env;
  return "fixtures";
}

TomographyScheme load_scheme(const std::string& name_or_path) {
  if (name_or_path == "table1") return table1_scheme();
  // custom scheme: text file, one "arm1,arm2" pair per line
  std::ifstream in(name_or_path);
  if (!in) throw std::invalid_argument("cannot open scheme file: " + name_or_path);
  std::vector<SettingPair> settings;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto comma = line.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("scheme file: bad line: " + line);
    settings.emplace_back(AnalyzerSetting::parse(line.substr(0, comma)),
                          AnalyzerSetting::parse(line.substr(comma + 1)));
  }
  return make_scheme(std::move(settings));
}

SourceConfig source_from_options(const std::string& config_path, double chi, double phi) {
  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in) throw std::invalid_argument("cannot open config: " + config_path);
    json j;
    try {
      j = json::parse(in);
    } catch (const json::parse_error& e) {
      throw std::invalid_argument("config " + config_path + ": " + e.what());
    }
    return io::source_config_from_json(j);
  }
  SourceConfig c;
  c.chi_deg = chi;
  c.phi_deg = phi;
  return c;
}

int cmd_source(const SourceConfig& config, const std::string& out_path) {
  TwoPhotonState state = source_state(config);
  double eps = std::abs(state.amp(3)) / std::abs(state.amp(0));
  json report = {
      {"epsilon", eps},
      {"phi_deg", config.phi_deg},
      {"amplitudes",
       {{"hh", {state.amp(0).real(), state.amp(0).imag()}},
        {"hv", {state.amp(1).real(), state.amp(1).imag()}},
        {"vh", {state.amp(2).real(), state.amp(2).imag()}},
        {"vv", {state.amp(3).real(), state.amp(3).imag()}}}},
      {"entanglement_entropy_nats", entanglement_entropy(eps)},
      {"density_matrix", io::density_to_json(density_from_pure(state))},
      {"version", kVersion},
  };
  emit(out_path, report.dump(2) + "\n");
  return kOk;
}

int cmd_simulate(const SourceConfig& config, const std::string& scheme_name, double pairs,
                 const NoiseConfig& noise, const std::string& out_path,
                 const std::string& format) {
  TomographyScheme scheme = load_scheme(scheme_name);
  DensityMatrix rho = config.gamma > 0.0 ? mixed_state(config.gamma)
                                         : density_from_pure(source_state(config));
  auto counts = simulate_counts(rho, scheme.settings, pairs, noise);
  if (format == "json") {
    json j = {{"seed", noise.rng_seed}, {"counts", io::counts_to_json(counts)},
              {"version", kVersion}};
    emit(out_path, j.dump(2) + "\n");
  } else {
    emit(out_path, io::counts_to_csv(counts));
  }
  std::cerr << "seed: " << noise.rng_seed << "\n";
  return kOk;
}

int cmd_tomo(const std::string& counts_path, const std::string& scheme_name,
             bool project_physical, const std::string& target_spec,
             const std::string& out_path) {
  TomographyScheme scheme = load_scheme(scheme_name);
  auto counts = counts_path.size() > 5 &&
                        counts_path.substr(counts_path.size() - 5) == ".json"
                    ? io::counts_from_json(json::parse(io::read_file(counts_path)))
                    : io::counts_from_csv_file(counts_path);
  DensityMatrix rho = reconstruct(counts, scheme);
  if (project_physical) rho = project_to_physical(rho);

  std::optional<TwoPhotonState> target;
  if (!target_spec.empty()) {
    auto comma = target_spec.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("--target expects eps,phi_deg");
    target = state_from_epsilon(std::stod(target_spec.substr(0, comma)),
                                std::stod(target_spec.substr(comma + 1)));
  }
  TomographyDiagnostics d = diagnose(rho, target);
  json out = io::density_to_json(rho);
  json diag = {{"eigenvalues", d.eigenvalues},
               {"purity", d.purity},
               {"min_eigenvalue", d.min_eigenvalue},
               {"is_physical", d.is_physical}};
  if (d.fidelity) diag["fidelity"] = *d.fidelity;
  out["diagnostics"] = diag;
  out["version"] = kVersion;
  emit(out_path, out.dump(2) + "\n");
  return kOk;
}

int cmd_minima(double epsilon, double from, double to, double step,
               const std::string& out_path) {
  std::string csv = "theta1_deg,theta2_min_deg,probability\n";
  char buf[96];
  for (double t1 = from; t1 <= to + 1e-9; t1 += step) {
    double t2 = minima_angle(epsilon, t1);
    double p = linear_pair_probability(epsilon, 0.0, t1, t2);
    std::snprintf(buf, sizeof buf, "%.10g,%.10g,%.10g\n", t1, t2, p);
    csv += buf;
  }
  emit(out_path, csv);
  return kOk;
}

int cmd_hardy_angles(double epsilon, const std::string& out_path) {
  HardyAngles a = hardy_angles(epsilon);
  json j = {{"epsilon", epsilon},
            {"alpha_deg", a.alpha_deg},
            {"beta_mag_deg", a.beta_mag_deg},
            {"beta_signed_deg", a.beta_signed_deg()},
            {"hardy_fraction", hardy_fraction(epsilon)},
            {"version", kVersion}};
  emit(out_path, j.dump(2) + "\n");
  return kOk;
}

int cmd_hardy_curve(double from, double to, int steps, double pairs,
                    const NoiseConfig& noise, const std::string& out_path) {
  if (steps < 1) throw std::invalid_argument("hardy curve: steps must be >= 1");
  std::vector<double> eps;
  for (int i = 0; i < steps; ++i)
    eps.push_back(steps == 1 ? from : from + (to - from) * i / (steps - 1));
  auto rows = hardy_curve(eps, pairs, noise);
  emit(out_path, io::hardy_curve_to_csv(rows));
  std::cerr << "seed: " << noise.rng_seed << "\n";
  return kOk;
}

int cmd_hardy_test(const std::string& fixture_path, const std::string& out_path) {
  auto fixture = io::hardy_fixture_from_file(fixture_path);
  HardyResult r = hardy_test(io::hardy_fixture_records(fixture), fixture.totals);
  json j = {{"probabilities", r.probabilities},
            {"violation", r.violation},
            {"std_error", r.std_error},
            {"sigma", r.sigma},
            {"counts", r.counts},
            {"totals", r.totals},
            {"version", kVersion}};
  emit(out_path, j.dump(2) + "\n");
  return kOk;
}

int cmd_paper_repro(const std::string& fixtures) {
  int failures = 0;
  auto row = [&](const std::string& name, bool ok, const std::string& detail) {
    std::cout << (ok ? "PASS  " : "FAIL  ") << name << "  " << detail << "\n";
    if (!ok) ++failures;
  };
  auto num = [](double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.4f", x);
    return std::string(buf);
  };

  std::cout << "paper reproduction report (version " << kVersion
            << ", fixtures: " << fixtures << ")\n";

  // Table I reconstruction
  TomographyScheme scheme = table1_scheme();
  auto counts = io::counts_from_csv_file(fixtures + "/table1_counts.csv");
  DensityMatrix rho = reconstruct(counts, scheme);
  const double diag_expect[4] = {0.4872, 0.0045, 0.0062, 0.5020};
  bool diag_ok = true;
  for (int i = 0; i < 4; ++i)
    diag_ok = diag_ok && std::abs(rho.elem(i, i).real() - diag_expect[i]) <= 0.0005;
  row("table1 diagonal (0.4872, 0.0045, 0.0062, 0.5020) +- 0.0005", diag_ok,
      "(" + num(rho.elem(0, 0).real()) + ", " + num(rho.elem(1, 1).real()) + ", " +
          num(rho.elem(2, 2).real()) + ", " + num(rho.elem(3, 3).real()) + ")");
  double hv_vh = rho.elem(1, 1).real() + rho.elem(2, 2).real();
  row("table1 HV+VH population in [0.008, 0.013]", hv_vh >= 0.008 && hv_vh <= 0.013,
      num(hv_vh));
  double fid = fidelity_with_pure(rho, state_from_epsilon(1.0, 0.0));
  row("table1 Bell fidelity >= 0.95", fid >= 0.95, num(fid));
  double corner = rho.elem(0, 3).real();
  row("table1 Re rho(HH,VV) in [0.40, 0.50]", corner >= 0.40 && corner <= 0.50,
      num(corner));

  // Hardy significance
  auto fixture = io::hardy_fixture_from_file(fixtures + "/hardy_paper_counts.json");
  HardyResult r = hardy_test(io::hardy_fixture_records(fixture), fixture.totals);
  row("hardy sigma in [115, 129]", r.sigma >= 115.0 && r.sigma <= 129.0, num(r.sigma));

  // Hardy optimum
  OptimalEpsilon opt = find_optimal_epsilon(1e-6);
  const double analytic_max = (5.0 * std::sqrt(5.0) - 11.0) / 2.0;
  row("hardy fraction maximum = 0.09017 +- 1e-4",
      std::abs(opt.fraction_star - analytic_max) <= 1e-4, num(opt.fraction_star));
  row("optimal epsilon in [0.45, 0.48]",
      opt.epsilon_star >= 0.45 && opt.epsilon_star <= 0.48, num(opt.epsilon_star));
  double f470 = hardy_fraction(0.470);
  row("hardy fraction(0.470) in [0.089, 0.091]", f470 >= 0.089 && f470 <= 0.091,
      num(f470));

  // Hardy angles
  HardyAngles a = hardy_angles(0.470);
  row("alpha(0.470) = 55.6 +- 0.5 deg", std::abs(a.alpha_deg - 55.6) <= 0.5,
      num(a.alpha_deg));
  row("|beta|(0.470) = 72.1 +- 0.2 deg", std::abs(a.beta_mag_deg - 72.1) <= 0.2,
      num(a.beta_mag_deg));

  std::cout << (failures == 0 ? "all rows pass\n"
                              : std::to_string(failures) + " row(s) failed\n");
  return failures == 0 ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tunable polarization-entangled photon-pair source: simulation, "
               "16-setting two-photon tomography, and the Hardy test"};
  app.require_subcommand(1);

  std::string config_path, out_path, format = "csv", scheme_name = "table1";
  std::string counts_path, target_spec, fixture_flag;
  double chi = 45.0, phi = 0.0, epsilon = 0.470, pairs = 71322.0;
  double from = 0.05, to = 0.95, step = 5.0;
  int steps = 19;
  bool project_physical = false;
  NoiseConfig noise;
  noise.acquisition_time = 100.0;

  auto add_noise_opts = [&](CLI::App* cmd) {
    cmd->add_option("--seed", noise.rng_seed, "RNG seed");
    cmd->add_option("--singles1", noise.singles_rate_1, "arm-1 singles rate (1/s)");
    cmd->add_option("--singles2", noise.singles_rate_2, "arm-2 singles rate (1/s)");
    cmd->add_option("--window", noise.coincidence_window, "coincidence window (s)");
    cmd->add_option("--time", noise.acquisition_time, "acquisition time (s)");
  };

  auto* src = app.add_subcommand("source", "report the emitted two-photon state");
  src->add_option("--chi", chi, "pump polarization angle from vertical (deg)");
  src->add_option("--phi", phi, "entanglement phase (deg)");
  src->add_option("--config", config_path, "source config JSON");
  src->add_option("--out", out_path, "output path (stdout when omitted)");

  auto* sim = app.add_subcommand("simulate", "simulate coincidence counts");
  sim->add_option("--chi", chi, "pump polarization angle (deg)");
  sim->add_option("--phi", phi, "entanglement phase (deg)");
  sim->add_option("--config", config_path, "source config JSON");
  sim->add_option("--scheme", scheme_name, "scheme name or settings file");
  sim->add_option("--pairs", pairs, "expected pairs per setting");
  sim->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  sim->add_option("--out", out_path, "output path");
  add_noise_opts(sim);

  auto* tomo = app.add_subcommand("tomo", "reconstruct a density matrix from counts");
  tomo->add_option("counts", counts_path, "counts CSV/JSON path")->required();
  tomo->add_option("--scheme", scheme_name, "scheme name or settings file");
  tomo->add_flag("--project-physical", project_physical,
                 "clip negative eigenvalues and renormalize");
  tomo->add_option("--target", target_spec, "fidelity target as eps,phi_deg");
  tomo->add_option("--out", out_path, "output path");

  auto* minima = app.add_subcommand("minima", "coincidence-minima locus");
  minima->add_option("--epsilon", epsilon, "degree of entanglement")->required();
  minima->add_option("--from", from, "first theta1 (deg)")->default_val(5.0);
  minima->add_option("--to", to, "last theta1 (deg)")->default_val(175.0);
  minima->add_option("--step", step, "theta1 step (deg)");
  minima->add_option("--out", out_path, "output path");

  auto* hardy = app.add_subcommand("hardy", "Hardy test tools");
  hardy->require_subcommand(1);
  auto* hangles = hardy->add_subcommand("angles", "solve the Hardy angles");
  hangles->add_option("--epsilon", epsilon, "degree of entanglement")->required();
  hangles->add_option("--out", out_path, "output path");
  auto* hcurve = hardy->add_subcommand("curve", "predicted and simulated Hardy curve");
  hcurve->add_option("--from", from, "first epsilon");
  hcurve->add_option("--to", to, "last epsilon");
  hcurve->add_option("--steps", steps, "number of rows");
  hcurve->add_option("--pairs", pairs, "pairs per setting")->default_val(2.6e5);
  hcurve->add_option("--out", out_path, "output path");
  add_noise_opts(hcurve);
  auto* htest = hardy->add_subcommand("test", "evaluate the inequality on counts");
  htest->add_option("fixture", counts_path, "Hardy counts JSON")->required();
  htest->add_option("--out", out_path, "output path");

  auto* repro = app.add_subcommand("paper-repro",
                                   "reproduce the headline numbers from fixtures");
  repro->add_option("--fixtures", fixture_flag,
                    "fixture directory (default: $BIPHOTON_FIXTURES or ./fixtures)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kParseError;
  }

  try {
    if (src->parsed()) {
      SourceConfig c = source_from_options(config_path, chi, phi);
      if (!src->count("--config")) c.validate();
      return cmd_source(c, out_path);
    }
    if (sim->parsed())
      return cmd_simulate(source_from_options(config_path, chi, phi), scheme_name, pairs,
                          noise, out_path, format);
    if (tomo->parsed())
      return cmd_tomo(counts_path, scheme_name, project_physical, target_spec, out_path);
    if (minima->parsed()) return cmd_minima(epsilon, from, to, step, out_path);
    if (hardy->parsed()) {
      if (hangles->parsed()) return cmd_hardy_angles(epsilon, out_path);
      if (hcurve->parsed()) return cmd_hardy_curve(from, to, steps, pairs, noise, out_path);
      if (htest->parsed()) return cmd_hardy_test(counts_path, out_path);
    }
    if (repro->parsed()) return cmd_paper_repro(fixtures_dir(fixture_flag));
  } catch (const SchemeMismatchError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kSchemeMismatch;
  } catch (const EmptyDataError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kSchemeMismatch;
  } catch (const InconsistentAcquisitionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kSchemeMismatch;
  } catch (const DegenerateSchemeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNumericalFailure;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDegenerateInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNumericalFailure;
  }
  return kOk;
}
