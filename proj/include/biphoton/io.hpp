#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "biphoton/hardy.hpp"
#include "biphoton/kernels.hpp"
#include "biphoton/measurement.hpp"
#include "biphoton/source.hpp"

namespace biphoton::io {

// Count interchange: CSV with header "arm1,arm2,count,duration_s", or an
// equivalent JSON array of {arm1, arm2, count, duration_s} objects.
// Arm literals are the AnalyzerSetting label forms.

std::string counts_to_csv(const std::vector<CountRecord>& records);
std::vector<CountRecord> counts_from_csv(std::istream& in);
std::vector<CountRecord> counts_from_csv_file(const std::string& path);

nlohmann::json counts_to_json(const std::vector<CountRecord>& records);
std::vector<CountRecord> counts_from_json(const nlohmann::json& j);

// DensityMatrix: {"re": 4x4, "im": 4x4}, basis order (HH, HV, VH, VV).
nlohmann::json density_to_json(const DensityMatrix& rho);
DensityMatrix density_from_json(const nlohmann::json& j);

// SourceConfig: {chi_deg, phi_deg, delta_re, delta_im, attenuation, gamma}.
nlohmann::json source_config_to_json(const SourceConfig& config);
SourceConfig source_config_from_json(const nlohmann::json& j);

struct HardyFixture {
  double alpha_deg;  // analyzer magnitudes as operated
  double beta_deg;
  std::array<long long, 4> counts;        // order of hardy_settings
  std::array<double, 4> probabilities;
  std::array<double, 4> totals;           // derived: count / probability
};

HardyFixture hardy_fixture_from_json(const nlohmann::json& j);
HardyFixture hardy_fixture_from_file(const std::string& path);

/// Count records for a fixture, with signed angles (-beta, +beta) etc.
std::array<CountRecord, 4> hardy_fixture_records(const HardyFixture& f);

std::string hardy_curve_to_csv(const std::vector<HardyCurveRow>& rows);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace biphoton::io
