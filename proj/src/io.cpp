#include "biphoton/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace biphoton::io {

using nlohmann::json;

static std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string counts_to_csv(const std::vector<CountRecord>& records) {
  std::string out = "arm1,arm2,count,duration_s\n";
  for (const auto& r : records) {
    out += r.setting_1.label() + "," + r.setting_2.label() + "," +
           std::to_string(r.coincidences) + "," + fmt(r.duration_s) + "\n";
  }
  return out;
}

static std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string f;
  while (std::getline(ss, f, ',')) fields.push_back(f);
  return fields;
}

std::vector<CountRecord> counts_from_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("counts CSV: empty input");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "arm1,arm2,count,duration_s")
    throw std::invalid_argument("counts CSV: bad header: " + line);
  std::vector<CountRecord> out;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto f = split_csv_line(line);
    if (f.size() != 4) throw std::invalid_argument("counts CSV: bad row: " + line);
    out.push_back({AnalyzerSetting::parse(f[0]), AnalyzerSetting::parse(f[1]),
                   std::stoll(f[2]), std::stod(f[3])});
  }
  return out;
}

std::vector<CountRecord> counts_from_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open counts file: " + path);
  return counts_from_csv(in);
}

json counts_to_json(const std::vector<CountRecord>& records) {
  json arr = json::array();
  for (const auto& r : records)
    arr.push_back({{"arm1", r.setting_1.label()},
                   {"arm2", r.setting_2.label()},
                   {"count", r.coincidences},
                   {"duration_s", r.duration_s}});
  return arr;
}

std::vector<CountRecord> counts_from_json(const json& j) {
  std::vector<CountRecord> out;
  for (const auto& e : j)
    out.push_back({AnalyzerSetting::parse(e.at("arm1").get<std::string>()),
                   AnalyzerSetting::parse(e.at("arm2").get<std::string>()),
                   e.at("count").get<long long>(), e.at("duration_s").get<double>()});
  return out;
}

json density_to_json(const DensityMatrix& rho) {
  json re = json::array(), im = json::array();
  for (int i = 0; i < 4; ++i) {
    json row_re = json::array(), row_im = json::array();
    for (int j2 = 0; j2 < 4; ++j2) {
      row_re.push_back(rho.elem(i, j2).real());
      row_im.push_back(rho.elem(i, j2).imag());
    }
    re.push_back(row_re);
    im.push_back(row_im);
  }
  return {{"basis", "HH,HV,VH,VV"}, {"re", re}, {"im", im}};
}

DensityMatrix density_from_json(const json& j) {
  Matrix4c m;
  const auto& re = j.at("re");
  const auto& im = j.at("im");
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k)
      m(i, k) = Complex(re.at(i).at(k).get<double>(), im.at(i).at(k).get<double>());
  return DensityMatrix(m);
}

json source_config_to_json(const SourceConfig& c) {
  return {{"chi_deg", c.chi_deg},     {"phi_deg", c.phi_deg},
          {"delta_re", c.delta.real()}, {"delta_im", c.delta.imag()},
          {"attenuation", c.attenuation}, {"gamma", c.gamma}};
}

SourceConfig source_config_from_json(const json& j) {
  SourceConfig c;
  c.chi_deg = j.value("chi_deg", c.chi_deg);
  c.phi_deg = j.value("phi_deg", c.phi_deg);
  c.delta = Complex(j.value("delta_re", 0.0), j.value("delta_im", 0.0));
  c.attenuation = j.value("attenuation", c.attenuation);
  c.gamma = j.value("gamma", c.gamma);
  c.validate();
  return c;
}

HardyFixture hardy_fixture_from_json(const json& j) {
  HardyFixture f{};
  f.alpha_deg = j.at("alpha_deg").get<double>();
  f.beta_deg = j.at("beta_deg").get<double>();
  for (int k = 0; k < 4; ++k) {
    f.counts[k] = j.at("counts").at(k).get<long long>();
    f.probabilities[k] = j.at("probabilities").at(k).get<double>();
  }
  if (j.contains("totals")) {
    for (int k = 0; k < 4; ++k) f.totals[k] = j.at("totals").at(k).get<double>();
  } else {
    for (int k = 0; k < 4; ++k) f.totals[k] = f.counts[k] / f.probabilities[k];
  }
  return f;
}

HardyFixture hardy_fixture_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open fixture: " + path);
  return hardy_fixture_from_json(json::parse(in));
}

std::array<CountRecord, 4> hardy_fixture_records(const HardyFixture& f) {
  double b = -f.beta_deg;  // signed analyzer angle
  double a = f.alpha_deg;
  auto rec = [&](int k, double t1, double t2) {
    return CountRecord{AnalyzerSetting::linear(t1), AnalyzerSetting::linear(t2),
                       f.counts[k], 1.0};
  };
  return {rec(0, b, -b), rec(1, a, -a), rec(2, b, -(a + 90.0)), rec(3, a + 90.0, -b)};
}

std::string hardy_curve_to_csv(const std::vector<HardyCurveRow>& rows) {
  std::string out = "epsilon,predicted,band_lo,band_hi,sim_pbb,sim_sigma\n";
  for (const auto& r : rows)
    out += fmt(r.epsilon) + "," + fmt(r.predicted) + "," + fmt(r.band_lo) + "," +
           fmt(r.band_hi) + "," + fmt(r.sim_pbb) + "," + fmt(r.sim_sigma) + "\n";
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write file: " + path);
  out << content;
}

}  // namespace biphoton::io
