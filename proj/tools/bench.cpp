// Benchmark: OpenMP kernels against their serial references. Verifies the
// outputs agree bit-for-bit while timing both paths.

#include <chrono>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "biphoton/kernels.hpp"
#include "biphoton/source.hpp"

using namespace biphoton;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void report(const char* name, double serial_s, double parallel_s, bool identical) {
  std::printf("%-24s %10.3fs %10.3fs %9.2fx   %s\n", name, serial_s, parallel_s,
              serial_s / parallel_s, identical ? "outputs identical" : "OUTPUT MISMATCH");
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (built without OpenMP)\n");
#endif
  std::printf("%-24s %11s %11s %10s\n", "kernel", "serial", "parallel", "speedup");

  {
    std::vector<double> eps;
    for (int i = 1; i <= 96; ++i) eps.push_back(0.01 * i);
    NoiseConfig noise;
    noise.rng_seed = 7;
    auto t0 = std::chrono::steady_clock::now();
    auto ser = hardy_curve_serial(eps, 2.6e5, noise);
    double ts = seconds_since(t0);
    t0 = std::chrono::steady_clock::now();
    auto par = hardy_curve(eps, 2.6e5, noise);
    double tp = seconds_since(t0);
    bool same = ser.size() == par.size();
    for (size_t i = 0; same && i < ser.size(); ++i)
      same = ser[i].predicted == par[i].predicted && ser[i].band_lo == par[i].band_lo &&
             ser[i].band_hi == par[i].band_hi && ser[i].sim_pbb == par[i].sim_pbb &&
             ser[i].sim_sigma == par[i].sim_sigma;
    report("hardy_curve (96 rows)", ts, tp, same);
  }

  {
    TomographyScheme scheme = table1_scheme();
    DensityMatrix rho = density_from_pure(state_from_epsilon(0.47, 20.0));
    auto t0 = std::chrono::steady_clock::now();
    auto ser = roundtrip_trials_serial(rho, scheme, 1e6, 200, 99);
    double ts = seconds_since(t0);
    t0 = std::chrono::steady_clock::now();
    auto par = roundtrip_trials(rho, scheme, 1e6, 200, 99);
    double tp = seconds_since(t0);
    bool same = ser == par;
    report("roundtrip_trials (200)", ts, tp, same);
  }

  return 0;
}
