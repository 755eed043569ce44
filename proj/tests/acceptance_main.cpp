// Acceptance gate. Each criterion prints exactly one PASS/FAIL line with the
// measured values, the tolerance pinned here in code, and its wall time; the
// exit status is the number of failed criteria. Criterion 8 additionally
// prints one diagnostic growth line per swept dispersion value.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "dcsim/analysis.hpp"
#include "dcsim/biphoton.hpp"
#include "dcsim/scenario.hpp"
#include "dcsim/sellmeier.hpp"
#include "dcsim/shg.hpp"
#include "dcsim/spectral_amplitude.hpp"
#include "dcsim/temporal.hpp"
#include "dcsim/units.hpp"

using namespace dcsim;
namespace fs = std::filesystem;

namespace {

int g_failures = 0;

std::chrono::steady_clock::time_point tick() {
  return std::chrono::steady_clock::now();
}

double tock_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(tick() - start).count();
}

std::string fmt(double value, int digits = 6) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.*g", digits, value);
  return buf;
}

void report(int index, const char* name, bool pass, double ms, double limit_ms,
            const std::string& detail) {
  const bool ok = pass && ms < limit_ms;
  std::printf("criterion %d %-26s %s  %s  [%.2f ms, limit %.0f ms]\n", index,
              name, ok ? "PASS" : "FAIL", detail.c_str(), ms, limit_ms);
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

double classical_fwhm(double beta1, double beta2) {
  ScenarioConfig config;
  config.beta1 = beta1;
  config.beta2 = beta2;
  return run_classical_scan(config).summary.fitted_fwhm_fs;
}

void criterion1() {
  const auto t0 = tick();
  const double beta = bk7_beta(38.65, 807.0);
  const double ms = tock_ms(t0);
  report(1, "bk7-dispersion-anchor", std::abs(beta - 851.0) <= 2.0, ms, 1.0,
         "beta " + fmt(beta) + " fs^2, required 851 +- 2 fs^2");
}

double criterion2() {
  const auto t0 = tick();
  const double fitted = classical_fwhm(0.0, 0.0);
  const double ms = tock_ms(t0);
  const bool pass = std::abs(fitted - 19.8) <= 0.02 * 19.8 &&
                    std::abs(fitted - 20.0) <= 0.05 * 20.0;
  report(2, "transform-limited-width", pass, ms, 1000.0,
         "fitted " + fmt(fitted) + " fs vs 19.8 fs (2%) and 20 fs (5%)");
  return fitted;
}

void criterion3(double baseline_fwhm) {
  const auto t0 = tick();
  const double fitted = classical_fwhm(850.0, -850.0);
  const double ms = tock_ms(t0);
  const double rel = std::abs(fitted - baseline_fwhm) / baseline_fwhm;
  report(3, "opposite-arm-cancellation", rel <= 0.005, ms, 1000.0,
         "fitted " + fmt(fitted) + " fs vs undispersed " + fmt(baseline_fwhm) +
             " fs, deviation " + fmt(100.0 * rel, 3) + "% (<= 0.5%)");
}

void criterion4() {
  const auto t0 = tick();
  const double fitted = classical_fwhm(850.0, 0.0);
  const double sigma = derive_parameters(ScenarioConfig{}).sigma;
  const double s2 = sigma * sigma;
  const double expected =
      kFwhmPerRms * std::sqrt(1.0 + 850.0 * 850.0 * s2 * s2) / sigma;
  const double ms = tock_ms(t0);
  const double rel = std::abs(fitted - expected) / expected;
  report(4, "single-arm-broadening", rel <= 0.02, ms, 1000.0,
         "fitted " + fmt(fitted) + " fs vs closed form " + fmt(expected) +
             " fs, deviation " + fmt(100.0 * rel, 3) + "% (<= 2%)");
}

void criterion5() {
  const auto t0 = tick();
  const ScenarioParameters p = derive_parameters(ScenarioConfig{});
  double worst = 0.0;
  for (double beta1 : {0.0, 100.0, 850.0, 1e4}) {
    for (double sigma_s : {1e-5, 1e-4, 1e-3}) {
      const double expected =
          classical_variance_closed_form(p.sigma, sigma_s, beta1);
      const double half_span = 2.5 * fwhm_from_rms(std::sqrt(expected));
      const CorrelationTrace trace =
          delay_scan(p.sigma, p.omega0, beta1, -beta1,
                     MonochromatorSpec{2.0 * p.omega0, sigma_s},
                     symmetric_delays(half_span, 201), ScanOptions{});
      const GaussianFit fit = fit_gaussian_trace(trace);
      const double variance = fit.rms_width * fit.rms_width;
      worst = std::max(worst, std::abs(variance - expected) / expected);
    }
  }
  const double ms = tock_ms(t0);
  report(5, "narrowband-variance-grid", worst <= 0.02, ms, 30000.0,
         "12 scans, worst closed-form deviation " + fmt(100.0 * worst, 3) +
             "% (<= 2%)");
}

void criterion6() {
  const auto t0 = tick();
  const ScenarioParameters p = derive_parameters(ScenarioConfig{});
  double worst = 0.0;
  for (double divisor : {20.0, 50.0, 100.0}) {
    const double sigma_c = p.sigma / divisor;
    for (double beta : {0.0, 425.0, 850.0}) {
      const JointSpectralAmplitude jsa = apply_dispersion_jsa(
          joint_spectral_amplitude(p.omega0, p.sigma, sigma_c, 512), beta,
          -beta);
      const double variance =
          time_difference_variance(two_time_probability(jsa));
      const double expected =
          quantum_variance_closed_form(p.sigma, sigma_c, beta);
      worst = std::max(worst, std::abs(variance - expected) / expected);
    }
  }
  const double ms = tock_ms(t0);
  report(6, "biphoton-variance-grid", worst <= 0.02, ms, 60000.0,
         "9 pipelines on 512^2, worst closed-form deviation " +
             fmt(100.0 * worst, 3) + "% (<= 2%)");
}

void criterion7() {
  const auto t0 = tick();
  const QuantumRun entangled = run_quantum_correlation(ScenarioConfig{});
  ScenarioConfig separable_config;
  separable_config.sigma_c_ratio = 10.0;
  const QuantumRun separable = run_quantum_correlation(separable_config);
  const double ms = tock_ms(t0);
  const double measured = entangled.summary.variance_fs2;
  const double bound = entangled.summary.bound_fs2;
  const bool pass = entangled.summary.violated &&
                    std::abs(measured - 72.5) / 72.5 <= 0.02 &&
                    std::abs(bound - 4.1e4) / 4.1e4 <= 0.02 &&
                    !separable.summary.violated;
  report(7, "inequality-verdicts", pass, ms, 10000.0,
         "entangled " + fmt(measured) + " fs^2 vs bound " + fmt(bound) +
             " fs^2, violated=" +
             (entangled.summary.violated ? "true" : "false") +
             "; separable violated=" +
             (separable.summary.violated ? "true" : "false"));
}

void criterion8() {
  const auto t0 = tick();
  const std::vector<double> betas = {0.0, 1e3, 3e3, 1e4, 3e4, 1e5, 3e5};
  ScenarioConfig config;
  config.delay_count = 101;
  const std::vector<RunSummary> rows =
      run_sweep(config, SweepParameter::beta, betas);
  const double base = rows[0].fitted_fwhm_fs;
  bool pass = true;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const double growth = rows[i].fitted_fwhm_fs / base - 1.0;
    if (betas[i] <= 8e3 && std::abs(growth) > 0.01) pass = false;
    if (betas[i] >= 3e5 && growth <= 0.10) pass = false;
    std::printf("  beta %8s fs^2: width %s fs, growth %s%%\n",
                fmt(betas[i], 4).c_str(), fmt(rows[i].fitted_fwhm_fs).c_str(),
                fmt(100.0 * growth, 3).c_str());
  }
  const ScenarioParameters p = derive_parameters(config);
  const double persistence = cancellation_persistence_bound(p.sigma, p.sigma_s);
  if (!(8e3 < persistence && persistence < 3e5)) pass = false;
  const double ms = tock_ms(t0);
  report(8, "cancellation-persistence", pass, ms, 30000.0,
         "growth <= 1% through 8e3 fs^2, > 10% at 3e5 fs^2, persistence scale " +
             fmt(persistence, 4) + " fs^2 bracketed");
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

bool identical_trees(const fs::path& a, const fs::path& b) {
  int files = 0;
  for (const auto& entry : fs::directory_iterator(a)) {
    ++files;
    const std::string ours = slurp(entry.path());
    const std::string theirs = slurp(b / entry.path().filename());
    if (ours.empty() || ours != theirs) return false;
  }
  return files > 0;
}

void criterion9() {
  const auto t0 = tick();
  const ScenarioParameters p = derive_parameters(ScenarioConfig{});

  // energy conservation across the transform, on a chirped field
  const FrequencyGrid grid = make_frequency_grid(p.omega0, p.sigma, 32.0, 4096);
  const SpectralAmplitude plain = gaussian_field_spectrum(grid, p.omega0, p.sigma);
  const SpectralAmplitude chirped =
      apply_quadratic_dispersion(plain, DispersionSpec{850.0, p.omega0});
  const double spectral = spectral_energy(chirped);
  const double temporal = temporal_energy(time_domain_intensity(chirped));
  const double parseval = std::abs(spectral - temporal) / spectral;

  // phase operations must not move any sample magnitude
  const SpectralAmplitude delayed = apply_delay(chirped, 12.5);
  double magnitude_drift = 0.0;
  for (std::size_t i = 0; i < plain.samples.size(); ++i) {
    magnitude_drift = std::max(
        magnitude_drift, std::abs(std::abs(delayed.samples[i]) -
                                  std::abs(plain.samples[i])));
  }

  // doubling every resolution leaves reported widths in place
  ScenarioConfig cfg;
  const double classical_coarse = run_classical_scan(cfg).summary.fitted_fwhm_fs;
  cfg.grid_count = 8192;
  const double classical_fine = run_classical_scan(cfg).summary.fitted_fwhm_fs;
  const double classical_shift =
      std::abs(classical_coarse - classical_fine) / classical_fine;
  ScenarioConfig qcfg;
  qcfg.grid_count = 256;
  const double quantum_coarse =
      run_quantum_correlation(qcfg).summary.fitted_fwhm_fs;
  qcfg.grid_count = 512;
  const double quantum_fine =
      run_quantum_correlation(qcfg).summary.fitted_fwhm_fs;
  const double quantum_shift =
      std::abs(quantum_coarse - quantum_fine) / quantum_fine;

  // the cancelled trace is even in the delay
  ScenarioConfig scfg;
  scfg.delay_count = 101;
  const CorrelationTrace trace = run_classical_scan(scfg).trace;
  double asymmetry = 0.0;
  const std::size_t n = trace.intensities.size();
  for (std::size_t i = 0; i < n; ++i) {
    asymmetry = std::max(asymmetry, std::abs(trace.intensities[i] -
                                             trace.intensities[n - 1 - i]));
  }

  // byte-identical reruns of the installed binary
  const fs::path root = fs::temp_directory_path() / "dcsim_acceptance";
  const fs::path dir_a = root / "a";
  const fs::path dir_b = root / "b";
  std::error_code ec;
  fs::remove_all(root, ec);
  fs::create_directories(dir_a);
  fs::create_directories(dir_b);
  const auto run_cli = [](const fs::path& dir) {
    const std::string base = std::string("\"") + DCSIM_CLI_PATH +
                             "\" --format both --out \"" + dir.string() + "\" ";
    return std::system((base + "classical-scan > /dev/null").c_str()) == 0 &&
           std::system((base + "quantum-correlation > /dev/null").c_str()) == 0;
  };
  const bool deterministic =
      run_cli(dir_a) && run_cli(dir_b) && identical_trees(dir_a, dir_b);

  const bool pass = parseval < 1e-9 && magnitude_drift < 1e-13 &&
                    classical_shift < 1e-3 && quantum_shift < 1e-3 &&
                    asymmetry < 1e-6 && deterministic;
  const double ms = tock_ms(t0);
  report(9, "property-suite", pass, ms, 60000.0,
         "parseval " + fmt(parseval, 2) + ", magnitude drift " +
             fmt(magnitude_drift, 2) + ", refinement " +
             fmt(classical_shift, 2) + "/" + fmt(quantum_shift, 2) +
             ", asymmetry " + fmt(asymmetry, 2) + ", reruns " +
             (deterministic ? "byte-identical" : "drifted"));
}

}  // namespace

int main() {
  criterion1();
  const double baseline = criterion2();
  criterion3(baseline);
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  std::printf("%d of 9 criteria passed\n", 9 - g_failures);
  return g_failures;
}
