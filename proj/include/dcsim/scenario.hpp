#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "dcsim/analysis.hpp"
#include "dcsim/biphoton.hpp"
#include "dcsim/shg.hpp"

namespace dcsim {

// Flat run configuration. Defaults reproduce the reference regime:
// 807 nm center, 97 nm field FWHM, +-850 fs^2, 0.02 nm monochromator
// resolution at the doubled frequency.
struct ScenarioConfig {
  double center_wavelength = 807.0;  // nm
  double field_fwhm = 97.0;          // nm
  double beta1 = 850.0;              // fs^2
  double beta2 = -850.0;             // fs^2
  double mono_fwhm = 0.02;           // nm at the SHG wavelength
  double sigma_c_ratio = 0.01;       // sigma_c / sigma, quantum scenarios
  double delay_span = 0.0;           // fs, total; 0 selects 10x expected FWHM
  int delay_count = 201;
  int grid_count = 0;  // 0 selects 4096 (1D) or 512 (2D)
  double coverage = 8.0;             // sigma multiples
};

// Derived physical parameters shared by the runners.
struct ScenarioParameters {
  double omega0 = 0.0;   // rad/fs
  double sigma = 0.0;    // rad/fs
  double sigma_s = 0.0;  // rad/fs, from mono_fwhm at center_wavelength/2
  double sigma_c = 0.0;  // rad/fs
};
ScenarioParameters derive_parameters(const ScenarioConfig& config);

struct RunSummary {
  std::string scenario;
  double fitted_fwhm_fs = 0.0;
  double closed_form_fwhm_fs = 0.0;
  double variance_fs2 = 0.0;
  double bound_fs2 = 0.0;
  bool violated = false;
  double wall_time_ms = 0.0;  // console diagnostic; never serialized
  ScenarioConfig config;
};

struct ClassicalRun {
  CorrelationTrace trace;
  RunSummary summary;
};

struct QuantumRun {
  TwoTimeDistribution distribution;
  RunSummary summary;
  double closed_form_variance_fs2 = 0.0;
};

ClassicalRun run_classical_scan(const ScenarioConfig& config);

// Requires beta2 == -beta1; the closed-form comparison and the inequality
// scenario are defined for opposite-sign arms.
QuantumRun run_quantum_correlation(const ScenarioConfig& config);

enum class SweepParameter { beta, sigma_c_ratio, mono_fwhm };
SweepParameter parse_sweep_parameter(const std::string& name);

// One run per value, rows in input order. beta sweeps run the classical scan
// with beta1=+v, beta2=-v; sigma_c_ratio sweeps run the quantum pipeline;
// mono_fwhm sweeps run the classical scan at the configured betas.
std::vector<RunSummary> run_sweep(const ScenarioConfig& config,
                                  SweepParameter parameter,
                                  const std::vector<double>& values);

struct Fig3Result {
  std::vector<CorrelationTrace> traces;   // scenarios a..d
  std::vector<RunSummary> summaries;
  std::vector<double> reference_fwhm_fs;  // measured with the non-Gaussian
                                          // laboratory spectrum
  std::vector<std::string> annotations;
};

// The four benchmark delay scans: (beta1, beta2) = (0,0), (850,0), (0,-850),
// (850,-850).
Fig3Result reproduce_fig3(const ScenarioConfig& config = {});

// key=value config text. Unknown keys are hard usage errors; floats echo
// with 17 significant digits so a round trip is bit exact.
ScenarioConfig parse_config_text(const std::string& text);
ScenarioConfig load_config_file(const std::string& path);
std::string config_echo(const ScenarioConfig& config);

// Deterministic emission. Floats carry 9 significant digits except the
// config echo block (17).
std::string trace_csv(const CorrelationTrace& trace);
std::string distribution_slice_csv(const TwoTimeDistribution& dist,
                                   int max_rows = 33);
std::string summary_json(const RunSummary& summary);
std::string sweep_table_csv(const std::vector<RunSummary>& rows);
std::string sweep_json(const std::vector<RunSummary>& rows);

}  // namespace dcsim
