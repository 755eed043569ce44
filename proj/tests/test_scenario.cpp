#include <cmath>
#include <string>
#include <vector>

#include "dcsim/errors.hpp"
#include "dcsim/scenario.hpp"
#include "dcsim/units.hpp"
#include "doctest.h"
#include "support/oracles.hpp"

using namespace dcsim;

namespace {

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

double relative(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_CASE("derived parameters match the reference regime") {
  const ScenarioParameters p = derive_parameters(ScenarioConfig{});
  CHECK(p.omega0 == doctest::Approx(oracle::kOmega807).epsilon(1e-14));
  CHECK(p.sigma == doctest::Approx(oracle::kSigma).epsilon(1e-14));
  // the monochromator resolution applies at the doubled frequency
  CHECK(p.sigma_s == doctest::Approx(oracle::kSigmaMono4035).epsilon(1e-14));
  CHECK(p.sigma_c == doctest::Approx(0.01 * oracle::kSigma).epsilon(1e-14));
}

TEST_CASE("configuration validation") {
  ScenarioConfig config;
  config.delay_count = 16;
  CHECK_THROWS_AS(derive_parameters(config), InvalidParameter);
  config = {};
  config.delay_span = -1.0;
  CHECK_THROWS_AS(derive_parameters(config), InvalidParameter);
  config = {};
  config.grid_count = 8;
  CHECK_THROWS_AS(derive_parameters(config), InvalidParameter);
  config = {};
  config.field_fwhm = 0.0;
  CHECK_THROWS_AS(derive_parameters(config), InvalidParameter);
  config = {};
  config.sigma_c_ratio = -0.5;
  CHECK_THROWS_AS(derive_parameters(config), InvalidParameter);
}

TEST_CASE("config text round trips bit exactly") {
  ScenarioConfig config;
  config.center_wavelength = 806.1234567890123;
  config.field_fwhm = 96.54321098765432;
  config.beta1 = 849.9999999999999;
  config.beta2 = -850.0000000000001;
  config.mono_fwhm = 0.02345678901234567;
  config.sigma_c_ratio = 0.01234567890123456;
  config.delay_span = 123.4567890123456;
  config.delay_count = 257;
  config.grid_count = 1024;
  config.coverage = 7.5;

  const ScenarioConfig parsed = parse_config_text(config_echo(config));
  CHECK(parsed.center_wavelength == config.center_wavelength);
  CHECK(parsed.field_fwhm == config.field_fwhm);
  CHECK(parsed.beta1 == config.beta1);
  CHECK(parsed.beta2 == config.beta2);
  CHECK(parsed.mono_fwhm == config.mono_fwhm);
  CHECK(parsed.sigma_c_ratio == config.sigma_c_ratio);
  CHECK(parsed.delay_span == config.delay_span);
  CHECK(parsed.delay_count == config.delay_count);
  CHECK(parsed.grid_count == config.grid_count);
  CHECK(parsed.coverage == config.coverage);
}

TEST_CASE("config parser accepts comments and rejects junk") {
  const ScenarioConfig parsed = parse_config_text(
      "# comment\n\n  beta1 = 425.0  \n\tdelay_count=65\n");
  CHECK(parsed.beta1 == 425.0);
  CHECK(parsed.delay_count == 65);
  CHECK(parsed.beta2 == -850.0);  // untouched default

  CHECK_THROWS_AS(parse_config_text("betamax=1\n"), UsageError);
  CHECK_THROWS_AS(parse_config_text("beta1: 425\n"), UsageError);
  CHECK_THROWS_AS(parse_config_text("beta1=fast\n"), UsageError);
  CHECK_THROWS_AS(parse_config_text("delay_count=1e2\n"), UsageError);
  CHECK_THROWS_AS(load_config_file("/nonexistent/config.txt"), UsageError);
}

TEST_CASE("classical runner agrees with its closed form") {
  ScenarioConfig config;
  const ClassicalRun run = run_classical_scan(config);
  CHECK(run.summary.scenario == "classical-scan");
  CHECK(run.trace.delays.size() == 201);
  CHECK(relative(run.summary.fitted_fwhm_fs, run.summary.closed_form_fwhm_fs) <
        1e-6);
  // opposite-sign arms cancel: the width stays at the undispersed value
  CHECK(relative(run.summary.fitted_fwhm_fs, oracle::kFwhmBeta0) < 2e-3);
  CHECK(run.summary.bound_fs2 ==
        doctest::Approx(oracle::kBound850).epsilon(1e-9));
  // local SHG detection never claims a nonlocal violation
  CHECK_FALSE(run.summary.violated);

  config.beta1 = 0.0;
  config.beta2 = 0.0;
  const ClassicalRun flat = run_classical_scan(config);
  CHECK(relative(flat.summary.variance_fs2, oracle::kInitialVariance) < 1e-6);
  CHECK(relative(flat.summary.fitted_fwhm_fs, oracle::kFwhmBeta0) < 1e-6);

  config = {};
  config.beta2 = 0.0;
  const ClassicalRun single = run_classical_scan(config);
  CHECK(relative(single.summary.fitted_fwhm_fs, oracle::kSingleArmFwhm) <
        1e-3);
  CHECK(relative(single.summary.variance_fs2, oracle::kSingleArmVariance) <
        1e-3);
}

TEST_CASE("quantum runner agrees with its closed form") {
  ScenarioConfig config;
  const QuantumRun run = run_quantum_correlation(config);
  CHECK(run.summary.scenario == "quantum-correlation");
  CHECK(relative(run.summary.variance_fs2, oracle::kQuantumVar100_850) < 1e-6);
  CHECK(run.closed_form_variance_fs2 ==
        doctest::Approx(oracle::kQuantumVar100_850).epsilon(1e-12));
  CHECK(run.summary.bound_fs2 ==
        doctest::Approx(oracle::kBound850).epsilon(1e-9));
  CHECK(run.summary.violated);
  CHECK_FALSE(run.distribution.values.empty());

  config.sigma_c_ratio = 10.0;
  const QuantumRun separable = run_quantum_correlation(config);
  CHECK(relative(separable.summary.variance_fs2,
                 oracle::kQuantumVarSeparable) < 1e-4);
  CHECK_FALSE(separable.summary.violated);

  config = {};
  config.beta2 = -400.0;
  CHECK_THROWS_AS(run_quantum_correlation(config), InvalidParameter);
  config = {};
  config.sigma_c_ratio = 1.0 / 250.0;
  CHECK_THROWS_AS(run_quantum_correlation(config), InvalidParameter);
  config = {};
  config.sigma_c_ratio = 11.0;
  CHECK_THROWS_AS(run_quantum_correlation(config), InvalidParameter);
}

TEST_CASE("sweeps run one labeled row per value") {
  CHECK(parse_sweep_parameter("beta") == SweepParameter::beta);
  CHECK(parse_sweep_parameter("sigma_c_ratio") == SweepParameter::sigma_c_ratio);
  CHECK(parse_sweep_parameter("mono_fwhm") == SweepParameter::mono_fwhm);
  CHECK_THROWS_AS(parse_sweep_parameter("bogus"), UsageError);
  CHECK_THROWS_AS(run_sweep(ScenarioConfig{}, SweepParameter::beta, {}),
                  UsageError);

  ScenarioConfig config;
  const std::vector<RunSummary> rows =
      run_sweep(config, SweepParameter::beta, {0.0, 850.0});
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].scenario == "beta=0");
  CHECK(rows[1].scenario == "beta=850");
  CHECK(rows[0].config.beta1 == 0.0);
  CHECK(rows[1].config.beta2 == -850.0);

  // a one-value sweep is exactly the plain runner under a different label
  const ClassicalRun direct = run_classical_scan(config);
  CHECK(rows[1].fitted_fwhm_fs == direct.summary.fitted_fwhm_fs);
  CHECK(rows[1].variance_fs2 == direct.summary.variance_fs2);

  config.grid_count = 256;
  const std::vector<RunSummary> quantum =
      run_sweep(config, SweepParameter::sigma_c_ratio, {0.01});
  REQUIRE(quantum.size() == 1);
  CHECK(quantum[0].scenario == "sigma_c_ratio=0.01");
  const QuantumRun qdirect = run_quantum_correlation(config);
  CHECK(quantum[0].variance_fs2 == qdirect.summary.variance_fs2);
}

TEST_CASE("benchmark scans cover the four dispersion settings") {
  const Fig3Result result = reproduce_fig3();
  REQUIRE(result.traces.size() == 4);
  REQUIRE(result.summaries.size() == 4);
  REQUIRE(result.annotations.size() == 4);
  CHECK(result.reference_fwhm_fs ==
        std::vector<double>{21.7, 172.7, 176.4, 21.9});
  CHECK(result.summaries[0].scenario == "fig3a");
  CHECK(result.summaries[3].scenario == "fig3d");

  const double a = result.summaries[0].fitted_fwhm_fs;
  const double b = result.summaries[1].fitted_fwhm_fs;
  const double c = result.summaries[2].fitted_fwhm_fs;
  const double d = result.summaries[3].fitted_fwhm_fs;
  // both single-arm scans broaden by the same amount, either arm dispersed
  CHECK(relative(b, c) < 0.01);
  CHECK(b > 5.0 * a);
  // opposite-sign arms recover the undispersed width
  CHECK(relative(d, a) < 0.005);
  CHECK(relative(a, oracle::kFwhmBeta0) < 2e-3);
  CHECK(relative(b, oracle::kSingleArmFwhm) < 1e-3);

  for (int i = 0; i < 4; ++i) {
    CHECK(contains(result.annotations[i], result.summaries[i].scenario));
    CHECK(contains(result.annotations[i], "reference"));
  }
}

TEST_CASE("emission formats are deterministic and complete") {
  ScenarioConfig config;
  config.delay_count = 65;
  config.delay_span = 100.0;
  config.beta1 = 0.0;
  config.beta2 = 0.0;
  const ClassicalRun run = run_classical_scan(config);

  const std::string csv = trace_csv(run.trace);
  CHECK(csv.rfind("tau_fs,intensity_norm\n", 0) == 0);
  CHECK(csv == trace_csv(run.trace));

  const std::string json = summary_json(run.summary);
  CHECK(contains(json, "\"scenario\": \"classical-scan\""));
  CHECK(contains(json, "\"fitted_fwhm_fs\": "));
  CHECK(contains(json, "\"violated\": false"));
  CHECK(contains(json, "\"delay_count\": 65"));
  CHECK_FALSE(contains(json, "wall_time"));

  const std::vector<RunSummary> rows = {run.summary};
  const std::string table = sweep_table_csv(rows);
  CHECK(table.rfind("scenario,fitted_fwhm_fs,closed_form_fwhm_fs,"
                    "variance_fs2,bound_fs2,violated\n",
                    0) == 0);
  CHECK_FALSE(contains(table, "wall"));
  const std::string sweep = sweep_json(rows);
  CHECK(contains(sweep, "\"runs\": ["));
  CHECK_FALSE(contains(sweep, "wall"));

  const std::string echo = config_echo(config);
  CHECK(contains(echo, "center_wavelength=807\n"));
  CHECK(contains(echo, "beta1=0\n"));
  CHECK(contains(echo, "delay_count=65\n"));
}

TEST_CASE("distribution slices subsample the full lattice") {
  ScenarioConfig config;
  config.grid_count = 64;
  config.sigma_c_ratio = 0.01;
  config.beta1 = 0.0;
  config.beta2 = 0.0;
  const QuantumRun run = run_quantum_correlation(config);

  const std::string slice = distribution_slice_csv(run.distribution, 16);
  CHECK(slice.rfind("t1_fs,t2_fs,probability\n", 0) == 0);
  std::size_t lines = 0;
  for (char ch : slice) {
    if (ch == '\n') ++lines;
  }
  CHECK(lines >= 2);
  CHECK(lines <= 1 + 16 * 16);
  CHECK(slice == distribution_slice_csv(run.distribution, 16));
  CHECK_THROWS_AS(distribution_slice_csv(run.distribution, 1),
                  InvalidParameter);
}
