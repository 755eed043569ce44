#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dcsim/scenario.hpp"
#include "dcsim/sellmeier.hpp"

namespace {

using dcsim::Error;
using dcsim::RunSummary;
using dcsim::ScenarioConfig;
using dcsim::UsageError;

struct OutputOptions {
  std::string directory = ".";
  bool csv = true;
  bool json = true;
};

std::string fmt(double value, int digits = 9) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.*g", digits, value);
  return buf;
}

void write_file(const std::string& directory, const std::string& name,
                const std::string& content) {
  const std::filesystem::path path = std::filesystem::path(directory) / name;
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << content)) {
    throw Error("cannot write " + path.string());
  }
  std::cout << "wrote " << path.string() << "\n";
}

void print_summary_line(const RunSummary& s) {
  std::cout << s.scenario << ": fitted_fwhm_fs=" << fmt(s.fitted_fwhm_fs, 6)
            << " closed_form_fwhm_fs=" << fmt(s.closed_form_fwhm_fs, 6)
            << " variance_fs2=" << fmt(s.variance_fs2, 6)
            << " bound_fs2=" << fmt(s.bound_fs2, 6)
            << " violated=" << (s.violated ? "true" : "false") << " (wall "
            << fmt(s.wall_time_ms, 4) << " ms)\n";
}

int run_classical(const ScenarioConfig& config, const OutputOptions& out) {
  const dcsim::ClassicalRun run = dcsim::run_classical_scan(config);
  if (out.csv) {
    write_file(out.directory, "classical_scan_trace.csv",
               dcsim::trace_csv(run.trace));
  }
  if (out.json) {
    write_file(out.directory, "classical_scan_summary.json",
               dcsim::summary_json(run.summary));
  }
  print_summary_line(run.summary);
  return 0;
}

int run_quantum(const ScenarioConfig& config, const OutputOptions& out) {
  const dcsim::QuantumRun run = dcsim::run_quantum_correlation(config);
  if (out.csv) {
    write_file(out.directory, "quantum_correlation_slice.csv",
               dcsim::distribution_slice_csv(run.distribution));
  }
  if (out.json) {
    write_file(out.directory, "quantum_correlation_summary.json",
               dcsim::summary_json(run.summary));
  }
  print_summary_line(run.summary);
  std::cout << "closed_form_variance_fs2=" << fmt(run.closed_form_variance_fs2)
            << "\n";
  return 0;
}

int run_sweep_command(const ScenarioConfig& config, const std::string& param,
                      const std::vector<double>& values,
                      const OutputOptions& out) {
  const auto rows =
      dcsim::run_sweep(config, dcsim::parse_sweep_parameter(param), values);
  if (out.csv) {
    write_file(out.directory, "sweep_table.csv", dcsim::sweep_table_csv(rows));
  }
  if (out.json) {
    write_file(out.directory, "sweep_summary.json", dcsim::sweep_json(rows));
  }
  for (const RunSummary& row : rows) print_summary_line(row);
  return 0;
}

int run_inequality(const ScenarioConfig& config, const OutputOptions& out) {
  std::vector<RunSummary> rows;
  RunSummary quantum = dcsim::run_quantum_correlation(config).summary;
  quantum.scenario = "quantum-coincidence";
  rows.push_back(quantum);
  RunSummary classical = dcsim::run_classical_scan(config).summary;
  classical.scenario = "classical-local-shg";
  rows.push_back(classical);
  if (out.csv) {
    write_file(out.directory, "inequality_table.csv",
               dcsim::sweep_table_csv(rows));
  }
  if (out.json) {
    write_file(out.directory, "inequality_summary.json",
               dcsim::sweep_json(rows));
  }
  for (const RunSummary& row : rows) print_summary_line(row);
  return 0;
}

int run_fig3(const ScenarioConfig& config, const OutputOptions& out) {
  const dcsim::Fig3Result result = dcsim::reproduce_fig3(config);
  if (out.csv) {
    for (std::size_t i = 0; i < result.traces.size(); ++i) {
      write_file(out.directory, result.summaries[i].scenario + "_trace.csv",
                 dcsim::trace_csv(result.traces[i]));
    }
    std::string table = "scenario,fitted_fwhm_fs,reference_fwhm_fs\n";
    for (std::size_t i = 0; i < result.summaries.size(); ++i) {
      table += result.summaries[i].scenario + "," +
               fmt(result.summaries[i].fitted_fwhm_fs) + "," +
               fmt(result.reference_fwhm_fs[i]) + "\n";
    }
    write_file(out.directory, "fig3_table.csv", table);
    std::string notes;
    for (const std::string& a : result.annotations) notes += a + "\n";
    write_file(out.directory, "fig3_annotations.txt", notes);
  }
  if (out.json) {
    write_file(out.directory, "fig3_summary.json",
               dcsim::sweep_json(result.summaries));
  }
  for (const std::string& a : result.annotations) std::cout << a << "\n";
  return 0;
}

int run_bk7(double length_mm, double wavelength_nm) {
  const dcsim::SellmeierMedium medium = dcsim::bk7_medium(length_mm);
  std::cout << "refractive_index=" << fmt(dcsim::refractive_index(medium, wavelength_nm))
            << "\n";
  std::cout << "gvd_fs2_per_mm=" << fmt(dcsim::gvd_fs2_per_mm(medium, wavelength_nm))
            << "\n";
  std::cout << "beta_fs2=" << fmt(dcsim::bk7_beta(length_mm, wavelength_nm))
            << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"classical and biphoton dispersion-cancellation simulator"};
  app.require_subcommand(0, 1);

  std::string config_path;
  OutputOptions out;
  std::string format = "both";
  bool print_defaults = false;
  app.add_option("--config", config_path, "key=value scenario config file");
  app.add_option("--out", out.directory, "output directory (default .)");
  app.add_option("--format", format, "csv, json or both (default both)")
      ->check(CLI::IsMember({"csv", "json", "both"}));
  app.add_flag("--print-defaults", print_defaults,
               "print the built-in scenario defaults and exit");

  CLI::App* classical =
      app.add_subcommand("classical-scan", "pulse-pair SHG delay scan");
  CLI::App* quantum = app.add_subcommand(
      "quantum-correlation", "biphoton two-time correlation");
  CLI::App* sweep =
      app.add_subcommand("sweep", "repeat a scenario over parameter values");
  std::string sweep_param;
  std::vector<double> sweep_values;
  sweep->add_option("--param", sweep_param, "beta, sigma_c_ratio or mono_fwhm")
      ->required();
  sweep->add_option("--values", sweep_values, "comma-separated values")
      ->required()
      ->delimiter(',');
  CLI::App* inequality = app.add_subcommand(
      "inequality-check",
      "variance bound check for the quantum and classical runs");
  CLI::App* fig3 = app.add_subcommand(
      "reproduce-fig3", "the four benchmark delay scans");
  CLI::App* bk7 = app.add_subcommand(
      "bk7-beta", "quadratic dispersion of a BK7 block");
  double length_mm = 0.0;
  double wavelength_nm = 0.0;
  bk7->add_option("length_mm", length_mm, "block length in mm")->required();
  bk7->add_option("wavelength_nm", wavelength_nm, "wavelength in nm")
      ->required();

  for (CLI::App* sub : {classical, quantum, sweep, inequality, fig3, bk7}) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    out.csv = format != "json";
    out.json = format != "csv";
    std::filesystem::create_directories(out.directory);

    if (print_defaults) {
      std::cout << dcsim::config_echo(ScenarioConfig{});
      if (app.get_subcommands().empty()) return 0;
    }

    ScenarioConfig config;
    if (!config_path.empty()) config = dcsim::load_config_file(config_path);

    if (classical->parsed()) return run_classical(config, out);
    if (quantum->parsed()) return run_quantum(config, out);
    if (sweep->parsed())
      return run_sweep_command(config, sweep_param, sweep_values, out);
    if (inequality->parsed()) return run_inequality(config, out);
    if (fig3->parsed()) return run_fig3(config, out);
    if (bk7->parsed()) return run_bk7(length_mm, wavelength_nm);

    std::cerr << "usage: dcsim <subcommand> [options]; see dcsim --help\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
