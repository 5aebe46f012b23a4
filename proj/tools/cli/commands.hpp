#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "cli/run_config.hpp"
#include "gaussdiss/phase_space.hpp"
#include "gaussdiss/validation.hpp"

namespace CLI {
class App;
}

namespace gaussdiss::cli {

enum ExitCode : int { kOk = 0, kValidationError = 2, kIoError = 3, kToleranceBreach = 4 };

struct PndOptions {
  double t = 0.0;
  std::optional<int> n_max;  // adaptive when unset
};

struct WignerOptions {
  double t = 0.0;
  std::optional<double> x_min, x_max, p_min, p_max;  // unset: auto box of +/- 6 sd
  std::size_t nx = 129;
  std::size_t np = 129;
  WignerForm form = WignerForm::gaussian;
};

struct ValidateCliOptions {
  int dim = 60;
  int n_states = 20;
  double r0_min = 0.0;
  double r0_max = 1.5;
  double nu0_max = 5.0;
  double alpha_max = 2.0;
};

struct CliOptions {
  RunConfig run;
  PndOptions pnd;
  WignerOptions wigner;
  ValidateCliOptions validate;
};

/// Registers global run options, the --config preset file and all subcommands.
void build_cli(CLI::App& app, CliOptions& opts);

/// Runs whichever subcommand was parsed; returns the process exit code.
int dispatch(const CLI::App& app, const CliOptions& opts, std::ostream& out, std::ostream& err);

void write_evolve_csv(const RunConfig& cfg, std::ostream& out);
void write_pnd_csv(const RunConfig& cfg, const PndOptions& pnd, std::ostream& out);
void write_wigner_csv(const RunConfig& cfg, const WignerOptions& wig, std::ostream& out);

struct TcReport {
  std::optional<double> t_c_closed;  // none for k = 0
  std::optional<double> t_c_numeric;
  bool interior_maximum = false;
  double nu_bound = 0.0;
  double nbath_bound = 0.0;
  bool visible = false;
};

TcReport compute_tc(const RunConfig& cfg);
void write_tc_text(const TcReport& report, std::ostream& out);
void write_tc_csv(const TcReport& report, std::ostream& out);

ValidationOptions validation_options(const RunConfig& cfg, const ValidateCliOptions& v);
/// Writes the deviation report; returns kOk or kToleranceBreach.
int write_validation_report(const ValidationReport& report, std::ostream& out, std::ostream& err);

}  // namespace gaussdiss::cli
