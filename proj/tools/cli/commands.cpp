#include "cli/commands.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <map>

#include "cli/csv.hpp"
#include "gaussdiss/channel_dynamics.hpp"
#include "gaussdiss/errors.hpp"
#include "gaussdiss/fock_oracle.hpp"
#include "gaussdiss/fock_statistics.hpp"

namespace gaussdiss::cli {

void build_cli(CLI::App& app, CliOptions& opts) {
  auto& run = opts.run;
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "Preset file of `key = value` lines; flags override it");
  app.allow_config_extras(CLI::config_extras_mode::error);

  app.add_option("--alpha-re", run.alpha_re, "Re alpha0");
  app.add_option("--alpha-im", run.alpha_im, "Im alpha0");
  app.add_option("--r0", run.r0, "Initial squeeze magnitude");
  app.add_option("--phi0", run.phi0, "Initial squeeze phase (rad)");
  app.add_option("--nu0", run.nu0, "Initial thermal occupancy");
  app.add_option("--omega", run.omega, "Field angular frequency");
  app.add_option("--k", run.k, "Dissipation rate");
  app.add_option("--nbath", run.n_bath, "Bath mean photon number");
  app.add_option("--t-start", run.t_start, "First time sample");
  app.add_option("--t-end", run.t_end, "Last time sample (default 10/k)");
  app.add_option("--samples", run.samples, "Number of time samples");
  app.add_option("--out", run.output_path, "Output file (default: stdout)");
  app.add_option("--seed", run.seed, "Seed for randomized suites");

  app.add_subcommand("evolve", "Closed-form trajectory CSV: t,nu,r,phi,alpha_re,alpha_im,D,entropy");

  auto* pnd = app.add_subcommand("pnd", "Photon-number distribution CSV: n,p_n");
  pnd->add_option("--t", opts.pnd.t, "Evolution time");
  pnd->add_option("--n-max", opts.pnd.n_max, "Largest n (default: until tail < 1e-10)");

  auto* wig = app.add_subcommand("wigner", "Wigner grid CSV: x,p,w");
  wig->add_option("--t", opts.wigner.t, "Evolution time");
  wig->add_option("--x-min", opts.wigner.x_min);
  wig->add_option("--x-max", opts.wigner.x_max);
  wig->add_option("--p-min", opts.wigner.p_min);
  wig->add_option("--p-max", opts.wigner.p_max);
  wig->add_option("--nx", opts.wigner.nx, "Samples along x");
  wig->add_option("--np", opts.wigner.np, "Samples along p");
  const std::map<std::string, WignerForm> forms{{"gaussian", WignerForm::gaussian},
                                                {"series-printed", WignerForm::series_as_printed},
                                                {"series-corrected", WignerForm::series_corrected}};
  wig->add_option("--form", opts.wigner.form, "gaussian | series-printed | series-corrected")
      ->transform(CLI::CheckedTransformer(forms, CLI::ignore_case));

  app.add_subcommand("tc", "Characteristic time and visibility bounds");

  auto* val = app.add_subcommand("validate", "Closed forms vs Fock-space integration");
  val->add_option("--dim", opts.validate.dim, "Fock truncation");
  val->add_option("--n-states", opts.validate.n_states, "Number of random states");
  val->add_option("--r0-min", opts.validate.r0_min);
  val->add_option("--r0-max", opts.validate.r0_max);
  val->add_option("--nu0-max", opts.validate.nu0_max);
  val->add_option("--alpha-max", opts.validate.alpha_max);
}

void write_evolve_csv(const RunConfig& cfg, std::ostream& out) {
  const auto rows = trajectory(cfg.state(), cfg.channel(), cfg.grid());
  CsvWriter csv(out, {"t", "nu", "r", "phi", "alpha_re", "alpha_im", "D", "entropy"});
  for (const auto& row : rows) {
    csv << row.t << row.nu << row.r << row.phi << row.alpha.real() << row.alpha.imag()
        << row.determinant << row.entropy;
    csv.end_row();
  }
}

namespace {

GaussianParams state_at(const RunConfig& cfg, double t) {
  if (!std::isfinite(t) || t < 0.0) throw ConfigError("t", "must be finite and >= 0");
  return evolve(cfg.state(), cfg.channel(), t).state;
}

}  // namespace

void write_pnd_csv(const RunConfig& cfg, const PndOptions& pnd, std::ostream& out) {
  const auto s = state_at(cfg, pnd.t);
  if (pnd.n_max && *pnd.n_max < 0) throw ConfigError("n-max", "must be >= 0");
  const auto dist = pnd.n_max ? photon_number_distribution(s, *pnd.n_max)
                              : photon_number_distribution_adaptive(s);
  CsvWriter csv(out, {"n", "p_n"});
  for (std::size_t n = 0; n < dist.probs.size(); ++n) {
    csv << static_cast<long long>(n) << dist.probs[n];
    csv.end_row();
  }
}

void write_wigner_csv(const RunConfig& cfg, const WignerOptions& wig, std::ostream& out) {
  const auto s = state_at(cfg, wig.t);
  GridBounds b = auto_bounds(s);
  if (wig.x_min) b.x_min = *wig.x_min;
  if (wig.x_max) b.x_max = *wig.x_max;
  if (wig.p_min) b.p_min = *wig.p_min;
  if (wig.p_max) b.p_max = *wig.p_max;
  const auto grid = wigner_grid(s, b, wig.nx, wig.np, wig.form);
  CsvWriter csv(out, {"x", "p", "w"});
  for (std::size_t i = 0; i < grid.nx(); ++i) {
    for (std::size_t j = 0; j < grid.np(); ++j) {
      csv << grid.x(i) << grid.p(j) << grid.value(i, j);
      csv.end_row();
    }
  }
}

TcReport compute_tc(const RunConfig& cfg) {
  const auto s0 = cfg.state();
  const auto ch = cfg.channel();
  const auto verdict = visibility(s0, ch);
  TcReport report;
  report.nu_bound = verdict.nu_bound;
  report.nbath_bound = verdict.nbath_bound;
  report.visible = verdict.visible;
  report.interior_maximum = verdict.interior_maximum;
  report.t_c_closed = verdict.t_c;
  if (ch.k() > 0.0) report.t_c_numeric = characteristic_time_numeric(s0, ch).t_c;
  return report;
}

namespace {

std::string optional_real(const std::optional<double>& v) { return v ? format_real(*v) : "none"; }

}  // namespace

void write_tc_text(const TcReport& r, std::ostream& out) {
  out << "t_c_closed = " << optional_real(r.t_c_closed) << '\n'
      << "t_c_numeric = " << optional_real(r.t_c_numeric) << '\n'
      << "interior_maximum = " << (r.interior_maximum ? "true" : "false") << '\n'
      << "nu_bound = " << format_real(r.nu_bound) << '\n'
      << "nbath_bound = " << format_real(r.nbath_bound) << '\n'
      << "visible = " << (r.visible ? "true" : "false") << '\n';
}

void write_tc_csv(const TcReport& r, std::ostream& out) {
  CsvWriter csv(out, {"t_c_closed", "t_c_numeric", "interior_maximum", "nu_bound", "nbath_bound", "visible"});
  csv << optional_real(r.t_c_closed) << optional_real(r.t_c_numeric)
      << (r.interior_maximum ? "true" : "false") << r.nu_bound << r.nbath_bound
      << (r.visible ? "true" : "false");
  csv.end_row();
}

ValidationOptions validation_options(const RunConfig& cfg, const ValidateCliOptions& v) {
  if (v.dim < 1 || v.dim > kMaxOracleDim) throw ConfigError("dim", "must lie in [1, 200]");
  if (v.n_states < 0) throw ConfigError("n-states", "must be >= 0");
  if (!(v.r0_min >= 0.0 && v.r0_min <= v.r0_max)) throw ConfigError("r0-min", "need 0 <= r0-min <= r0-max");
  if (!(v.nu0_max >= 0.0)) throw ConfigError("nu0-max", "must be >= 0");
  if (!(v.alpha_max >= 0.0)) throw ConfigError("alpha-max", "must be >= 0");
  ValidationOptions opt;
  opt.seed = cfg.seed;
  opt.dim = v.dim;
  opt.n_states = v.n_states;
  opt.envelope.r0_min = v.r0_min;
  opt.envelope.r0_max = v.r0_max;
  opt.envelope.nu0_max = v.nu0_max;
  opt.envelope.alpha_max = v.alpha_max;
  return opt;
}

int write_validation_report(const ValidationReport& report, std::ostream& out, std::ostream& err) {
  out << "states_checked = " << report.states_checked << '\n'
      << "draws_rejected = " << report.draws_rejected << '\n'
      << "max_dev_nu = " << format_real(report.max_dev_nu) << '\n'
      << "max_dev_r = " << format_real(report.max_dev_r) << '\n'
      << "max_dev_alpha = " << format_real(report.max_dev_alpha) << '\n'
      << "max_dev_entropy = " << format_real(report.max_dev_entropy) << '\n'
      << "max_dev_photon = " << format_real(report.max_dev_photon) << '\n';
  for (const auto& f : report.failures) out << "state " << f.index << " failed: " << f.message << '\n';
  for (const auto& b : report.breaches) out << "breach: " << b << '\n';
  if (report.states_checked == 0 && report.failures.empty()) {
    err << "warning: no states requested; validation passes vacuously\n";
  }
  out << (report.passed() ? "PASS" : "FAIL") << '\n';
  return report.passed() ? kOk : kToleranceBreach;
}

namespace {

template <class Body>
int with_output(const RunConfig& cfg, std::ostream& out, std::ostream& err, Body body) {
  if (cfg.output_path.empty()) {
    body(out);
    return kOk;
  }
  std::ofstream file(cfg.output_path, std::ios::binary);
  if (!file) {
    err << "error: cannot open " << cfg.output_path << " for writing\n";
    return kIoError;
  }
  body(file);
  file.flush();
  if (!file) {
    err << "error: write to " << cfg.output_path << " failed\n";
    return kIoError;
  }
  return kOk;
}

}  // namespace

int dispatch(const CLI::App& app, const CliOptions& opts, std::ostream& out, std::ostream& err) {
  const auto& cfg = opts.run;
  try {
    cfg.validate();
    if (app.got_subcommand("evolve")) {
      return with_output(cfg, out, err, [&](std::ostream& o) { write_evolve_csv(cfg, o); });
    }
    if (app.got_subcommand("pnd")) {
      return with_output(cfg, out, err, [&](std::ostream& o) { write_pnd_csv(cfg, opts.pnd, o); });
    }
    if (app.got_subcommand("wigner")) {
      return with_output(cfg, out, err, [&](std::ostream& o) { write_wigner_csv(cfg, opts.wigner, o); });
    }
    if (app.got_subcommand("tc")) {
      const auto report = compute_tc(cfg);
      if (cfg.output_path.empty()) {
        write_tc_text(report, out);
        return kOk;
      }
      return with_output(cfg, out, err, [&](std::ostream& o) { write_tc_csv(report, o); });
    }
    if (app.got_subcommand("validate")) {
      const auto report = run_validation(validation_options(cfg, opts.validate));
      int code = kOk;
      const int io = with_output(cfg, out, err, [&](std::ostream& o) { code = write_validation_report(report, o, err); });
      return io != kOk ? io : code;
    }
    err << "error: no subcommand\n";
    return kValidationError;
  } catch (const ConfigError& e) {
    err << "invalid " << e.what() << '\n';
    return kValidationError;
  } catch (const DomainError& e) {
    err << "invalid input: " << e.what() << '\n';
    return kValidationError;
  } catch (const ResourceLimit& e) {
    err << "resource limit: " << e.what() << '\n';
    return kValidationError;
  }
}

}  // namespace gaussdiss::cli
