#include "cli/run_config.hpp"

#include <cmath>
#include <utility>

namespace gaussdiss::cli {

namespace {

void finite(const char* field, double v) {
  if (!std::isfinite(v)) throw ConfigError(field, "must be finite");
}

void non_negative(const char* field, double v) {
  finite(field, v);
  if (v < 0.0) throw ConfigError(field, "must be >= 0");
}

}  // namespace

void RunConfig::validate() const {
  finite("alpha-re", alpha_re);
  finite("alpha-im", alpha_im);
  non_negative("r0", r0);
  finite("phi0", phi0);
  non_negative("nu0", nu0);
  finite("omega", omega);
  non_negative("k", k);
  non_negative("nbath", n_bath);
  non_negative("t-start", t_start);
  if (t_end) {
    finite("t-end", *t_end);
    if (*t_end < t_start) throw ConfigError("t-end", "must be >= t-start");
  }
  if (samples < 2) throw ConfigError("samples", "must be >= 2");
}

GaussianParams RunConfig::state() const {
  validate();
  return GaussianParams::canonical({alpha_re, alpha_im}, r0, phi0, nu0);
}

ChannelParams RunConfig::channel() const {
  validate();
  return {omega, k, n_bath};
}

TimeGrid RunConfig::grid() const {
  validate();
  TimeGrid g = TimeGrid::default_for(channel());
  g.t_start = t_start;
  if (t_end) g.t_end = *t_end;
  if (g.t_end < g.t_start) throw ConfigError("t-end", "default 10/k lies before t-start; set t-end");
  g.samples = samples;
  return g;
}

}  // namespace gaussdiss::cli
