#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "gaussdiss/channel_dynamics.hpp"
#include "gaussdiss/gaussian_core.hpp"

namespace gaussdiss::cli {

/// Invalid user input; carries the offending field name.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, const std::string& what)
      : std::runtime_error(field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

struct RunConfig {
  double alpha_re = 0.0;
  double alpha_im = 0.0;
  double r0 = 0.0;
  double phi0 = 0.0;
  double nu0 = 0.0;
  double omega = 1.0;
  double k = 0.1;
  double n_bath = 0.0;
  double t_start = 0.0;
  std::optional<double> t_end;  // defaults to 10 / k
  std::size_t samples = 512;
  std::string output_path;      // empty: standard output
  std::uint64_t seed = 42;

  /// Throws ConfigError naming the first invalid field.
  void validate() const;
  GaussianParams state() const;
  ChannelParams channel() const;
  TimeGrid grid() const;
};

}  // namespace gaussdiss::cli
