#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gaussdiss/gaussian_core.hpp"

namespace gaussdiss {

struct EvolutionResult {
  GaussianParams state;  // phase left unreduced
  double x_aux = 0.0;    // (nu0+1/2) cosh(2 r0) e^{-2kt} + (nbar+1/2)(1 - e^{-2kt})
  double t = 0.0;
};

/// Closed-form evolution of a Gaussian state through the thermal channel for time t >= 0.
EvolutionResult evolve(const GaussianParams& s0, const ChannelParams& ch, double t);

/// D(t) = det of the covariance matrix of evolve(s0, ch, t).
double determinant_trajectory(const GaussianParams& s0, const ChannelParams& ch, double t);

/// Closed-form time of maximum D(t); 0 when there is no interior maximum.
/// Throws UndefinedTimeError for k = 0.
double characteristic_time_closed(const GaussianParams& s0, const ChannelParams& ch);

struct NumericCharacteristicTime {
  double t_c = 0.0;
  // false when D(t) is monotone on [0, 50/k]; t_c is then reported as 0
  bool interior_maximum = false;
};

/// Golden-section maximization of the closed-form D(t) on [0, 50/k].
NumericCharacteristicTime characteristic_time_numeric(const GaussianParams& s0,
                                                      const ChannelParams& ch);

struct VisibilityVerdict {
  bool visible = false;
  double nu_bound = 0.0;     // cosh(2 r0)(nbar + 1/2) - 1/2
  double nbath_bound = 0.0;  // cosh(2 r0)(nu0 + 1/2) - 1/2
  std::optional<double> t_c;  // empty when k = 0
  // visible can hold with no interior maximum (r0 = 0, nu0 < nbar: D rises monotonically)
  bool interior_maximum = false;
};

VisibilityVerdict visibility(const GaussianParams& s0, const ChannelParams& ch);

struct TimeGrid {
  double t_start = 0.0;
  double t_end = 0.0;
  std::size_t samples = 2;

  /// 512 uniform samples on [0, 10/k] (or [0, 10] when k = 0).
  static TimeGrid default_for(const ChannelParams& ch);
  double at(std::size_t i) const;
  void validate() const;
};

struct TrajectoryRow {
  double t = 0.0;
  double nu = 0.0;
  double r = 0.0;
  double phi = 0.0;
  Complex alpha;
  double determinant = 0.0;
  double entropy = 0.0;
};

std::vector<TrajectoryRow> trajectory(const GaussianParams& s0, const ChannelParams& ch,
                                      const TimeGrid& grid);

}  // namespace gaussdiss
