#include "gaussdiss/channel_dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gaussdiss/errors.hpp"

namespace gaussdiss {

namespace {

constexpr double kRadicandSlack = 1e-12;
constexpr double kHorizonInDampingTimes = 50.0;

void require_k(const ChannelParams& ch) {
  if (ch.k() == 0.0) throw UndefinedTimeError("characteristic time undefined for k = 0");
}

}  // namespace

EvolutionResult evolve(const GaussianParams& s0, const ChannelParams& ch, double t) {
  if (!std::isfinite(t) || t < 0.0) throw DomainError("evolve: t must be finite and >= 0");
  const double a0 = s0.nu() + 0.5;
  const double b = ch.n_bath() + 0.5;
  const double two_r0 = 2.0 * s0.r();
  if (t == 0.0) return {s0, a0 * std::cosh(two_r0), 0.0};

  const double u = std::exp(-2.0 * ch.k() * t);
  const double bath = b * -std::expm1(-2.0 * ch.k() * t);  // b (1 - u)

  const double x = a0 * std::cosh(two_r0) * u + bath;
  // x +/- (nu0+1/2) sinh(2 r0) u: the covariance eigenvalues over (nu+1/2)
  const double lam_plus = a0 * std::exp(two_r0) * u + bath;
  const double lam_minus = a0 * std::exp(-two_r0) * u + bath;

  double radicand = lam_plus * lam_minus;
  if (radicand < -kRadicandSlack) {
    throw ConsistencyError("evolve: negative radicand " + std::to_string(radicand));
  }
  radicand = std::max(radicand, 0.0);

  const double nu = std::max(std::sqrt(radicand) - 0.5, 0.0);
  const double r = 0.25 * std::log(lam_plus / lam_minus);
  const Complex alpha = s0.alpha() * std::polar(std::exp(-ch.k() * t), -ch.omega() * t);
  const double phi = s0.phi() - 2.0 * ch.omega() * t;
  return {GaussianParams{alpha, r, phi, nu}, x, t};
}

double determinant_trajectory(const GaussianParams& s0, const ChannelParams& ch, double t) {
  return determinant(covariance(evolve(s0, ch, t).state));
}

double characteristic_time_closed(const GaussianParams& s0, const ChannelParams& ch) {
  require_k(ch);
  const double nu0 = s0.nu();
  const double nb = ch.n_bath();
  const double c2 = std::cosh(2.0 * s0.r());
  const double d = 2.0 * c2 * (nb * (nu0 + 1.0) + nu0 * (nb + 1.0) + 0.5) -
                   2.0 * (nb + 0.5) * (nb + 0.5) - 2.0 * (nu0 + 0.5) * (nu0 + 0.5);
  const double arg = (2.0 * nb + 1.0) / d * (2.0 * nu0 * c2 + c2 - 2.0 * nb - 1.0);
  // a non-positive (or undefined) argument means D(t) has no stationary point for t > 0
  if (!std::isfinite(arg) || !(arg > 0.0)) return 0.0;
  const double t_c = (std::numbers::ln2 - std::log(arg)) / (2.0 * ch.k());
  return std::max(t_c, 0.0);
}

NumericCharacteristicTime characteristic_time_numeric(const GaussianParams& s0,
                                                      const ChannelParams& ch) {
  require_k(ch);
  using Real = long double;
  const Real a0 = Real(s0.nu()) + 0.5L;
  const Real b = Real(ch.n_bath()) + 0.5L;
  const Real c2 = std::cosh(2.0L * Real(s0.r()));
  const Real s2 = std::sinh(2.0L * Real(s0.r()));
  const Real k = ch.k();

  // D(t) - (nbar+1/2)^2; subtracting the asymptote analytically keeps the
  // flat top of D resolvable when t_c is many damping times out.
  auto excess = [&](Real t) {
    const Real u = std::exp(-2.0L * k * t);
    const Real x = a0 * c2 * u + b * -std::expm1(-2.0L * k * t);
    const Real y = a0 * s2 * u;
    return (a0 * c2 - b) * u * (x + b) - y * y;
  };

  const Real horizon = Real(kHorizonInDampingTimes) / k;
  const Real inv_phi = (std::sqrt(5.0L) - 1.0L) / 2.0L;
  Real lo = 0.0L;
  Real hi = horizon;
  Real c = hi - inv_phi * (hi - lo);
  Real d = lo + inv_phi * (hi - lo);
  Real fc = excess(c);
  Real fd = excess(d);
  while (hi - lo > 1e-11L * (1.0L + horizon)) {
    if (fc > fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = excess(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = excess(d);
    }
  }
  const Real t_star = 0.5L * (lo + hi);
  const Real edge = 1e-9L * (1.0L + horizon);
  if (t_star <= edge || t_star >= horizon - edge) return {0.0, false};
  return {static_cast<double>(t_star), true};
}

VisibilityVerdict visibility(const GaussianParams& s0, const ChannelParams& ch) {
  const double c2 = std::cosh(2.0 * s0.r());
  VisibilityVerdict v;
  v.nu_bound = c2 * (ch.n_bath() + 0.5) - 0.5;
  v.nbath_bound = c2 * (s0.nu() + 0.5) - 0.5;
  v.visible = s0.nu() < v.nu_bound;
  if (ch.k() > 0.0) {
    v.t_c = characteristic_time_closed(s0, ch);
    v.interior_maximum = *v.t_c > 0.0;
  }
  return v;
}

TimeGrid TimeGrid::default_for(const ChannelParams& ch) {
  return {0.0, ch.k() > 0.0 ? 10.0 / ch.k() : 10.0, 512};
}

double TimeGrid::at(std::size_t i) const {
  if (i + 1 == samples) return t_end;
  return t_start + (t_end - t_start) * static_cast<double>(i) / static_cast<double>(samples - 1);
}

void TimeGrid::validate() const {
  if (samples < 2) throw DomainError("time grid needs at least 2 samples");
  if (!std::isfinite(t_start) || !std::isfinite(t_end)) throw DomainError("time grid bounds must be finite");
  if (t_start > t_end) throw DomainError("time grid requires t_start <= t_end");
  if (t_start < 0.0) throw DomainError("time grid requires t_start >= 0");
}

std::vector<TrajectoryRow> trajectory(const GaussianParams& s0, const ChannelParams& ch,
                                      const TimeGrid& grid) {
  grid.validate();
  std::vector<TrajectoryRow> rows;
  rows.reserve(grid.samples);
  for (std::size_t i = 0; i < grid.samples; ++i) {
    const auto result = evolve(s0, ch, grid.at(i));
    const auto& s = result.state;
    rows.push_back({result.t, s.nu(), s.r(), s.phi(), s.alpha(),
                    determinant(covariance(s)), entropy(s.nu())});
  }
  return rows;
}

}  // namespace gaussdiss
