#include "gaussdiss/gaussian_core.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gaussdiss/errors.hpp"

namespace gaussdiss {

namespace {

void require_finite(double v, const char* name) {
  if (!std::isfinite(v)) throw DomainError(std::string(name) + " must be finite");
}

void require_non_negative(double v, const char* name) {
  require_finite(v, name);
  if (v < 0.0) throw DomainError(std::string(name) + " must be >= 0");
}

}  // namespace

GaussianParams::GaussianParams(Complex alpha, double r, double phi, double nu)
    : alpha_(alpha), r_(r), phi_(phi), nu_(nu) {
  require_finite(alpha.real(), "alpha.real");
  require_finite(alpha.imag(), "alpha.imag");
  require_non_negative(r, "r");
  require_finite(phi, "phi");
  require_non_negative(nu, "nu");
}

GaussianParams GaussianParams::canonical(Complex alpha, double r, double phi, double nu) {
  require_finite(phi, "phi");
  return {alpha, r, reduce_phase(phi), nu};
}

GaussianParams GaussianParams::with_reduced_phase() const {
  return {alpha_, r_, reduce_phase(phi_), nu_};
}

ChannelParams::ChannelParams(double omega, double k, double n_bath)
    : omega_(omega), k_(k), n_bath_(n_bath) {
  require_finite(omega, "omega");
  require_non_negative(k, "k");
  require_non_negative(n_bath, "n_bath");
}

double reduce_phase(double phi) {
  double reduced = std::remainder(phi, 2.0 * kPi);  // [-pi, pi]
  if (reduced <= -kPi) reduced += 2.0 * kPi;
  return reduced;
}

std::array<double, 2> CovarianceMatrix::eigenvalues() const {
  const double mean = 0.5 * (sigma_qq + sigma_pp);
  const double half_gap = std::hypot(0.5 * (sigma_qq - sigma_pp), sigma_qp);
  const double hi = mean + half_gap;
  // product form keeps the small eigenvalue accurate under strong squeezing
  const double lo = (sigma_qq * sigma_pp - sigma_qp * sigma_qp) / hi;
  return {lo, hi};
}

double CovarianceMatrix::major_axis_angle() const {
  double angle = 0.5 * std::atan2(2.0 * sigma_qp, sigma_qq - sigma_pp);
  if (angle <= -0.5 * kPi) angle += kPi;
  return angle;
}

CovarianceMatrix covariance(const GaussianParams& s) {
  const double scale = s.nu() + 0.5;
  const double two_r = 2.0 * s.r();
  const double c = std::cos(s.phi());
  // cosh 2r +/- sinh 2r cos phi, written to avoid cancellation at large r
  const double plus = 0.5 * (std::exp(two_r) * (1.0 + c) + std::exp(-two_r) * (1.0 - c));
  const double minus = 0.5 * (std::exp(two_r) * (1.0 - c) + std::exp(-two_r) * (1.0 + c));
  CovarianceMatrix m;
  m.sigma_qq = scale * plus;
  m.sigma_pp = scale * minus;
  m.sigma_qp = scale * std::sin(s.phi()) * std::sinh(two_r);
  m.x0 = std::sqrt(2.0) * s.alpha().real();
  m.p0 = std::sqrt(2.0) * s.alpha().imag();
  return m;
}

double determinant(const CovarianceMatrix& c) {
  // Kahan's fma form: correctly rounded for the stored entries. The entries
  // themselves carry relative error ~eps, amplified by cosh^2 2r here.
  const double w = c.sigma_qp * c.sigma_qp;
  const double e = std::fma(-c.sigma_qp, c.sigma_qp, w);
  return std::fma(c.sigma_qq, c.sigma_pp, -w) + e;
}

double entropy(double nu) {
  if (!(nu >= 0.0)) throw DomainError("entropy: nu must be >= 0");
  if (nu == 0.0) return 0.0;
  return (nu + 1.0) * std::log1p(nu) - nu * std::log(nu);
}

double nu_from_determinant(double det, double tol) {
  if (!(det >= 0.25 - tol)) {
    throw UncertaintyViolation("determinant " + std::to_string(det) + " below 1/4");
  }
  return std::max(std::sqrt(std::max(det, 0.25)) - 0.5, 0.0);
}

double mean_photon_number(const GaussianParams& s) {
  const double sh = std::sinh(s.r());
  return s.nu() + (2.0 * s.nu() + 1.0) * sh * sh + std::norm(s.alpha());
}

double photon_number_variance(const GaussianParams& s) {
  const double sh = std::sinh(s.r());
  const double ch = std::cosh(s.r());
  const double n_excess = s.nu() + (2.0 * s.nu() + 1.0) * sh * sh;
  const Complex m = (2.0 * s.nu() + 1.0) * std::polar(sh * ch, s.phi());
  const Complex a = s.alpha();
  return n_excess * (n_excess + 1.0) + std::norm(m) + std::norm(a) * (2.0 * n_excess + 1.0) +
         2.0 * (std::conj(a) * std::conj(a) * m).real();
}

}  // namespace gaussdiss
