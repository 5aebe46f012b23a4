#pragma once

#include <array>
#include <complex>

namespace gaussdiss {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

/// Single-mode Gaussian state D(alpha) S(r, phi) rho_nu S^dagger D^dagger.
///
/// The constructor validates r >= 0, nu >= 0 and finiteness but keeps phi as
/// given, so evolved states can carry a winding phase phi0 - 2 omega t.
/// Use canonical() for user-entered parameters; it reduces phi to (-pi, pi].
class GaussianParams {
 public:
  GaussianParams() = default;
  GaussianParams(Complex alpha, double r, double phi, double nu);

  static GaussianParams canonical(Complex alpha, double r, double phi, double nu);
  static GaussianParams vacuum() { return {}; }
  static GaussianParams thermal(double nu) { return {Complex{}, 0.0, 0.0, nu}; }
  static GaussianParams coherent(Complex alpha) { return {alpha, 0.0, 0.0, 0.0}; }
  static GaussianParams squeezed_vacuum(double r, double phi = 0.0) {
    return {Complex{}, r, phi, 0.0};
  }

  Complex alpha() const noexcept { return alpha_; }
  double r() const noexcept { return r_; }
  double phi() const noexcept { return phi_; }
  double nu() const noexcept { return nu_; }
  bool is_pure() const noexcept { return nu_ == 0.0; }

  GaussianParams with_reduced_phase() const;

 private:
  Complex alpha_{};
  double r_ = 0.0;
  double phi_ = 0.0;
  double nu_ = 0.0;
};

/// Dissipative thermal channel: field frequency omega, damping k, bath occupancy n_bath.
class ChannelParams {
 public:
  ChannelParams() = default;
  ChannelParams(double omega, double k, double n_bath);

  double omega() const noexcept { return omega_; }
  double k() const noexcept { return k_; }
  double n_bath() const noexcept { return n_bath_; }

 private:
  double omega_ = 0.0;
  double k_ = 0.0;
  double n_bath_ = 0.0;
};

/// Quadrature second moments and means, with a = (x + i p) / sqrt(2).
struct CovarianceMatrix {
  double sigma_qq = 0.5;
  double sigma_pp = 0.5;
  double sigma_qp = 0.0;
  double x0 = 0.0;
  double p0 = 0.0;

  /// Eigenvalues in ascending order.
  std::array<double, 2> eigenvalues() const;
  /// Angle in (-pi/2, pi/2] of the major principal axis, measured from the x axis.
  double major_axis_angle() const;
};

CovarianceMatrix covariance(const GaussianParams& s);
double determinant(const CovarianceMatrix& c);

/// von Neumann entropy in nats of a Gaussian state with thermal occupancy nu.
double entropy(double nu);

/// Inverse of D = (nu + 1/2)^2. Throws UncertaintyViolation when D < 1/4 - tol.
double nu_from_determinant(double det, double tol = 1e-10);

double mean_photon_number(const GaussianParams& s);

/// Photon-number variance <n^2> - <n>^2 of the Gaussian state.
double photon_number_variance(const GaussianParams& s);

/// Reduces an angle to (-pi, pi].
double reduce_phase(double phi);

}  // namespace gaussdiss
