#pragma once

#include <cstddef>
#include <vector>

#include "gaussdiss/gaussian_core.hpp"

namespace gaussdiss {

struct PhasePoint {
  double x = 0.0;
  double p = 0.0;
};

/// Which typeset coefficients the Laguerre series uses.
///  as_printed: F2, F3 and F5 exactly as typeset, including 2(p + p0).
///  corrected:  F2 conjugated (opposite squeeze-phase convention), F3 with
///              sinh r in place of sin(phi) sinh r, F5 with 2(p - p0).
enum class SeriesVariant { as_printed, corrected };

enum class WignerForm { gaussian, series_as_printed, series_corrected };

/// Normalized Gaussian Wigner function centred on (x0, p0).
double wigner_gaussian(const GaussianParams& s, PhasePoint pt);

/// Partial sum l = 0..l_max of the thermal-Laguerre expansion.
double wigner_series(const GaussianParams& s, PhasePoint pt, int l_max, SeriesVariant variant);

struct SeriesSum {
  double value = 0.0;
  int terms = 0;
  double last_term = 0.0;  // magnitude of the final term included
};

/// Sums until the term envelope (nu/(nu+1))^l / (pi (nu+1)) drops below tol, or l = l_cap.
/// |L_l(y) e^{-y/2}| <= 1, so the envelope bounds every remaining term.
SeriesSum wigner_series_adaptive(const GaussianParams& s, PhasePoint pt, SeriesVariant variant,
                                 double tol = 1e-12, int l_cap = 500);

struct GridBounds {
  double x_min = -4.0;
  double x_max = 4.0;
  double p_min = -4.0;
  double p_max = 4.0;
};

/// Box of +/- n_sigma marginal standard deviations around the state's centre.
GridBounds auto_bounds(const GaussianParams& s, double n_sigma = 6.0);

class WignerGrid {
 public:
  WignerGrid(GridBounds bounds, std::size_t nx, std::size_t np, std::vector<double> values);

  const GridBounds& bounds() const noexcept { return bounds_; }
  std::size_t nx() const noexcept { return nx_; }
  std::size_t np() const noexcept { return np_; }
  double x(std::size_t i) const;
  double p(std::size_t j) const;
  double dx() const;
  double dp() const;
  /// Row-major over x: value(i, j) = W(x_i, p_j).
  double value(std::size_t i, std::size_t j) const { return values_[i * np_ + j]; }
  const std::vector<double>& values() const noexcept { return values_; }

 private:
  GridBounds bounds_;
  std::size_t nx_;
  std::size_t np_;
  std::vector<double> values_;
};

inline constexpr std::size_t kMaxGridSamples = 16'000'000;

WignerGrid wigner_grid(const GaussianParams& s, const GridBounds& bounds, std::size_t nx,
                       std::size_t np, WignerForm form = WignerForm::gaussian);

/// 2-D trapezoidal integral of the grid.
double normalization(const WignerGrid& g);

/// True when the grid extends n_sigma marginal standard deviations past the centre on every side.
bool covers(const WignerGrid& g, const CovarianceMatrix& c, double n_sigma = 6.0);

/// First and second moments of the sampled function by trapezoidal quadrature.
CovarianceMatrix covariance_from_grid(const WignerGrid& g);

}  // namespace gaussdiss
