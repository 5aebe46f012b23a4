#include "gaussdiss/phase_space.hpp"

#include <cmath>
#include <string>

#include "gaussdiss/errors.hpp"

namespace gaussdiss {

namespace {

// Quadratic form Q(x, p) shared by every Laguerre term, plus the F4/|F1|
// and |F3| factors, assembled from the typeset coefficients.
struct SeriesGeometry {
  double quad = 0.0;
  double prefactor = 1.0;
  double f3_abs = 1.0;
};

SeriesGeometry series_geometry(const GaussianParams& s, PhasePoint pt, SeriesVariant variant) {
  const double r = s.r();
  const double phi = s.phi();
  const double ch = std::cosh(r);
  const double sh = std::sinh(r);
  const double sin_phi = std::sin(phi);
  const double cos_phi = std::cos(phi);
  const Complex e = std::polar(1.0, phi);
  const Complex i{0.0, 1.0};
  const bool corrected = variant == SeriesVariant::corrected;

  const Complex f1 = ch + e * sh;
  Complex f2 = (1.0 - i * sin_phi * sh * f1) / ((ch + cos_phi * sh) * f1);
  if (corrected) f2 = std::conj(f2);
  const double f3_factor = corrected ? sh : sin_phi * sh;
  const Complex f3 = (ch + std::conj(e) * f3_factor) / (ch + e * f3_factor);
  const double f4 = std::sqrt(ch * ch + sh * sh + 2.0 * cos_phi * ch * sh);

  const auto cov = covariance(s);
  const double dx = pt.x - cov.x0;
  const double p_shift = corrected ? pt.p - cov.p0 : pt.p + cov.p0;
  const Complex f5 = 2.0 * p_shift - i * dx * (std::conj(f2) - f2);
  const Complex f4f5 = f4 * f5;

  SeriesGeometry g;
  g.quad = dx * dx / (f4 * f4) + (f4f5 * f4f5).real() / 4.0;
  g.prefactor = f4 / std::abs(f1);
  g.f3_abs = std::abs(f3);
  return g;
}

// Sums terms l = 0.. while keep_going(l) holds; returns the last term magnitude.
template <class Continue>
SeriesSum sum_series(const GaussianParams& s, PhasePoint pt, SeriesVariant variant,
                     Continue keep_going) {
  const auto g = series_geometry(s, pt, variant);
  const double nu = s.nu();
  const double ratio = nu / (nu + 1.0);
  const double arg = 2.0 * g.quad;
  const double gauss = g.prefactor * std::exp(-g.quad);

  SeriesSum out;
  double weight = 1.0 / (kPi * (nu + 1.0));  // nu^l / (pi (nu+1)^{l+1}), with 0^0 = 1
  double sign_factor = 1.0;                  // (-|F3|)^l
  double lag_prev = 0.0;
  double lag = 1.0;
  for (int l = 0; keep_going(l, weight); ++l) {
    const double term = weight * sign_factor * lag * gauss;
    out.value += term;
    out.last_term = std::abs(term);
    out.terms = l + 1;
    if (nu == 0.0) break;
    const double next = l == 0 ? 1.0 - arg : ((2.0 * l + 1.0 - arg) * lag - l * lag_prev) / (l + 1.0);
    lag_prev = lag;
    lag = next;
    weight *= ratio;
    sign_factor *= -g.f3_abs;
  }
  return out;
}

}  // namespace

double wigner_gaussian(const GaussianParams& s, PhasePoint pt) {
  const auto c = covariance(s);
  const double dx = pt.x - c.x0;
  const double dp = pt.p - c.p0;
  const double half = s.nu() + 0.5;
  // sigma_pp / D and sigma_qq / D reproduce cosh(2r)(1 -/+ tanh(2r) cos(phi)) / (nu+1/2)
  const double x_coeff = c.sigma_pp / (2.0 * half * half);
  const double p_coeff = c.sigma_qq / (2.0 * half * half);
  const double cross = std::sin(s.phi()) * std::sinh(2.0 * s.r()) / half;
  return std::exp(-x_coeff * dx * dx - p_coeff * dp * dp + cross * dx * dp) / (2.0 * kPi * half);
}

double wigner_series(const GaussianParams& s, PhasePoint pt, int l_max, SeriesVariant variant) {
  if (l_max < 0) throw DomainError("wigner_series: l_max must be >= 0");
  return sum_series(s, pt, variant, [l_max](int l, double) { return l <= l_max; }).value;
}

SeriesSum wigner_series_adaptive(const GaussianParams& s, PhasePoint pt, SeriesVariant variant,
                                 double tol, int l_cap) {
  return sum_series(s, pt, variant, [tol, l_cap](int l, double envelope) {
    return l == 0 || (l <= l_cap && envelope >= tol);
  });
}

GridBounds auto_bounds(const GaussianParams& s, double n_sigma) {
  const auto c = covariance(s);
  const double wx = n_sigma * std::sqrt(c.sigma_qq);
  const double wp = n_sigma * std::sqrt(c.sigma_pp);
  return {c.x0 - wx, c.x0 + wx, c.p0 - wp, c.p0 + wp};
}

WignerGrid::WignerGrid(GridBounds bounds, std::size_t nx, std::size_t np, std::vector<double> values)
    : bounds_(bounds), nx_(nx), np_(np), values_(std::move(values)) {
  if (nx_ < 2 || np_ < 2) throw DomainError("Wigner grid needs at least 2 samples per axis");
  if (values_.size() != nx_ * np_) throw DomainError("Wigner grid value count mismatch");
  if (!(bounds_.x_min < bounds_.x_max) || !(bounds_.p_min < bounds_.p_max)) {
    throw DomainError("Wigner grid bounds must satisfy min < max");
  }
}

double WignerGrid::dx() const { return (bounds_.x_max - bounds_.x_min) / static_cast<double>(nx_ - 1); }
double WignerGrid::dp() const { return (bounds_.p_max - bounds_.p_min) / static_cast<double>(np_ - 1); }
double WignerGrid::x(std::size_t i) const { return i + 1 == nx_ ? bounds_.x_max : bounds_.x_min + dx() * i; }
double WignerGrid::p(std::size_t j) const { return j + 1 == np_ ? bounds_.p_max : bounds_.p_min + dp() * j; }

WignerGrid wigner_grid(const GaussianParams& s, const GridBounds& bounds, std::size_t nx,
                       std::size_t np, WignerForm form) {
  for (double b : {bounds.x_min, bounds.x_max, bounds.p_min, bounds.p_max}) {
    if (!std::isfinite(b)) throw DomainError("Wigner grid bounds must be finite");
  }
  if (nx < 2 || np < 2) throw DomainError("Wigner grid needs at least 2 samples per axis");
  if (nx > kMaxGridSamples / np) {
    throw ResourceLimit("Wigner grid of " + std::to_string(nx) + "x" + std::to_string(np) +
                        " exceeds 16e6 samples");
  }
  WignerGrid shape(bounds, nx, np, std::vector<double>(nx * np));
  std::vector<double> values(nx * np);
  for (std::size_t i = 0; i < nx; ++i) {
    for (std::size_t j = 0; j < np; ++j) {
      const PhasePoint pt{shape.x(i), shape.p(j)};
      double w = 0.0;
      switch (form) {
        case WignerForm::gaussian:
          w = wigner_gaussian(s, pt);
          break;
        case WignerForm::series_as_printed:
          w = wigner_series_adaptive(s, pt, SeriesVariant::as_printed).value;
          break;
        case WignerForm::series_corrected:
          w = wigner_series_adaptive(s, pt, SeriesVariant::corrected).value;
          break;
      }
      values[i * np + j] = w;
    }
  }
  return WignerGrid(bounds, nx, np, std::move(values));
}

namespace {

double trapezoid_weight(std::size_t i, std::size_t n) { return (i == 0 || i + 1 == n) ? 0.5 : 1.0; }

}  // namespace

double normalization(const WignerGrid& g) {
  double total = 0.0;
  for (std::size_t i = 0; i < g.nx(); ++i) {
    for (std::size_t j = 0; j < g.np(); ++j) {
      total += trapezoid_weight(i, g.nx()) * trapezoid_weight(j, g.np()) * g.value(i, j);
    }
  }
  return total * g.dx() * g.dp();
}

bool covers(const WignerGrid& g, const CovarianceMatrix& c, double n_sigma) {
  const double wx = n_sigma * std::sqrt(c.sigma_qq);
  const double wp = n_sigma * std::sqrt(c.sigma_pp);
  const double slack = 1e-12 * (1.0 + wx + wp + std::abs(c.x0) + std::abs(c.p0));
  const auto& b = g.bounds();
  return b.x_min <= c.x0 - wx + slack && b.x_max >= c.x0 + wx - slack &&
         b.p_min <= c.p0 - wp + slack && b.p_max >= c.p0 + wp - slack;
}

CovarianceMatrix covariance_from_grid(const WignerGrid& g) {
  double mass = 0.0, mx = 0.0, mp = 0.0;
  for (std::size_t i = 0; i < g.nx(); ++i) {
    for (std::size_t j = 0; j < g.np(); ++j) {
      const double w = trapezoid_weight(i, g.nx()) * trapezoid_weight(j, g.np()) * g.value(i, j);
      mass += w;
      mx += w * g.x(i);
      mp += w * g.p(j);
    }
  }
  mx /= mass;
  mp /= mass;
  double sqq = 0.0, spp = 0.0, sqp = 0.0;
  for (std::size_t i = 0; i < g.nx(); ++i) {
    const double dx = g.x(i) - mx;
    for (std::size_t j = 0; j < g.np(); ++j) {
      const double dp = g.p(j) - mp;
      const double w = trapezoid_weight(i, g.nx()) * trapezoid_weight(j, g.np()) * g.value(i, j);
      sqq += w * dx * dx;
      spp += w * dp * dp;
      sqp += w * dx * dp;
    }
  }
  CovarianceMatrix c;
  c.sigma_qq = sqq / mass;
  c.sigma_pp = spp / mass;
  c.sigma_qp = sqp / mass;
  c.x0 = mx;
  c.p0 = mp;
  return c;
}

}  // namespace gaussdiss
