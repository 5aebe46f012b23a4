#include "gaussdiss/fock_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <unsupported/Eigen/MatrixFunctions>

#include "gaussdiss/errors.hpp"

namespace gaussdiss {

namespace {

constexpr double kHermiticityTol = 1e-10;
constexpr double kTraceTol = 1e-8;
constexpr double kPsdTol = 1e-9;

std::string scientific(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}
constexpr double kCroppedMassTol = 1e-8;
constexpr double kEigenFloor = 1e-14;

// Diagonal of a a^dagger in the truncated basis: j + 1, except 0 on the top level.
double raised(int j, int dim) { return j + 1 < dim ? j + 1.0 : 0.0; }

}  // namespace

FockState::FockState(ComplexMatrix rho) : rho_(std::move(rho)) {
  if (rho_.rows() != rho_.cols() || rho_.rows() == 0) {
    throw DomainError("FockState requires a non-empty square matrix");
  }
}

double FockState::trace() const { return rho_.trace().real(); }

double FockState::hermiticity_error() const {
  return (rho_ - rho_.adjoint()).cwiseAbs().maxCoeff();
}

double FockState::top_occupancy() const { return rho_(dim() - 1, dim() - 1).real(); }

Eigen::VectorXd FockState::eigenvalues() const {
  const ComplexMatrix herm = 0.5 * (rho_ + rho_.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(herm, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

std::vector<double> FockState::diagonal() const {
  std::vector<double> d(static_cast<std::size_t>(dim()));
  for (int n = 0; n < dim(); ++n) d[n] = rho_(n, n).real();
  return d;
}

void FockState::validate() const {
  const double herm = hermiticity_error();
  if (herm > kHermiticityTol) {
    throw ConsistencyError("density matrix not Hermitian (max asymmetry " + std::to_string(herm) + ")");
  }
  const double tr = trace();
  if (std::abs(tr - 1.0) > kTraceTol) {
    throw ConsistencyError("density matrix trace " + std::to_string(tr));
  }
  const double lowest = eigenvalues().minCoeff();
  if (lowest < -kPsdTol) {
    throw PsdViolation("density matrix eigenvalue " + std::to_string(lowest));
  }
}

ComplexMatrix annihilation(int dim) {
  ComplexMatrix a = ComplexMatrix::Zero(dim, dim);
  for (int n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return a;
}

FockState build_initial(const GaussianParams& s0, int dim, BuildInfo* info) {
  if (dim < 1 || dim > kMaxOracleDim) {
    throw ResourceLimit("oracle dimension must lie in [1, " + std::to_string(kMaxOracleDim) + "]");
  }
  const double reach = mean_photon_number(s0) + 6.0 * std::sqrt(photon_number_variance(s0));
  if (reach >= dim) {
    throw DimensionTooSmall("dimension " + std::to_string(dim) + " below mean + 6 sd = " +
                            std::to_string(reach));
  }

  // Build in a padded space so truncation artefacts of the exponentials stay
  // far above the levels that are kept.
  const int work = dim + std::max(dim, 40);
  const ComplexMatrix a = annihilation(work);
  const ComplexMatrix ad = a.adjoint();
  const Complex alpha = s0.alpha();
  const Complex squeeze = 0.5 * s0.r() * std::polar(1.0, s0.phi());

  const ComplexMatrix displace = (alpha * ad - std::conj(alpha) * a).exp();
  const ComplexMatrix squeeze_op = (squeeze * ad * ad - std::conj(squeeze) * a * a).exp();

  Eigen::VectorXcd thermal = Eigen::VectorXcd::Zero(work);
  if (s0.nu() == 0.0) {
    thermal(0) = 1.0;
  } else {
    const double log_ratio = std::log(s0.nu() / (s0.nu() + 1.0));
    for (int n = 0; n < work; ++n) thermal(n) = std::exp(n * log_ratio - std::log1p(s0.nu()));
  }

  const ComplexMatrix u = displace * squeeze_op;
  const ComplexMatrix full = u * thermal.asDiagonal() * u.adjoint();
  ComplexMatrix kept = full.topLeftCorner(dim, dim);
  const double kept_trace = kept.trace().real();
  const double cropped = 1.0 - kept_trace;
  if (info) *info = {work, cropped};
  if (cropped > kCroppedMassTol) {
    throw DimensionTooSmall("dimension " + std::to_string(dim) + " drops probability " + scientific(cropped));
  }
  kept /= kept_trace;
  return FockState(0.5 * (kept + kept.adjoint()));
}

ComplexMatrix lindblad_rhs(const ComplexMatrix& rho, const ChannelParams& ch, bool interaction_picture) {
  const int dim = static_cast<int>(rho.rows());
  const double decay = ch.k() * (ch.n_bath() + 1.0);
  const double pump = ch.k() * ch.n_bath();
  const double omega = interaction_picture ? 0.0 : ch.omega();
  std::vector<double> root(static_cast<std::size_t>(dim) + 1);
  for (int j = 0; j <= dim; ++j) root[j] = std::sqrt(static_cast<double>(j));

  ComplexMatrix out(dim, dim);
  for (int n = 0; n < dim; ++n) {
    for (int m = 0; m < dim; ++m) {
      const Complex value = rho(m, n);
      Complex d = Complex(0.0, -omega * (m - n)) * value;
      // k (nbar + 1) (2 a rho a^dagger - a^dagger a rho - rho a^dagger a)
      if (m + 1 < dim && n + 1 < dim) d += 2.0 * decay * root[m + 1] * root[n + 1] * rho(m + 1, n + 1);
      d -= decay * static_cast<double>(m + n) * value;
      // k nbar (2 a^dagger rho a - a a^dagger rho - rho a a^dagger)
      if (m > 0 && n > 0) d += 2.0 * pump * root[m] * root[n] * rho(m - 1, n - 1);
      d -= pump * (raised(m, dim) + raised(n, dim)) * value;
      out(m, n) = d;
    }
  }
  return out;
}

IntegratorConfig IntegratorConfig::defaults(const ChannelParams& ch, double t_final) {
  IntegratorConfig cfg;
  cfg.dt = ch.k() > 0.0 ? 1e-3 / ch.k() : 1e-3;
  cfg.t_final = t_final;
  return cfg;
}

void IntegratorConfig::validate() const {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw DomainError("integrator dt must be > 0");
  if (!(t_final >= 0.0) || !std::isfinite(t_final)) throw DomainError("integrator t_final must be >= 0");
  if (!(trunc_guard > 0.0 && trunc_guard < 1.0)) throw DomainError("trunc_guard must lie in (0, 1)");
}

namespace {

// Propagates a density matrix in fixed steps, checking trace and truncation.
class Propagator {
 public:
  Propagator(const FockState& rho0, const ChannelParams& ch, const IntegratorConfig& cfg)
      : ch_(ch), cfg_(cfg), rho_(rho0.matrix()), trace0_(rho0.trace()) {
    cfg_.validate();
    if (cfg_.method == IntegrationMethod::liouvillian_expm && rho0.dim() > kMaxExpmDim) {
      throw ResourceLimit("liouvillian_expm supports dim <= " + std::to_string(kMaxExpmDim));
    }
    check();
  }

  void advance_to(double target, const TrajectoryHook& hook) {
    const double span = target - t_;
    if (span < 0.0) throw DomainError("integration times must be ascending");
    if (span == 0.0) return;
    if (cfg_.method == IntegrationMethod::liouvillian_expm) {
      apply_sector_exponentials(span);
      t_ = target;
      check();
      if (hook) hook(t_, lab_frame());
      return;
    }
    const auto steps = static_cast<long>(std::ceil(span / cfg_.dt - 1e-9));
    const double h = span / static_cast<double>(steps);
    const double start = t_;
    for (long i = 1; i <= steps; ++i) {
      rk4_step(h);
      t_ = i == steps ? target : start + h * static_cast<double>(i);
      check();
      if (hook) hook(t_, lab_frame());
    }
  }

  FockState lab_frame() const {
    if (!cfg_.interaction_picture || ch_.omega() == 0.0) return FockState(rho_);
    ComplexMatrix lab = rho_;
    for (int n = 0; n < lab.cols(); ++n) {
      for (int m = 0; m < lab.rows(); ++m) lab(m, n) *= std::polar(1.0, -ch_.omega() * (m - n) * t_);
    }
    return FockState(std::move(lab));
  }

 private:
  void rk4_step(double h) {
    const bool ip = cfg_.interaction_picture;
    const ComplexMatrix k1 = lindblad_rhs(rho_, ch_, ip);
    const ComplexMatrix k2 = lindblad_rhs(rho_ + 0.5 * h * k1, ch_, ip);
    const ComplexMatrix k3 = lindblad_rhs(rho_ + 0.5 * h * k2, ch_, ip);
    const ComplexMatrix k4 = lindblad_rhs(rho_ + h * k3, ch_, ip);
    rho_ += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }

  // The generator never mixes elements with different m - n, so the
  // superoperator exponential factorizes into one small block per sector.
  void apply_sector_exponentials(double span) {
    const int dim = static_cast<int>(rho_.rows());
    const double decay = ch_.k() * (ch_.n_bath() + 1.0);
    const double pump = ch_.k() * ch_.n_bath();
    const double omega = cfg_.interaction_picture ? 0.0 : ch_.omega();
    for (int shift = -(dim - 1); shift <= dim - 1; ++shift) {
      const int len = dim - std::abs(shift);
      const int m0 = std::max(shift, 0);
      const int n0 = std::max(-shift, 0);
      ComplexMatrix gen = ComplexMatrix::Zero(len, len);
      Eigen::VectorXcd v(len);
      for (int j = 0; j < len; ++j) {
        const int m = m0 + j;
        const int n = n0 + j;
        v(j) = rho_(m, n);
        gen(j, j) = Complex(-decay * (m + n) - pump * (raised(m, dim) + raised(n, dim)), -omega * shift);
        if (j + 1 < len) gen(j, j + 1) = 2.0 * decay * std::sqrt((m + 1.0) * (n + 1.0));
        if (j > 0) gen(j, j - 1) = 2.0 * pump * std::sqrt(static_cast<double>(m) * n);
      }
      const ComplexMatrix prop = (gen * span).exp();
      const Eigen::VectorXcd w = prop * v;
      for (int j = 0; j < len; ++j) rho_(m0 + j, n0 + j) = w(j);
    }
  }

  void check() const {
    const double tr = rho_.trace().real();
    if (std::abs(tr - trace0_) > kTraceTol) throw IntegrationFailure("trace drift " + std::to_string(tr - trace0_), t_);
    const double top = rho_(rho_.rows() - 1, rho_.cols() - 1).real();
    if (top > cfg_.trunc_guard) {
      throw IntegrationFailure("top Fock level occupancy " + std::to_string(top) + " exceeds guard", t_);
    }
  }

  ChannelParams ch_;
  IntegratorConfig cfg_;
  ComplexMatrix rho_;
  double trace0_;
  double t_ = 0.0;
};

}  // namespace

FockState evolve_numeric(const FockState& rho0, const ChannelParams& ch, const IntegratorConfig& cfg,
                         const TrajectoryHook& hook) {
  Propagator prop(rho0, ch, cfg);
  prop.advance_to(cfg.t_final, hook);
  return prop.lab_frame();
}

std::vector<FockState> evolve_numeric_at(const FockState& rho0, const ChannelParams& ch,
                                         const IntegratorConfig& cfg, std::span<const double> times) {
  Propagator prop(rho0, ch, cfg);
  std::vector<FockState> out;
  out.reserve(times.size());
  for (double t : times) {
    prop.advance_to(t, {});
    out.push_back(prop.lab_frame());
  }
  return out;
}

FockMoments moments(const FockState& state) {
  const auto& rho = state.matrix();
  const int dim = state.dim();
  FockMoments m;
  for (int j = 0; j < dim; ++j) {
    m.mean_n += j * rho(j, j).real();
    if (j + 1 < dim) m.mean_a += std::sqrt(j + 1.0) * rho(j + 1, j);
    if (j + 2 < dim) m.mean_aa += std::sqrt((j + 1.0) * (j + 2.0)) * rho(j + 2, j);
  }
  return m;
}

GaussianParams gaussian_from_moments(const FockMoments& m) {
  const Complex alpha = m.mean_a;
  const double excess = m.mean_n - std::norm(alpha) + 0.5;  // A + 1/2 = (nu+1/2) cosh 2r
  const Complex pair = m.mean_aa - alpha * alpha;          // (nu+1/2) e^{i phi} sinh 2r
  const double mag = std::abs(pair);
  const double half = std::sqrt(std::max((excess - mag) * (excess + mag), 0.0));
  const double nu = std::max(half - 0.5, 0.0);
  const double r = half > 0.0 ? 0.5 * std::asinh(mag / half) : 0.0;
  const double phi = mag > 0.0 ? std::arg(pair) : 0.0;
  return {alpha, r, phi, nu};
}

double entropy_numeric(const FockState& rho) {
  const auto eig = rho.eigenvalues();
  double s = 0.0;
  for (double lambda : eig) {
    if (lambda < -kPsdTol) throw PsdViolation("density matrix eigenvalue " + std::to_string(lambda));
    if (lambda > kEigenFloor) s -= lambda * std::log(lambda);
  }
  return s;
}

}  // namespace gaussdiss
