#pragma once

#include <Eigen/Dense>
#include <functional>
#include <iosfwd>
#include <span>
#include <vector>

#include "gaussdiss/gaussian_core.hpp"

namespace gaussdiss {

using ComplexMatrix = Eigen::MatrixXcd;

/// Truncated Fock-basis density matrix. Immutable snapshot; validated on request.
class FockState {
 public:
  explicit FockState(ComplexMatrix rho);

  int dim() const noexcept { return static_cast<int>(rho_.rows()); }
  const ComplexMatrix& matrix() const noexcept { return rho_; }

  double trace() const;
  double hermiticity_error() const;  // max |rho - rho^dagger|
  double top_occupancy() const;      // rho_{N-1,N-1}
  Eigen::VectorXd eigenvalues() const;
  std::vector<double> diagonal() const;

  /// Throws ConsistencyError on broken Hermiticity (1e-10) or trace (1e-8),
  /// PsdViolation on an eigenvalue below -1e-9.
  void validate() const;

 private:
  ComplexMatrix rho_;
};

struct BuildInfo {
  int working_dim = 0;  // padded dimension used for the operator exponentials
  double cropped_mass = 0.0;  // probability beyond dim removed by renormalization
};

/// D(alpha) S(r, phi) rho_nu S^dagger D^dagger in a Fock space of dimension dim.
/// Throws DimensionTooSmall when mean + 6 sd of the photon number reaches dim
/// or when more than 1e-8 of the probability lies beyond dim.
FockState build_initial(const GaussianParams& s0, int dim, BuildInfo* info = nullptr);

/// Truncated annihilation operator (dim x dim).
ComplexMatrix annihilation(int dim);

/// Right-hand side of the master equation, elementwise on the truncated basis.
/// Matches the dense products of the truncated ladder operators exactly.
ComplexMatrix lindblad_rhs(const ComplexMatrix& rho, const ChannelParams& ch,
                           bool interaction_picture = false);

enum class IntegrationMethod { rk4, liouvillian_expm };

struct IntegratorConfig {
  double dt = 1e-2;
  IntegrationMethod method = IntegrationMethod::rk4;
  double t_final = 0.0;
  double trunc_guard = 1e-8;
  // Integrate without the -i omega [n, .] term and restore the phases exactly afterwards.
  bool interaction_picture = false;

  /// dt = 1e-3 / k (1e-3 when k = 0), rk4, guard 1e-8.
  static IntegratorConfig defaults(const ChannelParams& ch, double t_final);
  void validate() const;
};

inline constexpr int kMaxOracleDim = 200;
inline constexpr int kMaxExpmDim = 40;

using TrajectoryHook = std::function<void(double t, const FockState& rho)>;

/// Integrates to cfg.t_final. The hook, when set, sees every accepted step.
FockState evolve_numeric(const FockState& rho0, const ChannelParams& ch, const IntegratorConfig& cfg,
                         const TrajectoryHook& hook = {});

/// Snapshots at each of the ascending times; cfg.t_final is ignored.
std::vector<FockState> evolve_numeric_at(const FockState& rho0, const ChannelParams& ch,
                                         const IntegratorConfig& cfg, std::span<const double> times);

struct FockMoments {
  Complex mean_a;   // tr[a rho]
  double mean_n = 0.0;  // tr[a^dagger a rho]
  Complex mean_aa;  // tr[a^2 rho]
};

FockMoments moments(const FockState& rho);

/// Gaussian parameters reproducing the given first and second moments.
GaussianParams gaussian_from_moments(const FockMoments& m);

/// -sum lambda ln lambda over eigenvalues above 1e-14.
double entropy_numeric(const FockState& rho);

/// Binary snapshot: "FOCKRHO1", u32 dim, u32 reserved, then dim*dim (re, im)
/// little-endian f64 pairs, row-major.
void write_snapshot(std::ostream& out, const FockState& rho);
FockState read_snapshot(std::istream& in);

}  // namespace gaussdiss
