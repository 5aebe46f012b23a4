#pragma once

#include <cstddef>
#include <vector>

#include "gaussdiss/gaussian_core.hpp"

namespace gaussdiss {

/// Exponent applied to (1+A)^2 - |B|^2 in the normalization constant pi Q(0).
/// The typeset +1/2 breaks normalization (thermal sums to (1+nu)^2); -1/2 is correct.
enum class PiQ0Exponent { repaired, as_printed };

struct PndCoefficients {
  double A = 0.0;
  double A_tilde = 0.0;
  Complex B;
  Complex B_tilde;
  Complex C;
  Complex C_tilde;
  double q0 = 1.0;  // pi Q(0)
};

PndCoefficients pnd_coefficients(const GaussianParams& s,
                                 PiQ0Exponent exponent = PiQ0Exponent::repaired);

struct PhotonDistribution {
  std::vector<double> probs;  // P_0 .. P_{n_max}
  int n_max = 0;
  double tail_mass = 0.0;  // 1 - sum(probs)

  double sum() const;
  double mean() const;
};

/// Unvalidated P_0..P_{n_max} from the Hermite double sum. Used directly only
/// to inspect the as-printed normalization; everything else goes through
/// photon_number_distribution.
std::vector<double> photon_number_terms(const PndCoefficients& coeffs, double phi, int n_max);

/// P_n for n <= n_max with range checks and clamping. Throws DomainError for n_max < 0.
PhotonDistribution photon_number_distribution(const GaussianParams& s, int n_max);

/// Grows n_max until the residual mass falls below tail_tol (capped at n_cap).
PhotonDistribution photon_number_distribution_adaptive(const GaussianParams& s,
                                                       double tail_tol = 1e-10,
                                                       int n_cap = 4000);

struct OscillationScore {
  int count = 0;       // strict interior local minima before 99.9% cumulative mass
  double depth = 0.0;  // largest valley contrast (peak - valley) / peak, in [0, 1]
};

OscillationScore oscillation_score(const PhotonDistribution& d);

}  // namespace gaussdiss
