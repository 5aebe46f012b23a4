#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gaussdiss/gaussian_core.hpp"

namespace gaussdiss {

/// Region the randomized oracle comparison draws initial states from.
struct ValidationEnvelope {
  double r0_min = 0.0;
  double r0_max = 1.5;
  double nu0_max = 5.0;
  double alpha_max = 2.0;
  std::vector<double> n_bath_choices{0.0, 0.5};
  double k = 0.1;
  double omega = 1.0;
  double t_max = 30.0;
  int times_per_state = 5;
};

struct ValidationTolerances {
  // |numeric - closed| <= relative * max(|closed|, relative_floor) for nu, r and |alpha|
  double relative = 1e-4;
  double relative_floor = 1e-6;  // only guards closed values at or near zero
  double entropy = 1e-3;
  double photon_number = 1e-6;
  int photon_n_max = 30;
};

struct ValidationOptions {
  std::uint64_t seed = 42;
  int dim = 60;
  int n_states = 20;
  // Draws rejected by the truncation guard are redrawn up to this many times per state.
  int max_draws_per_state = 500;
  ValidationEnvelope envelope;
  ValidationTolerances tolerances;
};

struct StateFailure {
  int index = 0;
  std::string message;
};

struct SampledState {
  GaussianParams state;
  double n_bath = 0.0;
};

struct ValidationReport {
  int states_checked = 0;
  int draws_rejected = 0;
  double max_dev_nu = 0.0;      // scaled as in ValidationTolerances::relative
  double max_dev_r = 0.0;
  double max_dev_alpha = 0.0;
  double max_dev_entropy = 0.0;  // absolute, nats
  double max_dev_photon = 0.0;   // absolute
  std::vector<SampledState> states;
  std::vector<StateFailure> failures;
  std::vector<std::string> breaches;

  bool passed() const { return failures.empty() && breaches.empty(); }
};

/// Closed forms against the Fock-space master-equation integration on randomized states.
ValidationReport run_validation(const ValidationOptions& options);

}  // namespace gaussdiss
