#include "gaussdiss/validation.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "gaussdiss/channel_dynamics.hpp"
#include "gaussdiss/errors.hpp"
#include "gaussdiss/fock_oracle.hpp"
#include "gaussdiss/fock_statistics.hpp"

namespace gaussdiss {

namespace {

struct Draw {
  SampledState sample;
  FockState rho;
};

class StateSampler {
 public:
  StateSampler(const ValidationOptions& opt) : opt_(opt), rng_(opt.seed) {}

  // Draws until the truncation guard accepts the state; rethrows the last
  // guard error when the draw budget runs out.
  Draw next(int& rejected) {
    const auto& env = opt_.envelope;
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<std::size_t> bath(0, env.n_bath_choices.size() - 1);
    for (int attempt = 1;; ++attempt) {
      const double r0 = env.r0_min + (env.r0_max - env.r0_min) * unit(rng_);
      const double nu0 = env.nu0_max * unit(rng_);
      const double amp = env.alpha_max * unit(rng_);
      const double arg = kPi * (2.0 * unit(rng_) - 1.0);
      const double phi0 = kPi * (2.0 * unit(rng_) - 1.0);
      const double nb = env.n_bath_choices[bath(rng_)];
      const auto s0 = GaussianParams::canonical(std::polar(amp, arg), r0, phi0, nu0);
      try {
        return {{s0, nb}, build_initial(s0, opt_.dim)};
      } catch (const DimensionTooSmall&) {
        if (attempt >= opt_.max_draws_per_state) throw;
        ++rejected;
      }
    }
  }

  std::vector<double> times() {
    std::uniform_real_distribution<double> t(0.0, opt_.envelope.t_max);
    std::vector<double> out(static_cast<std::size_t>(opt_.envelope.times_per_state));
    for (auto& v : out) v = t(rng_);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  const ValidationOptions& opt_;
  std::mt19937_64 rng_;
};

}  // namespace

ValidationReport run_validation(const ValidationOptions& opt) {
  if (opt.dim < 1 || opt.dim > kMaxOracleDim) throw ResourceLimit("validation dimension must lie in [1, 200]");
  if (opt.envelope.n_bath_choices.empty()) throw DomainError("validation needs at least one bath occupancy");
  const auto& tol = opt.tolerances;
  ValidationReport report;
  StateSampler sampler(opt);

  auto scaled = [&](double numeric, double closed) {
    return std::abs(numeric - closed) / std::max(std::abs(closed), tol.relative_floor);
  };

  for (int index = 0; index < opt.n_states; ++index) {
    try {
      auto draw = sampler.next(report.draws_rejected);
      const auto times = sampler.times();
      const ChannelParams ch(opt.envelope.omega, opt.envelope.k, draw.sample.n_bath);
      report.states.push_back(draw.sample);
      const auto cfg = IntegratorConfig::defaults(ch, times.back());
      const auto snapshots = evolve_numeric_at(draw.rho, ch, cfg, times);
      for (std::size_t i = 0; i < times.size(); ++i) {
        const auto closed = evolve(draw.sample.state, ch, times[i]).state;
        const auto numeric = gaussian_from_moments(moments(snapshots[i]));
        report.max_dev_nu = std::max(report.max_dev_nu, scaled(numeric.nu(), closed.nu()));
        report.max_dev_r = std::max(report.max_dev_r, scaled(numeric.r(), closed.r()));
        report.max_dev_alpha =
            std::max(report.max_dev_alpha, scaled(std::abs(numeric.alpha()), std::abs(closed.alpha())));
        report.max_dev_entropy = std::max(
            report.max_dev_entropy, std::abs(entropy_numeric(snapshots[i]) - entropy(closed.nu())));
        const auto diag = snapshots[i].diagonal();
        const auto pnd = photon_number_distribution(closed, tol.photon_n_max);
        for (int n = 0; n <= tol.photon_n_max && n < static_cast<int>(diag.size()); ++n) {
          report.max_dev_photon = std::max(report.max_dev_photon, std::abs(diag[n] - pnd.probs[n]));
        }
      }
      ++report.states_checked;
    } catch (const std::exception& e) {
      report.failures.push_back({index, e.what()});
    }
  }

  auto breach = [&](const char* name, double value, double limit) {
    if (!(value <= limit)) {
      report.breaches.push_back(std::string(name) + " deviation " + std::to_string(value) +
                                " exceeds " + std::to_string(limit));
    }
  };
  breach("nu", report.max_dev_nu, tol.relative);
  breach("r", report.max_dev_r, tol.relative);
  breach("|alpha|", report.max_dev_alpha, tol.relative);
  breach("entropy", report.max_dev_entropy, tol.entropy);
  breach("P_n", report.max_dev_photon, tol.photon_number);
  return report;
}

}  // namespace gaussdiss
