#include <doctest.h>

#include <cmath>

#include "gaussdiss/channel_dynamics.hpp"
#include "gaussdiss/errors.hpp"
#include "gaussdiss/fock_oracle.hpp"
#include "gaussdiss/fock_statistics.hpp"

using namespace gaussdiss;
using doctest::Approx;

TEST_SUITE("fock_statistics") {

TEST_CASE("coefficient reductions") {
  auto c = pnd_coefficients(GaussianParams::thermal(2.0));
  CHECK(c.A == Approx(2.0));
  CHECK(std::abs(c.B) == 0.0);
  CHECK(c.A_tilde == Approx(2.0 / 3.0));
  CHECK(std::abs(c.B_tilde) == 0.0);
  CHECK(std::abs(c.C_tilde) == 0.0);
  CHECK(c.q0 == Approx(1.0 / 3.0));

  c = pnd_coefficients(GaussianParams::squeezed_vacuum(1.0, 0.4));
  CHECK(c.A_tilde == Approx(0.0).scale(1.0));
  CHECK(std::abs(c.B_tilde) == Approx(std::tanh(1.0)));

  c = pnd_coefficients(GaussianParams::coherent({0.6, -1.1}));
  CHECK(c.A == 0.0);
  CHECK(std::abs(c.C_tilde - Complex{0.6, -1.1}) < 1e-15);
  CHECK(c.q0 == Approx(std::exp(-(0.36 + 1.21))));
}

TEST_CASE("B relates to the second moment") {
  // tr[a^2 rho] = -B, of modulus (nu + 1/2) sinh 2r.
  const GaussianParams s({}, 0.6, 0.7, 0.3);
  const auto c = pnd_coefficients(s);
  const auto rho = build_initial(s, 120);
  const auto m = moments(rho);
  const Complex expect = -c.B;
  CHECK(std::abs(c.B) == Approx((s.nu() + 0.5) * std::sinh(2.0 * s.r())));
  CHECK(std::abs(m.mean_aa - expect) < 1e-8);
}

TEST_CASE("limiting distributions") {
  const auto thermal = photon_number_distribution(GaussianParams::thermal(1.0), 30);
  for (int n = 0; n <= 30; ++n) CHECK(thermal.probs[n] == Approx(std::pow(0.5, n + 1)).epsilon(1e-13));

  const auto coherent = photon_number_distribution(GaussianParams::coherent({2.0, 0.0}), 30);
  for (int n = 0; n <= 30; ++n)
    CHECK(coherent.probs[n] == Approx(std::exp(-4.0) * std::pow(4.0, n) / std::tgamma(n + 1.0)).epsilon(1e-12));

  const auto squeezed = photon_number_distribution(GaussianParams::squeezed_vacuum(1.0), 31);
  for (int n = 1; n <= 31; n += 2) CHECK(squeezed.probs[n] < 1e-15);
  CHECK(squeezed.probs[0] == Approx(1.0 / std::cosh(1.0)));
  CHECK(squeezed.probs[2] == Approx(0.5 * std::pow(std::tanh(1.0), 2) / std::cosh(1.0)));
}

TEST_CASE("mean from the distribution matches the closed form") {
  for (const auto& s : {GaussianParams::squeezed_vacuum(1.0), GaussianParams({0.5, 1.0}, 0.6, 2.0, 0.8)}) {
    const auto d = photon_number_distribution_adaptive(s);
    CHECK(d.sum() == Approx(1.0).epsilon(1e-9));
    CHECK(d.mean() == Approx(mean_photon_number(s)).epsilon(1e-8));
  }
}

TEST_CASE("evolved squeezed state matches the oracle diagonal") {
  const ChannelParams ch(1.0, 0.1, 0.0);
  const auto s0 = GaussianParams::squeezed_vacuum(1.0);
  // dim 60 crops 1.2e-8 of this state, just above the 1e-8 renormalization limit.
  const auto rho = evolve_numeric(build_initial(s0, 70), ch, IntegratorConfig::defaults(ch, 1.0));
  const auto diag = rho.diagonal();
  const auto d = photon_number_distribution(evolve(s0, ch, 1.0).state, 30);
  for (int n = 0; n <= 30; ++n) CHECK(std::abs(diag[n] - d.probs[n]) < 1e-6);
}

TEST_CASE("printed normalization exponent breaks the thermal sum") {
  const auto s = GaussianParams::thermal(1.0);
  const auto repaired = photon_number_terms(pnd_coefficients(s, PiQ0Exponent::repaired), 0.0, 40);
  const auto printed = photon_number_terms(pnd_coefficients(s, PiQ0Exponent::as_printed), 0.0, 40);
  double a = 0.0, b = 0.0;
  for (int n = 0; n <= 40; ++n) {
    a += repaired[n];
    b += printed[n];
  }
  CHECK(a == Approx(1.0).epsilon(1e-11));
  CHECK(b == Approx(4.0).epsilon(1e-11));
}

TEST_CASE("invalid requests") {
  CHECK_THROWS_AS(photon_number_distribution(GaussianParams::vacuum(), -1), DomainError);
  const auto d = photon_number_distribution(GaussianParams::vacuum(), 0);
  CHECK(d.probs.size() == 1);
  CHECK(d.probs[0] == Approx(1.0));
}

TEST_CASE("oscillation score") {
  const auto thermal = oscillation_score(photon_number_distribution_adaptive(GaussianParams::thermal(3.0)));
  CHECK(thermal.count == 0);
  CHECK(thermal.depth == 0.0);

  const auto squeezed = oscillation_score(photon_number_distribution_adaptive(GaussianParams::squeezed_vacuum(1.0)));
  CHECK(squeezed.count >= 5);
  CHECK(squeezed.depth == Approx(1.0).epsilon(1e-12));

  const ChannelParams ch(1.0, 0.1, 0.0);
  const double t_c = std::log(2.0) / 0.2;
  const auto evolved = evolve(GaussianParams::squeezed_vacuum(1.0), ch, 2.0 * t_c).state;
  CHECK(oscillation_score(photon_number_distribution_adaptive(evolved)).count == 0);
}

}
