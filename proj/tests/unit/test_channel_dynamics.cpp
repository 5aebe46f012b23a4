#include <doctest.h>

#include <cmath>

#include "gaussdiss/channel_dynamics.hpp"
#include "gaussdiss/errors.hpp"

using namespace gaussdiss;
using doctest::Approx;

namespace {
const double kTc = std::log(2.0) / 0.2;
const double kNuTc = std::sqrt((std::cosh(2.0) + 1.0) / 8.0) - 0.5;
}  // namespace

TEST_SUITE("channel_dynamics") {

TEST_CASE("t = 0 returns the initial state exactly") {
  const GaussianParams s0({0.3, -0.2}, 0.9, 2.0, 1.5);
  const auto e = evolve(s0, ChannelParams(1.0, 0.1, 0.5), 0.0);
  CHECK(e.state.alpha() == s0.alpha());
  CHECK(e.state.r() == s0.r());
  CHECK(e.state.phi() == s0.phi());
  CHECK(e.state.nu() == s0.nu());
  CHECK_THROWS_AS(evolve(s0, ChannelParams(1.0, 0.1, 0.5), -1.0), DomainError);
}

TEST_CASE("unsqueezed states relax thermally") {
  const ChannelParams ch(1.0, 0.1, 0.5);
  for (double t : {0.3, 4.0, 25.0}) {
    const auto s = evolve(GaussianParams::thermal(2.0), ch, t).state;
    const double u = std::exp(-0.2 * t);
    CHECK(s.nu() == Approx(2.0 * u + 0.5 * (1.0 - u)));
    CHECK(s.r() == 0.0);
  }
}

TEST_CASE("pure squeezed state at the characteristic time") {
  const ChannelParams ch(1.0, 0.1, 0.0);
  const auto s = evolve(GaussianParams::squeezed_vacuum(1.0), ch, kTc).state;
  CHECK(s.nu() == Approx(kNuTc).epsilon(1e-12));
  CHECK(s.nu() == Approx(0.2715403).epsilon(1e-6));
  CHECK(determinant_trajectory(GaussianParams::squeezed_vacuum(1.0), ch, kTc) ==
        Approx(0.5952745).epsilon(1e-6));
}

TEST_CASE("coherent amplitude and squeeze phase rotate") {
  const ChannelParams ch(1.3, 0.1, 0.0);
  const auto s = evolve(GaussianParams({1.0, 0.5}, 0.4, 0.2, 0.0), ch, 2.0).state;
  const Complex expect = Complex{1.0, 0.5} * std::exp(Complex{-0.2, -2.6});
  CHECK(s.alpha().real() == Approx(expect.real()));
  CHECK(s.alpha().imag() == Approx(expect.imag()));
  CHECK(s.phi() == Approx(0.2 - 2.0 * 1.3 * 2.0));
}

TEST_CASE("evolution is a semigroup") {
  const ChannelParams ch(0.7, 0.15, 0.8);
  const GaussianParams s0({-0.4, 1.1}, 1.2, -0.5, 0.3);
  const auto direct = evolve(s0, ch, 5.0).state;
  const auto staged = evolve(evolve(s0, ch, 2.0).state, ch, 3.0).state;
  CHECK(staged.nu() == Approx(direct.nu()).epsilon(1e-12));
  CHECK(staged.r() == Approx(direct.r()).epsilon(1e-12));
  CHECK(std::abs(staged.alpha() - direct.alpha()) < 1e-12);
  CHECK(std::cos(staged.phi() - direct.phi()) == Approx(1.0));
}

TEST_CASE("fixed point and long-time determinant") {
  const ChannelParams ch(1.0, 0.1, 1.7);
  const auto s = evolve(GaussianParams({1.5, 0.0}, 1.5, 0.0, 5.0), ch, 500.0).state;
  CHECK(std::abs(s.alpha()) < 1e-8);
  CHECK(s.r() < 1e-8);
  CHECK(std::abs(s.nu() - 1.7) < 1e-8);
  CHECK(determinant_trajectory(GaussianParams::vacuum(), ChannelParams(1.0, 0.1, 0.0), 0.0) == Approx(0.25));
  CHECK(determinant_trajectory(GaussianParams::squeezed_vacuum(2.0), ch, 1e3) == Approx(2.2 * 2.2));
}

TEST_CASE("closed-form characteristic time") {
  const ChannelParams cold(1.0, 0.1, 0.0);
  for (double r0 : {0.2, 1.0, 2.5}) {
    CHECK(characteristic_time_closed(GaussianParams::squeezed_vacuum(r0), cold) == Approx(kTc).epsilon(1e-12));
  }
  CHECK(characteristic_time_closed(GaussianParams::squeezed_vacuum(1.0), cold) == Approx(3.465736).epsilon(1e-7));
  CHECK(characteristic_time_closed(GaussianParams::thermal(1.0), cold) == 0.0);
  CHECK(characteristic_time_closed(GaussianParams({}, 1.0, 0.0, 3.0), cold) == 0.0);
  CHECK_THROWS_AS(characteristic_time_closed(GaussianParams::squeezed_vacuum(1.0), ChannelParams(1.0, 0.0, 0.0)),
                  UndefinedTimeError);
}

TEST_CASE("numeric characteristic time agrees with the closed form") {
  const ChannelParams ch(1.0, 0.1, 0.3);
  const GaussianParams s0({0.5, 0.5}, 1.2, 0.4, 0.6);
  const auto numeric = characteristic_time_numeric(s0, ch);
  REQUIRE(numeric.interior_maximum);
  CHECK(numeric.t_c == Approx(characteristic_time_closed(s0, ch)).epsilon(1e-7));
  // D is monotone decreasing for a state hotter than the visibility bound.
  const auto hot = characteristic_time_numeric(GaussianParams({}, 1.0, 0.0, 3.0), ChannelParams(1.0, 0.1, 0.0));
  CHECK_FALSE(hot.interior_maximum);
  CHECK(hot.t_c == 0.0);
}

TEST_CASE("visibility verdicts") {
  const ChannelParams cold(1.0, 0.1, 0.0);
  auto v = visibility(GaussianParams::vacuum(), cold);
  CHECK(v.nu_bound == 0.0);
  CHECK_FALSE(v.visible);
  REQUIRE(v.t_c);
  CHECK(*v.t_c == 0.0);

  v = visibility(GaussianParams({}, 1.0, 0.0, 3.0), cold);
  CHECK(v.nu_bound == Approx(1.38109785).epsilon(1e-8));
  CHECK(v.nbath_bound == Approx(std::cosh(2.0) * 3.5 - 0.5));
  CHECK_FALSE(v.visible);
  CHECK(*v.t_c == 0.0);

  v = visibility(GaussianParams::squeezed_vacuum(1.0), cold);
  CHECK(v.visible);
  CHECK(v.interior_maximum);
  CHECK(*v.t_c == Approx(kTc));

  // Unsqueezed state colder than the bath: entropy grows monotonically.
  v = visibility(GaussianParams::thermal(0.2), ChannelParams(1.0, 0.1, 1.0));
  CHECK(v.visible);
  CHECK_FALSE(v.interior_maximum);
  CHECK(*v.t_c == 0.0);

  v = visibility(GaussianParams::squeezed_vacuum(1.0), ChannelParams(1.0, 0.0, 0.0));
  CHECK_FALSE(v.t_c.has_value());
}

TEST_CASE("time grid") {
  const auto g = TimeGrid::default_for(ChannelParams(1.0, 0.1, 0.0));
  CHECK(g.samples == 512);
  CHECK(g.at(0) == 0.0);
  CHECK(g.at(511) == Approx(100.0));
  CHECK(TimeGrid::default_for(ChannelParams(1.0, 0.0, 0.0)).t_end == Approx(10.0));
  CHECK_THROWS_AS((TimeGrid{0.0, 1.0, 1}.validate()), DomainError);
  CHECK_THROWS_AS((TimeGrid{2.0, 1.0, 10}.validate()), DomainError);
}

TEST_CASE("trajectory is constant when k = 0") {
  const auto rows = trajectory(GaussianParams({1.0, 0.0}, 0.8, 0.0, 1.0), ChannelParams(1.0, 0.0, 0.0),
                               TimeGrid{0.0, 50.0, 101});
  REQUIRE(rows.size() == 101);
  for (const auto& row : rows) {
    CHECK(row.nu == Approx(1.0).epsilon(1e-12));
    CHECK(row.r == Approx(0.8).epsilon(1e-12));
    CHECK(row.determinant == Approx(2.25).epsilon(1e-12));
    CHECK(row.entropy == Approx(2.0 * std::log(2.0)).epsilon(1e-12));
  }
}

}
