#include <doctest.h>

#include <cmath>

#include "gaussdiss/errors.hpp"
#include "gaussdiss/special_functions.hpp"

using namespace gaussdiss;
using doctest::Approx;

TEST_SUITE("special_functions") {

TEST_CASE("Hermite polynomials") {
  CHECK(hermite_complex(0, {0.3, 0.1}) == Complex{1.0, 0.0});
  CHECK(hermite_complex(2, {0.0, 0.0}).real() == Approx(-2.0));
  CHECK(hermite_complex(3, {1.0, 0.0}).real() == Approx(-4.0));
  const auto h4 = hermite_complex(4, {0.0, 0.5});
  CHECK(h4.real() == Approx(25.0));
  CHECK(h4.imag() == Approx(0.0));
  // 32 z^5 - 160 z^3 + 120 z at a complex point.
  const Complex z{0.4, -0.7};
  const auto expect = 32.0 * std::pow(z, 5) - 160.0 * std::pow(z, 3) + 120.0 * z;
  const auto h5 = hermite_complex(5, z);
  CHECK(h5.real() == Approx(expect.real()));
  CHECK(h5.imag() == Approx(expect.imag()));
  CHECK_THROWS_AS(hermite_complex(-1, z), DomainError);
}

TEST_CASE("Laguerre polynomials") {
  CHECK(laguerre(0, 3.7) == 1.0);
  CHECK(laguerre(1, 2.0) == Approx(-1.0));
  double series = 0.0;
  for (int m = 0; m <= 5; ++m) {
    const double binom = std::tgamma(6.0) / (std::tgamma(m + 1.0) * std::tgamma(6.0 - m));
    series += binom * std::pow(-0.7, m) / std::tgamma(m + 1.0);
  }
  CHECK(laguerre(5, 0.7) == Approx(series).epsilon(1e-14));
  CHECK_THROWS_AS(laguerre(-2, 0.1), DomainError);
}

}
