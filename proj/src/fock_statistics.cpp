#include "gaussdiss/fock_statistics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "gaussdiss/errors.hpp"

namespace gaussdiss {

namespace {

constexpr double kProbSlack = 1e-12;
constexpr double kImagResidue = 1e-10;
constexpr double kMassSlack = 1e-9;

// Scaled Hermite sequence M_j = s^{j/2} H_j(i y / sqrt(s)) / (2^j floor(j/2)!).
// The s^{j/2} factor is folded into the recurrence, so s may be zero or
// negative without any division by sqrt(s).
class ScaledHermite {
 public:
  ScaledHermite(double y, double s) : iy_(0.0, y), s_(s), values_{Complex{1.0, 0.0}, iy_} {}

  // M_{2k}
  Complex even(int k) {
    while (static_cast<int>(values_.size()) <= 2 * k) extend();
    return values_[2 * k];
  }

 private:
  void extend() {
    const int next = static_cast<int>(values_.size());
    const Complex m1 = values_[next - 1];
    const Complex m2 = values_[next - 2];
    if (next % 2 == 0) {
      const double m = next / 2;
      values_.push_back(iy_ / m * m1 - ((2.0 * m - 1.0) * s_ / (2.0 * m)) * m2);
    } else {
      values_.push_back(iy_ * m1 - s_ * m2);
    }
  }

  Complex iy_;
  double s_;
  std::vector<Complex> values_;
};

struct PndKernel {
  double q0;
  ScaledHermite imag_part;  // argument Im(C~ e^{-i phi/2}), scale A~ - |B~|
  ScaledHermite real_part;  // argument Re(C~ e^{-i phi/2}), scale A~ + |B~|

  static PndKernel from(const PndCoefficients& c, double phi) {
    const Complex w = c.C_tilde * std::polar(1.0, -0.5 * phi);
    const double b = std::abs(c.B_tilde);
    return {c.q0, ScaledHermite(w.imag(), c.A_tilde - b), ScaledHermite(w.real(), c.A_tilde + b)};
  }

  double term(int n) {
    Complex acc{};
    for (int k = 0; k <= n; ++k) acc += imag_part.even(k) * real_part.even(n - k);
    acc *= q0 * (n % 2 == 0 ? 1.0 : -1.0);
    if (std::abs(acc.imag()) >= kImagResidue) {
      throw ConsistencyError("P_" + std::to_string(n) + " has imaginary residue " +
                             std::to_string(acc.imag()));
    }
    return acc.real();
  }
};

double checked_probability(double p, int n) {
  if (p < -kProbSlack || p > 1.0 + kProbSlack) {
    throw ConsistencyError("P_" + std::to_string(n) + " = " + std::to_string(p) + " outside [0, 1]");
  }
  return std::clamp(p, 0.0, 1.0) + 0.0;  // folds -0 into +0
}

void check_mass(const PhotonDistribution& d) {
  if (d.tail_mass < -kMassSlack) {
    throw ConsistencyError("photon distribution sums to " + std::to_string(1.0 - d.tail_mass));
  }
}

}  // namespace

PndCoefficients pnd_coefficients(const GaussianParams& s, PiQ0Exponent exponent) {
  const double nu = s.nu();
  const double r = s.r();
  const double sh = std::sinh(r);
  const double ch = std::cosh(r);
  const double c2r = std::cosh(2.0 * r);
  const double s2r = std::sinh(2.0 * r);
  const Complex phase = std::polar(1.0, s.phi());
  const double half = nu + 0.5;

  PndCoefficients c;
  c.A = nu + (2.0 * nu + 1.0) * sh * sh;
  c.B = -(2.0 * nu + 1.0) * phase * sh * ch;
  c.C = s.alpha();

  const double den = nu * nu + half * (1.0 + c2r);
  c.A_tilde = nu * (nu + 1.0) / den;
  c.B_tilde = -phase * half * s2r / den;
  c.C_tilde = (c.C * (0.5 + half * c2r) - std::conj(c.C) * phase * half * s2r) / den;

  // (1+A)^2 - |B|^2 factored as (1/2 + (nu+1/2)e^{-2r})(1/2 + (nu+1/2)e^{2r})
  const double gram = (0.5 + half * std::exp(-2.0 * r)) * (0.5 + half * std::exp(2.0 * r));
  const Complex cc = std::conj(c.C);
  const double quad = (1.0 + c.A) * std::norm(c.C) + 0.5 * (c.B * cc * cc + std::conj(c.B) * c.C * c.C).real();
  const double power = exponent == PiQ0Exponent::repaired ? -0.5 : 0.5;
  c.q0 = std::pow(gram, power) * std::exp(-quad / gram);
  return c;
}

double PhotonDistribution::sum() const {
  return std::accumulate(probs.begin(), probs.end(), 0.0);
}

double PhotonDistribution::mean() const {
  double m = 0.0;
  for (std::size_t n = 0; n < probs.size(); ++n) m += static_cast<double>(n) * probs[n];
  return m;
}

std::vector<double> photon_number_terms(const PndCoefficients& coeffs, double phi, int n_max) {
  if (n_max < 0) throw DomainError("photon number distribution: n_max must be >= 0");
  auto kernel = PndKernel::from(coeffs, phi);
  std::vector<double> terms(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) terms[n] = kernel.term(n);
  return terms;
}

PhotonDistribution photon_number_distribution(const GaussianParams& s, int n_max) {
  const auto raw = photon_number_terms(pnd_coefficients(s), s.phi(), n_max);
  PhotonDistribution d;
  d.n_max = n_max;
  d.probs.reserve(raw.size());
  for (int n = 0; n <= n_max; ++n) d.probs.push_back(checked_probability(raw[n], n));
  d.tail_mass = 1.0 - d.sum();
  check_mass(d);
  return d;
}

PhotonDistribution photon_number_distribution_adaptive(const GaussianParams& s, double tail_tol,
                                                       int n_cap) {
  auto kernel = PndKernel::from(pnd_coefficients(s), s.phi());
  const double mean = mean_photon_number(s);
  PhotonDistribution d;
  double total = 0.0;
  for (int n = 0; n <= n_cap; ++n) {
    const double p = checked_probability(kernel.term(n), n);
    d.probs.push_back(p);
    total += p;
    if (n >= mean && 1.0 - total < tail_tol) break;
  }
  d.n_max = static_cast<int>(d.probs.size()) - 1;
  d.tail_mass = 1.0 - d.sum();
  check_mass(d);
  return d;
}

OscillationScore oscillation_score(const PhotonDistribution& d) {
  const auto& p = d.probs;
  OscillationScore score;
  if (p.size() < 3) return score;

  std::size_t n_eff = p.size() - 1;
  double cumulative = 0.0;
  for (std::size_t n = 0; n < p.size(); ++n) {
    cumulative += p[n];
    if (cumulative >= 0.999) {
      n_eff = n;
      break;
    }
  }

  for (std::size_t n = 1; n < n_eff && n + 1 < p.size(); ++n) {
    if (!(p[n] < p[n - 1] && p[n] < p[n + 1])) continue;
    ++score.count;
    std::size_t left = n - 1;
    while (left > 0 && p[left - 1] > p[left]) --left;
    std::size_t right = n + 1;
    while (right + 1 < p.size() && p[right + 1] > p[right]) ++right;
    const double peak = std::min(p[left], p[right]);
    score.depth = std::max(score.depth, (peak - p[n]) / peak);
  }
  return score;
}

}  // namespace gaussdiss
