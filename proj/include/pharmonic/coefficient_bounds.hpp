#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "pharmonic/harmonic_series.hpp"
#include "pharmonic/types.hpp"

namespace pharmonic {

// Partial sum of the series whose n-th coefficient pair attains the sharp
// bound |c_n| + |d_n| = 4M/pi for maps with sup |f| <= M.  Only the slots
// m = n*(2k-1), k = 1..K, are populated:
//
//   c_m =  (2 M alpha / (i pi)) * beta^(2k-1) / (2k-1)
//   d_m = -(2 M alpha / (i pi)) * conj(beta)^(2k-1) / (2k-1)
//
// alpha and beta must be unimodular; they rotate the target disk and the
// boundary jump respectively.
inline HarmonicSeries coefficient_extremal_series(int n, double M, Complex alpha,
                                                  Complex beta, int K) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (!(M >= 0.0)) throw std::invalid_argument("M must be >= 0");
  if (K < 1) throw std::invalid_argument("K must be >= 1");
  constexpr double kUnimodularTol = 1e-12;
  if (std::abs(std::abs(alpha) - 1.0) > kUnimodularTol)
    throw std::invalid_argument("alpha must be unimodular");
  if (std::abs(std::abs(beta) - 1.0) > kUnimodularTol)
    throw std::invalid_argument("beta must be unimodular");

  const Complex front = 2.0 * M * alpha / (Complex{0.0, 1.0} * std::numbers::pi);
  HarmonicSeries s;
  Complex bpow = beta;              // beta^(2k-1)
  Complex cpow = std::conj(beta);   // conj(beta)^(2k-1)
  const Complex bstep = beta * beta;
  const Complex cstep = std::conj(beta) * std::conj(beta);
  for (int k = 1; k <= K; ++k) {
    const int m = n * (2 * k - 1);
    const double denom = static_cast<double>(2 * k - 1);
    s.set_c(m, front * bpow / denom);
    s.set_d(m, -front * cpow / denom);
    bpow *= bstep;
    cpow *= cstep;
  }
  return s;
}

// Slack of a series against the coefficient bounds for sup |f| <= M:
// |c_0| <= M and |c_n| + |d_n| <= 4M/pi for every n >= 1.  Negative slack
// means the series cannot come from a map bounded by M.
struct CoefficientBoundReport {
  double M = 0.0;
  double c0_slack = 0.0;             // M - |c_0|
  std::vector<double> slack;         // slack[n-1] = 4M/pi - (|c_n| + |d_n|)
  double sampled_sup = 0.0;          // max |s| on the ring r = 0.999

  double min_slack() const {
    double m = c0_slack;
    for (double v : slack) m = std::min(m, v);
    return m;
  }
};

inline CoefficientBoundReport coefficient_bound_report(const HarmonicSeries& s,
                                                       double M,
                                                       int sup_angles = 2048) {
  if (!(M >= 0.0)) throw std::invalid_argument("M must be >= 0");
  if (sup_angles < 1) throw std::invalid_argument("sup_angles must be >= 1");

  CoefficientBoundReport rep;
  rep.M = M;
  rep.c0_slack = M - std::abs(s.c0());
  const double cap = 4.0 * M / std::numbers::pi;
  rep.slack.reserve(static_cast<std::size_t>(s.degree()));
  for (int n = 1; n <= s.degree(); ++n)
    rep.slack.push_back(cap - (std::abs(s.c(n)) + std::abs(s.d(n))));

  constexpr double kSupRadius = 0.999;
  double sup = 0.0;
  for (int j = 0; j < sup_angles; ++j) {
    const double theta = 2.0 * std::numbers::pi * j / sup_angles;
    const Complex z = kSupRadius * Complex{std::cos(theta), std::sin(theta)};
    sup = std::max(sup, std::abs(s(z)));
  }
  rep.sampled_sup = sup;
  return rep;
}

}  // namespace pharmonic
