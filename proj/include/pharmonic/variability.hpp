#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "pharmonic/harmonic_series.hpp"
#include "pharmonic/pharmonic_map.hpp"
#include "pharmonic/types.hpp"

namespace pharmonic::variability {

// One member of the extremal family
//
//   f_a(z) = (z^(p-1) - a) / (1 - a conj(z)^(p-1)),  |a| < 1,
//
// together with a truncated layered expansion obtained by cutting the
// geometric series of the denominator after K terms.  The truncation
// error is exactly closed_form(z) * (a conj(z)^(p-1))^(K+1), so its
// modulus never exceeds |a|^(K+1) on the closed disk; tail_bound keeps
// the cruder |a|^(K+1) / (1 - |a|) which already covers it.
struct MobiusFamilyMember {
  int p = 0;
  Complex a{0.0, 0.0};
  PHarmonicMap truncated;
  double tail_bound = 0.0;

  Complex closed_form(Complex z) const {
    const Complex w = ipow(z, p - 1);
    return (w - a) / (1.0 - a * std::conj(w));
  }
};

inline MobiusFamilyMember mobius_member(int p, Complex a, int K,
                                        double eps = 1e-3) {
  if (p < 2) throw std::invalid_argument("p must be >= 2");
  if (K < 1) throw std::invalid_argument("K must be >= 1");
  if (!(std::abs(a) <= 1.0 - eps))
    throw std::invalid_argument("a must satisfy |a| <= 1 - eps");

  // (z^(p-1) - a) sum_{m=0..K} (a conj(z)^(p-1))^m splits into the
  // unweighted layer (the -a part) and layer p (the z^(p-1) part, since
  // z^(p-1) conj(z)^(p-1) = |z|^(2(p-1))).
  std::vector<Complex> apow(static_cast<std::size_t>(K) + 2);
  apow[0] = Complex{1.0, 0.0};
  for (std::size_t i = 1; i < apow.size(); ++i) apow[i] = apow[i - 1] * a;

  std::vector<HarmonicSeries> layers(static_cast<std::size_t>(p));
  HarmonicSeries& first = layers.front();
  HarmonicSeries& last = layers.back();
  first.set_c(p - 1, Complex{1.0, 0.0});
  first.set_c0(-apow[1]);
  for (int m = 1; m <= K; ++m)
    first.set_d((p - 1) * m, -apow[static_cast<std::size_t>(m) + 1]);
  last.set_c0(last.c0() + apow[1]);
  for (int m = 2; m <= K; ++m)
    last.set_d((p - 1) * (m - 1), apow[static_cast<std::size_t>(m)]);

  MobiusFamilyMember member{p, a, PHarmonicMap{std::move(layers)}, 0.0};
  const double mod = std::abs(a);
  member.tail_bound = std::pow(mod, K + 1) / (1.0 - mod);
  return member;
}

// Distance of the normalized z-derivative slot from its required value:
// the (p-1)-st z-derivative of f at the origin must equal (p-1)!, i.e.
// the monomial z^(p-1) must carry coefficient exactly 1.
inline double normalization_check(const PHarmonicMap& f, int p) {
  if (p < 1) throw std::invalid_argument("p must be >= 1");
  double fact = 1.0;
  for (int k = 2; k < p; ++k) fact *= k;
  const Complex e = to_bipoly(f).coeff(p - 1, 0);
  return std::abs(e * fact - fact);
}

// Sampled image of a -> f_a(z0) over the admissible disk |a| <= 1 - eps.
// coverage_radius is the largest gap between a reference grid on the
// target disk of radius 0.99 and the nearest sampled value; small values
// certify that the samples fill the whole disk.
struct RegionSample {
  int p = 0;
  Complex z0{0.0, 0.0};
  std::vector<Complex> points;
  double coverage_radius = 0.0;
};

inline RegionSample region_sample(int p, Complex z0, int n_samples,
                                  double eps = 1e-3) {
  if (p < 2) throw std::invalid_argument("p must be >= 2");
  if (!(std::abs(z0) < 1.0))
    throw std::invalid_argument("z0 must satisfy |z0| < 1");
  if (n_samples < 10) throw std::invalid_argument("n_samples must be >= 10");

  RegionSample out;
  out.p = p;
  out.z0 = z0;

  const Complex w = ipow(z0, p - 1);
  const Complex wb = std::conj(w);
  const auto value_at = [&](Complex a) { return (w - a) / (1.0 - a * wb); };

  // a = 0 plus equal-area rings centered in their annuli; the explicit
  // origin sample keeps the image gap near f_0(z0) small.
  const double r_cap = 1.0 - eps;
  const int n_r = std::max(
      1, static_cast<int>(std::llround(std::sqrt(n_samples / 6.0))));
  const int n_theta = std::max(1, (n_samples - 1) / n_r);
  out.points.reserve(static_cast<std::size_t>(n_r) * n_theta + 1);
  out.points.push_back(value_at(Complex{0.0, 0.0}));
  for (int i = 0; i < n_r; ++i) {
    const double r = r_cap * std::sqrt((i + 0.5) / n_r);
    for (int j = 0; j < n_theta; ++j) {
      const double theta = 2.0 * std::numbers::pi * j / n_theta;
      out.points.push_back(value_at(r * Complex{std::cos(theta),
                                                std::sin(theta)}));
    }
  }

  // Reference grid on the target disk: origin plus equal-area rings.
  constexpr double kTargetRadius = 0.99;
  constexpr int kTargetRings = 60;
  constexpr int kTargetAngles = 120;
  double worst_sq = 0.0;
  const auto visit_target = [&](Complex t) {
    double best_sq = std::numeric_limits<double>::infinity();
    for (const Complex& s : out.points) {
      const double dx = t.real() - s.real();
      const double dy = t.imag() - s.imag();
      const double d = dx * dx + dy * dy;
      if (d < best_sq) best_sq = d;
    }
    if (best_sq > worst_sq) worst_sq = best_sq;
  };
  visit_target(Complex{0.0, 0.0});
  for (int i = 0; i < kTargetRings; ++i) {
    const double r = kTargetRadius * std::sqrt((i + 0.5) / kTargetRings);
    for (int j = 0; j < kTargetAngles; ++j) {
      const double theta = 2.0 * std::numbers::pi * j / kTargetAngles;
      visit_target(r * Complex{std::cos(theta), std::sin(theta)});
    }
  }
  out.coverage_radius = std::sqrt(worst_sq);
  return out;
}

// |c_0|^2 + sum_n (|c_n|^2 + |d_n|^2); for a map into the disk this is at
// most 1, with equality forcing a single unimodular coefficient.
inline double parseval_sum(const HarmonicSeries& s) {
  double sum = std::norm(s.c0());
  for (int n = 1; n <= s.degree(); ++n)
    sum += std::norm(s.c(n)) + std::norm(s.d(n));
  return sum;
}

// Rigidity of the identity: a harmonic self-map of the disk with c_1 = 1
// must be z itself.  The check demands the premises (c_1 = 1, sampled sup
// at most 1) and that every other coefficient vanishes; `violating` names
// the first offender in the order c0, then c_n/d_n by index.
struct RigidityReport {
  bool passed = false;
  bool c1_is_one = false;
  double sampled_sup = 0.0;
  bool sup_within_one = false;
  double parseval = 0.0;
  std::string violating;
};

inline RigidityReport cartan_rigidity_check(const HarmonicSeries& s,
                                            int sup_angles = 4096) {
  if (sup_angles < 1) throw std::invalid_argument("sup_angles must be >= 1");
  RigidityReport rep;
  rep.c1_is_one = std::abs(s.c(1) - Complex{1.0, 0.0}) <= 1e-12;

  constexpr double kRingRadius = 0.9999;
  double sup = 0.0;
  for (int j = 0; j < sup_angles; ++j) {
    const double theta = 2.0 * std::numbers::pi * j / sup_angles;
    const Complex z = kRingRadius * Complex{std::cos(theta), std::sin(theta)};
    sup = std::max(sup, std::abs(s(z)));
  }
  rep.sampled_sup = sup;
  rep.sup_within_one = sup <= 1.0 + 1e-9;
  rep.parseval = parseval_sum(s);

  constexpr double kCoeffTol = 1e-9;
  if (std::abs(s.c0()) > kCoeffTol) {
    rep.violating = "c0";
  } else {
    for (int n = 1; n <= s.degree() && rep.violating.empty(); ++n) {
      if (n != 1 && std::abs(s.c(n)) > kCoeffTol)
        rep.violating = "c" + std::to_string(n);
      else if (std::abs(s.d(n)) > kCoeffTol)
        rep.violating = "d" + std::to_string(n);
    }
  }

  rep.passed = rep.c1_is_one && rep.sup_within_one && rep.violating.empty();
  return rep;
}

}  // namespace pharmonic::variability
