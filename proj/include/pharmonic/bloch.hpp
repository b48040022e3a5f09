#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "pharmonic/pharmonic_map.hpp"
#include "pharmonic/rootfind.hpp"
#include "pharmonic/sampling.hpp"
#include "pharmonic/types.hpp"
#include "pharmonic/wirtinger.hpp"

namespace pharmonic::bloch {

// Profile whose maximum over [0, 1] controls the Bloch seminorm of a map
// with p bounded layers:
//
//   phi_p(y) = (2/pi) sum_{k=1..p} y^(2(k-1))
//            + y (1 - y^2) sum_{k=2..p} (k-1) y^(2(k-2))
//
// For p = 1 it degenerates to the constant 2/pi.
inline double phi(int p, double y) {
  if (p < 1) throw std::invalid_argument("p must be >= 1");
  if (!(y >= 0.0 && y <= 1.0))
    throw std::invalid_argument("y must be in [0, 1]");
  const double y2 = y * y;

  double even_sum = 0.0;  // sum_{k=1..p} y^(2(k-1))
  double pw = 1.0;
  for (int k = 1; k <= p; ++k) {
    even_sum += pw;
    pw *= y2;
  }

  double deriv_sum = 0.0;  // sum_{k=2..p} (k-1) y^(2(k-2))
  pw = 1.0;
  for (int k = 2; k <= p; ++k) {
    deriv_sum += (k - 1.0) * pw;
    pw *= y2;
  }

  return (2.0 / std::numbers::pi) * even_sum + y * (1.0 - y2) * deriv_sum;
}

inline double phi_prime(int p, double y) {
  if (p < 1) throw std::invalid_argument("p must be >= 1");
  if (!(y >= 0.0 && y <= 1.0))
    throw std::invalid_argument("y must be in [0, 1]");
  const double y2 = y * y;

  // d/dy of the two sums, term by term:
  //   (2/pi) sum_{k=2..p} 2(k-1) y^(2k-3)
  // + sum_{k=2..p} (k-1) ((2k-3) y^(2k-4) - (2k-1) y^(2k-2))
  double first = 0.0;
  double second = 0.0;
  double pw_a = y;    // y^(2k-3) at k = 2
  double pw_b = 1.0;  // y^(2k-4) at k = 2
  double pw_c = y2;   // y^(2k-2) at k = 2
  for (int k = 2; k <= p; ++k) {
    first += 2.0 * (k - 1.0) * pw_a;
    second += (k - 1.0) * ((2.0 * k - 3.0) * pw_b - (2.0 * k - 1.0) * pw_c);
    pw_a *= y2;
    pw_b *= y2;
    pw_c *= y2;
  }
  return (2.0 / std::numbers::pi) * first + second;
}

// Interior maximum of phi_p.  phi_p'(0) = 1 > 0 and phi_p'(1) < 0 for
// p >= 2, so a sign change exists; the scan insists it is unique before
// bisecting.  p = 1 has no critical point and is reported degenerate.
struct CriticalPoint {
  int p = 0;
  bool degenerate = false;
  double y = 0.0;
  double phi_value = 0.0;
  int iterations = 0;
};

inline CriticalPoint critical_point(int p) {
  if (p < 1) throw std::invalid_argument("p must be >= 1");
  if (p == 1) {
    return {1, true, std::numeric_limits<double>::quiet_NaN(),
            2.0 / std::numbers::pi, 0};
  }

  constexpr int kScanCells = 10000;
  int crossings = 0;
  double lo = 0.0, hi = 1.0;
  double prev = phi_prime(p, 0.0);
  for (int i = 1; i <= kScanCells; ++i) {
    const double y = static_cast<double>(i) / kScanCells;
    const double cur = phi_prime(p, y);
    if (prev > 0.0 && cur <= 0.0) {
      ++crossings;
      lo = static_cast<double>(i - 1) / kScanCells;
      hi = y;
    }
    prev = cur;
  }
  if (crossings != 1) throw std::runtime_error("nonunique critical point");

  const auto bis = bisect_decreasing([&](double y) { return phi_prime(p, y); },
                                     lo, hi, 1e-14, 200);
  return {p, false, bis.root, phi(p, bis.root), bis.iterations};
}

// Upper bound 2 M phi_p(y*) for the Bloch seminorm of a p-layer map whose
// layers are bounded by M.  Sharp for p = 1 where it is 4M/pi.
struct BlochBound {
  int p = 0;
  double M = 0.0;
  bool degenerate = false;
  double y_star = 0.0;
  double phi_at_star = 0.0;
  double bound = 0.0;
};

inline BlochBound bloch_upper_bound(int p, double M) {
  if (p < 1) throw std::invalid_argument("p must be >= 1");
  if (!(M > 0.0)) throw std::invalid_argument("M must be > 0");
  if (p == 1) {
    return {1, M, true, std::numeric_limits<double>::quiet_NaN(),
            2.0 / std::numbers::pi, 4.0 * M / std::numbers::pi};
  }
  const CriticalPoint cp = critical_point(p);
  return {p, M, false, cp.y, cp.phi_value, 2.0 * M * cp.phi_value};
}

// Sampled Bloch seminorm sup (1 - |z|^2) Lambda_f(z); the argmax keeps
// the first grid point in radius-major, angle-minor order on ties.
struct BlochEstimate {
  double sup_value = 0.0;
  Complex argmax_point{0.0, 0.0};
  std::size_t points_checked = 0;
};

inline BlochEstimate bloch_seminorm_estimate(const PHarmonicMap& f,
                                             const SamplingGrid& grid) {
  BlochEstimate est;
  est.points_checked = grid.size();
  JetEvaluator jets(f);
  double sup = -std::numeric_limits<double>::infinity();
  Complex arg{0.0, 0.0};
  grid.for_each([&](Complex z) {
    const double v = (1.0 - std::norm(z)) * metrics(jets.at(z)).Lambda;
    if (v > sup) {
      sup = v;
      arg = z;
    }
  });
  est.sup_value = sup;
  est.argmax_point = arg;
  return est;
}

// Radial grid for seminorm estimates, clustered around the predicted
// argmax radius y* (0.5 when p = 1 gives no prediction): half the radii
// fill (0, y*) and half (y*, r_max), each packed toward y* by a sine
// warp, plus a near-origin point and r_max itself.
inline SamplingGrid seminorm_grid(int p, int n_radii = 128, int angles = 256,
                                  double r_max = 0.999) {
  if (n_radii < 4) throw std::invalid_argument("n_radii must be >= 4");
  if (!(r_max > 0.0 && r_max <= 0.999))
    throw std::invalid_argument("r_max must be in (0, 0.999]");
  const CriticalPoint cp = critical_point(p);
  const double y_c =
      cp.degenerate ? 0.5 * r_max : std::clamp(cp.y, 0.05, 0.95 * r_max);

  std::vector<double> radii;
  radii.reserve(static_cast<std::size_t>(n_radii));
  radii.push_back(1e-6);
  const int n_left = (n_radii - 2) / 2;
  const int n_right = n_radii - 2 - n_left;
  constexpr double kHalfPi = std::numbers::pi / 2.0;
  for (int i = 1; i <= n_left; ++i) {
    const double t = static_cast<double>(i) / (n_left + 1);
    radii.push_back(y_c * std::sin(kHalfPi * t));
  }
  for (int i = 1; i <= n_right; ++i) {
    const double t = static_cast<double>(i) / (n_right + 1);
    radii.push_back(r_max - (r_max - y_c) * std::sin(kHalfPi * t));
  }
  radii.push_back(r_max);
  std::sort(radii.begin(), radii.end());
  return SamplingGrid{std::move(radii), angles};
}

// Poincare distance (curvature -4 normalization, matching the quotient
// used for the Bloch seminorm).
inline double hyperbolic_distance(Complex z, Complex w) {
  if (!(std::abs(z) < 1.0 && std::abs(w) < 1.0))
    throw std::invalid_argument("points must lie inside the unit disk");
  const double t = std::abs((z - w) / (1.0 - std::conj(z) * w));
  return 0.5 * std::log((1.0 + t) / (1.0 - t));
}

inline double hyperbolic_quotient(const PHarmonicMap& f, Complex z, Complex w) {
  if (z == w) throw std::invalid_argument("z and w must be distinct");
  return std::abs(f(z) - f(w)) / hyperbolic_distance(z, w);
}

}  // namespace pharmonic::bloch
