#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "pharmonic/types.hpp"

namespace pharmonic {

// Polar sampling grid over the punctured disk: a fixed list of radii in
// (0, r_max] with the same number of equally spaced angles per ring. The
// origin is never sampled; radial quantities of interest degenerate there.
struct SamplingGrid {
  std::vector<double> radii;
  int angles_per_ring = 0;
  double r_max = 0.0;

  SamplingGrid(std::vector<double> r, int angles)
      : radii(std::move(r)), angles_per_ring(angles) {
    if (radii.empty()) throw std::invalid_argument("grid needs radii");
    if (angles_per_ring < 1)
      throw std::invalid_argument("grid needs at least one angle per ring");
    double prev = 0.0;
    for (double rad : radii) {
      if (!(rad > prev))
        throw std::invalid_argument("radii must be strictly increasing in (0, r_max]");
      prev = rad;
    }
    r_max = radii.back();
    if (r_max > 0.999)
      throw std::invalid_argument("r_max must stay strictly inside the disk (<= 0.999)");
  }

  static SamplingGrid uniform(int n_radii = 64, int angles = 256,
                              double r_max = 0.99) {
    if (n_radii < 1) throw std::invalid_argument("n_radii must be >= 1");
    std::vector<double> r(static_cast<std::size_t>(n_radii));
    for (int i = 0; i < n_radii; ++i)
      r[static_cast<std::size_t>(i)] = r_max * (i + 1) / n_radii;
    return SamplingGrid{std::move(r), angles};
  }

  static SamplingGrid between(double r_min, double r_max, int n_radii,
                              int angles) {
    if (n_radii < 1) throw std::invalid_argument("n_radii must be >= 1");
    if (!(r_min > 0.0) || !(r_max > r_min))
      throw std::invalid_argument("need 0 < r_min < r_max");
    std::vector<double> r(static_cast<std::size_t>(n_radii));
    if (n_radii == 1) {
      r[0] = r_max;
    } else {
      for (int i = 0; i < n_radii; ++i)
        r[static_cast<std::size_t>(i)] =
            r_min + (r_max - r_min) * i / (n_radii - 1);
    }
    return SamplingGrid{std::move(r), angles};
  }

  std::size_t size() const {
    return radii.size() * static_cast<std::size_t>(angles_per_ring);
  }

  // Visits points radius-major, angle-minor. That order is part of the
  // contract: ties in scans over the grid resolve to the first point seen.
  template <typename F>
  void for_each(F&& visit) const {
    for (double r : radii) {
      for (int j = 0; j < angles_per_ring; ++j) {
        const double theta = 2.0 * std::numbers::pi * j / angles_per_ring;
        visit(Complex{r * std::cos(theta), r * std::sin(theta)});
      }
    }
  }
};

}  // namespace pharmonic
