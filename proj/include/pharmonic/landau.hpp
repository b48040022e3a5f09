#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "pharmonic/harmonic_series.hpp"
#include "pharmonic/pharmonic_map.hpp"
#include "pharmonic/rootfind.hpp"
#include "pharmonic/types.hpp"
#include "pharmonic/wirtinger.hpp"

namespace pharmonic::landau {

// q(x) = (2 - x^2) / ((1 - x^2) x) on (0, 1); s0 is its minimum value.
inline double q_profile(double x) {
  return (2.0 - x * x) / ((1.0 - x * x) * x);
}

// M0: breakpoint of lambda0(M); M1: breakpoint of the coefficient bound
// T(M); r0: argmin of q_profile; s0 = q_profile(r0).  Both piecewise
// definitions agree at their breakpoints, so the <= branch choice only
// fixes which expression evaluates there.
struct LandauConstants {
  double M0;
  double M1;
  double s0;
  double r0;
};

inline LandauConstants constants() {
  LandauConstants c;
  const double pi = std::numbers::pi;
  c.M0 = pi / (2.0 * std::pow(2.0 * pi * pi - 16.0, 0.25));
  c.M1 = pi / std::sqrt(pi * pi - 8.0);
  c.r0 = std::sqrt((5.0 - std::sqrt(17.0)) / 2.0);
  c.s0 = q_profile(c.r0);
  return c;
}

// Sharp lower bound for lambda_f(0) over maps with J_f(0) = 1, |f| <= M.
inline double lambda0(double M) {
  if (!(M >= 1.0)) throw std::invalid_argument("M must be >= 1");
  if (M <= constants().M0)
    return std::sqrt(2.0) / (std::sqrt(M * M - 1.0) + std::sqrt(M * M + 1.0));
  return std::numbers::pi / (4.0 * M);
}

// Bound on |a_n| + |b_n| (n >= 2) for bounded harmonic layers,
// normalized by the n in the Cauchy-type estimate.
inline double coefficient_bound_T(double M) {
  if (!(M >= 1.0)) throw std::invalid_argument("M must be >= 1");
  if (M <= constants().M1) return std::sqrt(2.0 * M * M - 2.0);
  return 4.0 * M / std::numbers::pi;
}

namespace detail {

inline void check_equation_args(double rho, double M, int p) {
  if (!(rho >= 0.0 && rho < 1.0))
    throw std::invalid_argument("rho must be in [0, 1)");
  if (!(M >= 1.0)) throw std::invalid_argument("M must be >= 1");
  if (p < 1) throw std::invalid_argument("p must be >= 1");
}

}  // namespace detail

// Left side of the radius equation for the layered family.  Strictly
// decreasing in rho with a positive value at 0+ and a pole at 1-.
inline double radius_equation_layered(double rho, double M, int p) {
  detail::check_equation_args(rho, M, p);
  const double T = coefficient_bound_T(M);
  const double s0 = constants().s0;
  const double one_minus = 1.0 - rho;
  const double rho2 = rho * rho;

  double sum_odd_weights = 0.0;  // sum_{k=2..p} (2k-1) rho^(2(k-1))
  double pow2 = rho2;
  for (int k = 2; k <= p; ++k) {
    sum_odd_weights += (2.0 * k - 1.0) * pow2;
    pow2 *= rho2;
  }

  double sum_odd_powers = 0.0;  // sum_{k=1..p} rho^(2k-1)
  double pow1 = rho;
  for (int k = 1; k <= p; ++k) {
    sum_odd_powers += pow1;
    pow1 *= rho2;
  }

  return lambda0(M) - T / (one_minus * one_minus) * sum_odd_weights -
         2.0 * T * sum_odd_powers / (one_minus * one_minus * one_minus) -
         (16.0 * M / (std::numbers::pi * std::numbers::pi)) * s0 *
             std::atan(rho);
}

// Left side of the radius equation for the weighted family; the root does
// not depend on p (p only scales the covered radius R).
inline double radius_equation_weighted(double rho, double M) {
  detail::check_equation_args(rho, M, 1);
  const double T = coefficient_bound_T(M);
  const double s0 = constants().s0;
  const double one_minus = 1.0 - rho;
  return lambda0(M) -
         (48.0 * M / (std::numbers::pi * std::numbers::pi)) * s0 *
             std::atan(rho) -
         2.0 * T * rho / (one_minus * one_minus * one_minus);
}

enum class LandauFamily {
  layered = 41,   // f = sum_k |z|^(2(k-1)) G_{p-k+1}, each layer bounded
  weighted = 42,  // f = |z|^(2(p-1)) G, G harmonic and bounded
};

struct LandauResult {
  LandauFamily family;
  double M = 0.0;
  int p = 0;
  double rho = 0.0;       // root of the radius equation
  double R = 0.0;         // radius of the disk covered around f(0)
  double residual = 0.0;  // equation value at the returned root
  int iterations = 0;
};

namespace detail {

inline constexpr double kBracketEps = 1e-9;

template <typename F>
BisectionResult solve_radius(F&& f, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("tol must be > 0");
  // The equation slope near the root is O(1), so a 1e-14 wide bracket
  // pins the residual well below any meaningful tolerance.
  const double width = std::min(tol, 1e-14);
  return bisect_decreasing(f, kBracketEps, 1.0 - kBracketEps, width, 200);
}

}  // namespace detail

inline LandauResult solve_layered(double M, int p, double tol = 1e-12) {
  detail::check_equation_args(0.0, M, p);
  const auto bis = detail::solve_radius(
      [&](double rho) { return radius_equation_layered(rho, M, p); }, tol);
  const double rho = bis.root;

  const double one_minus = 1.0 - rho;
  const double rho2 = rho * rho;
  double sum_even = 0.0;  // sum_{k=2..p} rho^(2(k-1))
  double pw = rho2;
  for (int k = 2; k <= p; ++k) {
    sum_even += pw;
    pw *= rho2;
  }
  const double T = coefficient_bound_T(M);
  const double s0 = constants().s0;
  const double R =
      rho * (lambda0(M) - T * sum_even / (one_minus * one_minus) -
             (16.0 * M / (std::numbers::pi * std::numbers::pi)) * s0 *
                 std::atan(rho));

  return {LandauFamily::layered, M, p, rho, R, bis.f_at_root, bis.iterations};
}

inline LandauResult solve_weighted(double M, int p, double tol = 1e-12) {
  detail::check_equation_args(0.0, M, p);
  const auto bis = detail::solve_radius(
      [&](double rho) { return radius_equation_weighted(rho, M); }, tol);
  const double rho = bis.root;

  const double s0 = constants().s0;
  const double bracket =
      lambda0(M) -
      (16.0 * M / (std::numbers::pi * std::numbers::pi)) * s0 * std::atan(rho);
  double weight = rho;  // rho^(2p-1), built by repeated multiplication so
                        // that R(p+1)/R(p) = rho^2 holds to roundoff
  const double rho2 = rho * rho;
  for (int k = 1; k < p; ++k) weight *= rho2;

  return {LandauFamily::weighted, M, p, rho, weight * bracket,
          bis.f_at_root, bis.iterations};
}

inline LandauResult solve(LandauFamily family, double M, int p,
                          double tol = 1e-12) {
  return family == LandauFamily::layered ? solve_layered(M, p, tol)
                                         : solve_weighted(M, p, tol);
}

// Cartesian product, p-major then M ascending in input order.
inline std::vector<LandauResult> generate_table(LandauFamily family,
                                                const std::vector<double>& Ms,
                                                const std::vector<int>& ps,
                                                double tol = 1e-12) {
  std::vector<LandauResult> rows;
  rows.reserve(Ms.size() * ps.size());
  for (int p : ps)
    for (double M : Ms) rows.push_back(solve(family, M, p, tol));
  return rows;
}

// Hypothesis audit for the layered family: every layer is harmonic by
// construction, f(0) and the unweighted layer must vanish at the origin,
// J_f(0) = 1, and each layer must stay within the bound M (sampled on the
// ring r = 0.999).
struct LayeredHypothesisReport {
  bool layers_harmonic = true;
  double f0_abs = 0.0;
  bool f0_zero = false;
  double top_layer_origin_abs = 0.0;
  bool top_layer_origin_zero = false;
  double jacobian_at_origin = 0.0;
  bool jacobian_ok = false;
  std::vector<double> layer_sups;
  bool sups_ok = false;
  bool passed = false;
};

inline LayeredHypothesisReport check_layered_hypotheses(const PHarmonicMap& f,
                                                        double M,
                                                        int sup_angles = 1024) {
  if (!(M >= 1.0)) throw std::invalid_argument("M must be >= 1");
  if (sup_angles < 1) throw std::invalid_argument("sup_angles must be >= 1");

  LayeredHypothesisReport rep;
  rep.f0_abs = std::abs(f(Complex{0.0, 0.0}));
  rep.f0_zero = rep.f0_abs <= 1e-12;
  rep.top_layer_origin_abs = std::abs(f.layer(1).c0());
  rep.top_layer_origin_zero = rep.top_layer_origin_abs <= 1e-12;
  rep.jacobian_at_origin = metrics(f, Complex{0.0, 0.0}).jacobian;
  rep.jacobian_ok = std::abs(rep.jacobian_at_origin - 1.0) <= 1e-9;

  constexpr double kSupRadius = 0.999;
  rep.layer_sups.reserve(static_cast<std::size_t>(f.p()));
  bool sups_ok = true;
  for (int k = 1; k <= f.p(); ++k) {
    const HarmonicSeries& layer = f.layer(k);
    double sup = 0.0;
    for (int j = 0; j < sup_angles; ++j) {
      const double theta = 2.0 * std::numbers::pi * j / sup_angles;
      const Complex z = kSupRadius * Complex{std::cos(theta), std::sin(theta)};
      sup = std::max(sup, std::abs(layer(z)));
    }
    rep.layer_sups.push_back(sup);
    sups_ok = sups_ok && sup <= M + 1e-12;
  }
  rep.sups_ok = sups_ok;
  rep.passed = rep.layers_harmonic && rep.f0_zero &&
               rep.top_layer_origin_zero && rep.jacobian_ok && rep.sups_ok;
  return rep;
}

}  // namespace pharmonic::landau
