#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "pharmonic/pharmonic_map.hpp"
#include "pharmonic/sampling.hpp"
#include "pharmonic/types.hpp"
#include "pharmonic/wirtinger.hpp"

namespace pharmonic::geometry {

// |f(z)| at or below this counts as a vanishing point for the guarded
// ratio predicates.
inline constexpr double kZeroTol = 1e-12;
// Admissibility threshold |G(z)| * |weight(z)| for the ratio invariance
// check; points below it are skipped rather than divided through.
inline constexpr double kWeightTol = 1e-10;

// Outcome of a sampled geometric predicate.  min_margin is the quantity
// whose positivity defines the property (Jacobian, Re(Df/f), or
// Re(D^2f/Df)); worst_point is where the minimum was attained, with ties
// resolved to the first grid point in radius-major, angle-minor order.
// When a precondition or guard fails, `reason` says which one and
// min_margin/worst_point describe the offending sample where that makes
// sense.
struct PredicateReport {
  bool passed = false;
  double min_margin = 0.0;
  Complex worst_point{0.0, 0.0};
  std::size_t points_checked = 0;
  bool vacuous = false;
  std::string reason;
};

// min J_f over the grid; passed iff strictly positive everywhere sampled.
inline PredicateReport sense_preserving_report(const PHarmonicMap& f,
                                               const SamplingGrid& grid) {
  PredicateReport rep;
  rep.points_checked = grid.size();
  if (f.is_zero()) {
    rep.vacuous = true;
    rep.reason = "all layers zero";
    return rep;
  }
  JetEvaluator jets(f);
  double min_j = std::numeric_limits<double>::infinity();
  Complex arg{0.0, 0.0};
  grid.for_each([&](Complex z) {
    const double j = metrics(jets.at(z)).jacobian;
    if (j < min_j) {
      min_j = j;
      arg = z;
    }
  });
  rep.min_margin = min_j;
  rep.worst_point = arg;
  rep.passed = min_j > 0.0;
  return rep;
}

namespace detail {

enum class RatioKind { starlike, convex };

// Shared scan for the two ratio predicates.  Requires f(0) = 0, a
// positive Jacobian on the whole grid, and nonvanishing denominators;
// failure reasons are prioritized: vanishing denominator, then
// sense reversal, then a nonpositive margin (empty reason).
inline PredicateReport ratio_predicate_report(const PHarmonicMap& f,
                                              const SamplingGrid& grid,
                                              RatioKind kind) {
  PredicateReport rep;
  rep.points_checked = grid.size();
  if (f.is_zero()) {
    rep.vacuous = true;
    rep.reason = "all layers zero";
    return rep;
  }
  const Complex f0 = f(Complex{0.0, 0.0});
  if (std::abs(f0) > kZeroTol) {
    rep.reason = "f(0) != 0";
    return rep;
  }

  JetEvaluator jets(f);
  const PHarmonicMap df = apply_D(f);
  const PHarmonicMap ddf = apply_D(df);

  bool denominator_vanished = false;
  Complex vanish_point{0.0, 0.0};
  double min_j = std::numeric_limits<double>::infinity();
  Complex j_arg{0.0, 0.0};
  double min_margin = std::numeric_limits<double>::infinity();
  Complex margin_arg{0.0, 0.0};

  grid.for_each([&](Complex z) {
    if (denominator_vanished) return;
    const WirtingerJet jet = jets.at(z);
    const double j = metrics(jet).jacobian;
    if (j < min_j) {
      min_j = j;
      j_arg = z;
    }
    Complex numerator, denominator;
    if (kind == RatioKind::starlike) {
      numerator = df(z);
      denominator = jet.f;
      if (std::abs(denominator) <= kZeroTol) {
        denominator_vanished = true;
        vanish_point = z;
        return;
      }
    } else {
      numerator = ddf(z);
      denominator = df(z);
      if (std::abs(jet.f) <= kZeroTol || std::abs(denominator) <= kZeroTol) {
        denominator_vanished = true;
        vanish_point = z;
        return;
      }
    }
    const double margin = std::real(numerator / denominator);
    if (margin < min_margin) {
      min_margin = margin;
      margin_arg = z;
    }
  });

  if (denominator_vanished) {
    rep.reason = kind == RatioKind::starlike ? "f vanishes on grid"
                                             : "f or Df vanishes on grid";
    rep.worst_point = vanish_point;
    return rep;
  }
  if (!(min_j > 0.0)) {
    rep.reason = "sense-reversing";
    rep.min_margin = min_j;
    rep.worst_point = j_arg;
    return rep;
  }
  rep.min_margin = min_margin;
  rep.worst_point = margin_arg;
  rep.passed = min_margin > 0.0;
  return rep;
}

}  // namespace detail

// Starlikeness with respect to the origin: f(0) = 0, sense preserving,
// and Re(Df/f) > 0 on the grid.
inline PredicateReport starlike_report(const PHarmonicMap& f,
                                       const SamplingGrid& grid) {
  return detail::ratio_predicate_report(f, grid, detail::RatioKind::starlike);
}

inline PredicateReport starlike_report(const PHarmonicMap& f) {
  return starlike_report(f, SamplingGrid::uniform());
}

// Convexity: f(0) = 0, sense preserving, and Re(D(Df)/Df) > 0 on the grid.
inline PredicateReport convex_report(const PHarmonicMap& f,
                                     const SamplingGrid& grid) {
  return detail::ratio_predicate_report(f, grid, detail::RatioKind::convex);
}

inline PredicateReport convex_report(const PHarmonicMap& f) {
  return convex_report(f, SamplingGrid::uniform());
}

// Check that f(z) = sum_k lambda_k |z|^(2(k-1)) G(z) satisfies
// Df/f = DG/G and D(Df)/Df = D(DG)/DG wherever the denominators are
// admissible.  Both identities hold exactly because D annihilates the
// radial weight; the report carries the worst sampled deviation.
struct RatioInvarianceReport {
  double max_ratio_deviation = 0.0;
  double max_second_ratio_deviation = 0.0;
  std::size_t points_checked = 0;
  std::size_t admissible_first = 0;
  std::size_t admissible_second = 0;
  bool vacuous = false;  // no admissible point for the first ratio
};

inline RatioInvarianceReport ratio_invariance_check(
    const HarmonicSeries& G, const std::vector<Complex>& lambdas,
    const SamplingGrid& grid) {
  if (lambdas.empty()) throw std::invalid_argument("lambdas must be nonempty");

  RatioInvarianceReport rep;
  rep.points_checked = grid.size();

  std::vector<HarmonicSeries> layers;
  layers.reserve(lambdas.size());
  for (const Complex& lam : lambdas) layers.push_back(G.scaled(lam));
  const PHarmonicMap f{layers};
  const PHarmonicMap g{G};
  const PHarmonicMap df = apply_D(f);
  const PHarmonicMap ddf = apply_D(df);
  const PHarmonicMap dg = apply_D(g);
  const PHarmonicMap ddg = apply_D(dg);

  grid.for_each([&](Complex z) {
    // weight(z) = sum_k lambda_k |z|^(2(k-1)), Horner in |z|^2
    const double u = std::norm(z);
    Complex w{0.0, 0.0};
    for (std::size_t k = lambdas.size(); k-- > 0;) w = w * u + lambdas[k];

    const Complex gv = g(z);
    if (std::abs(gv) * std::abs(w) > kWeightTol) {
      ++rep.admissible_first;
      const double dev = std::abs(df(z) / f(z) - dg(z) / gv);
      rep.max_ratio_deviation = std::max(rep.max_ratio_deviation, dev);
    }
    const Complex dgv = dg(z);
    if (std::abs(dgv) * std::abs(w) > kWeightTol) {
      ++rep.admissible_second;
      const double dev = std::abs(ddf(z) / df(z) - ddg(z) / dgv);
      rep.max_second_ratio_deviation =
          std::max(rep.max_second_ratio_deviation, dev);
    }
  });

  rep.vacuous = rep.admissible_first == 0;
  return rep;
}

}  // namespace pharmonic::geometry
