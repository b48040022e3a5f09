#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "pharmonic/bipoly.hpp"
#include "pharmonic/harmonic_series.hpp"
#include "pharmonic/types.hpp"

namespace pharmonic {

// f(z) = sum_{k=1}^{p} |z|^{2(k-1)} L_k(z) with each layer L_k a finite
// harmonic series. layer(1) is the unweighted layer; layer(p) carries the
// highest weight |z|^{2(p-1)}.
class PHarmonicMap {
 public:
  explicit PHarmonicMap(std::vector<HarmonicSeries> layers)
      : layers_(std::move(layers)) {
    if (layers_.empty())
      throw std::invalid_argument("a map needs at least one layer");
  }

  explicit PHarmonicMap(HarmonicSeries single)
      : PHarmonicMap(std::vector<HarmonicSeries>{std::move(single)}) {}

  int p() const { return static_cast<int>(layers_.size()); }

  // 1-based layer access; layer k is weighted by |z|^{2(k-1)}.
  const HarmonicSeries& layer(int k) const {
    if (k < 1 || k > p()) throw std::out_of_range("layer index out of range");
    return layers_[static_cast<std::size_t>(k - 1)];
  }

  HarmonicSeries& layer(int k) {
    if (k < 1 || k > p()) throw std::out_of_range("layer index out of range");
    return layers_[static_cast<std::size_t>(k - 1)];
  }

  int max_degree() const {
    int d = 0;
    for (const auto& layer : layers_) d = std::max(d, layer.degree());
    return d;
  }

  bool is_zero() const {
    for (const auto& layer : layers_)
      if (!layer.is_zero()) return false;
    return true;
  }

  // Highest k whose layer has a nonzero coefficient, or 0 for the zero map.
  int deepest_layer_nonzero() const {
    for (int k = p(); k >= 1; --k)
      if (!layer(k).is_zero()) return k;
    return 0;
  }

  // Horner in w = |z|^2 across layers; each step evaluates one layer.
  Complex operator()(Complex z) const {
    const double w = std::norm(z);
    Complex acc{};
    for (int k = p(); k >= 1; --k)
      acc = acc * w + layers_[static_cast<std::size_t>(k - 1)](z);
    return acc;
  }

 private:
  std::vector<HarmonicSeries> layers_;
};

inline bool operator==(const PHarmonicMap& lhs, const PHarmonicMap& rhs) {
  if (lhs.p() != rhs.p()) return false;
  for (int k = 1; k <= lhs.p(); ++k)
    if (!(lhs.layer(k) == rhs.layer(k))) return false;
  return true;
}

// Expand the layered form into an exact bi-polynomial. Each coefficient of
// each layer lands in its own (i, j) slot: with base = k - 1, the constant
// goes to (base, base), c_n to (base + n, base), d_n to (base, base + n).
// Distinct slots never collide, so no accumulation or cancellation happens.
inline BiPolynomial to_bipoly(const PHarmonicMap& f) {
  BiPolynomial q;
  for (int k = 1; k <= f.p(); ++k) {
    const HarmonicSeries& layer = f.layer(k);
    const int base = k - 1;
    q.add_term(base, base, layer.c0());
    for (int n = 1; n <= layer.degree(); ++n) {
      q.add_term(base + n, base, layer.c(n));
      q.add_term(base, base + n, layer.d(n));
    }
  }
  return q;
}

// z f_z - conj(z) f_zbar, computed layer by layer. The weight |z|^{2(k-1)}
// is annihilated by the operator, so only the series part transforms:
// constants drop, c_n -> n c_n, d_n -> -n d_n. The result is again a map
// with the same layer count.
inline PHarmonicMap apply_D(const PHarmonicMap& f) {
  std::vector<HarmonicSeries> layers;
  layers.reserve(static_cast<std::size_t>(f.p()));
  for (int k = 1; k <= f.p(); ++k) {
    const HarmonicSeries& src = f.layer(k);
    HarmonicSeries dst;
    for (int n = 1; n <= src.degree(); ++n) {
      dst.set_c(n, static_cast<double>(n) * src.c(n));
      dst.set_d(n, -static_cast<double>(n) * src.d(n));
    }
    layers.push_back(std::move(dst));
  }
  return PHarmonicMap{std::move(layers)};
}

// |z|^{2(p-1)} G(z) as a p-layer map: G sits at layer p, the rest are zero.
inline PHarmonicMap build_weighted_map(const HarmonicSeries& G, int p) {
  if (p < 1) throw std::invalid_argument("p must be >= 1");
  std::vector<HarmonicSeries> layers(static_cast<std::size_t>(p));
  layers.back() = G;
  return PHarmonicMap{std::move(layers)};
}

}  // namespace pharmonic
