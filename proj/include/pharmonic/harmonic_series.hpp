#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pharmonic/types.hpp"

namespace pharmonic {

// Finite complex series c0 + sum_n c_n z^n + sum_n d_n conj(z)^n.
// d_n is the literal coefficient of conj(z)^n, not a conjugated value.
// The analytic and anti-analytic parts always carry the same degree; the
// shorter side is zero padded so indexing stays uniform.
class HarmonicSeries {
 public:
  HarmonicSeries() = default;

  HarmonicSeries(Complex c0, std::vector<Complex> c, std::vector<Complex> d)
      : c0_(c0), c_(std::move(c)), d_(std::move(d)) {
    const std::size_t n = std::max(c_.size(), d_.size());
    c_.resize(n, Complex{});
    d_.resize(n, Complex{});
  }

  static HarmonicSeries zero() { return HarmonicSeries{}; }

  static HarmonicSeries constant(Complex c0) {
    return HarmonicSeries{c0, {}, {}};
  }

  // The series z itself: c_1 = 1, everything else zero.
  static HarmonicSeries identity() {
    return HarmonicSeries{Complex{}, {Complex{1.0, 0.0}}, {}};
  }

  int degree() const { return static_cast<int>(c_.size()); }

  Complex c0() const { return c0_; }

  // 1-based coefficient access; indices past the stored degree read as zero.
  Complex c(int n) const {
    if (n < 1 || n > degree()) return Complex{};
    return c_[static_cast<std::size_t>(n - 1)];
  }

  Complex d(int n) const {
    if (n < 1 || n > degree()) return Complex{};
    return d_[static_cast<std::size_t>(n - 1)];
  }

  void set_c0(Complex v) { c0_ = v; }

  void set_c(int n, Complex v) {
    ensure_degree(n);
    c_[static_cast<std::size_t>(n - 1)] = v;
  }

  void set_d(int n, Complex v) {
    ensure_degree(n);
    d_[static_cast<std::size_t>(n - 1)] = v;
  }

  bool is_zero() const {
    if (c0_ != Complex{}) return false;
    for (const auto& v : c_)
      if (v != Complex{}) return false;
    for (const auto& v : d_)
      if (v != Complex{}) return false;
    return true;
  }

  HarmonicSeries scaled(Complex s) const {
    HarmonicSeries out = *this;
    out.c0_ *= s;
    for (auto& v : out.c_) v *= s;
    for (auto& v : out.d_) v *= s;
    return out;
  }

  // Horner evaluation of both halves; the anti-analytic half runs in conj(z).
  Complex operator()(Complex z) const {
    const Complex zb = std::conj(z);
    Complex a{};
    Complex b{};
    for (int n = degree(); n >= 1; --n) {
      a = (a + c_[static_cast<std::size_t>(n - 1)]) * z;
      b = (b + d_[static_cast<std::size_t>(n - 1)]) * zb;
    }
    return c0_ + a + b;
  }

  friend bool operator==(const HarmonicSeries& lhs, const HarmonicSeries& rhs) {
    const int n = std::max(lhs.degree(), rhs.degree());
    if (lhs.c0_ != rhs.c0_) return false;
    for (int k = 1; k <= n; ++k) {
      if (lhs.c(k) != rhs.c(k)) return false;
      if (lhs.d(k) != rhs.d(k)) return false;
    }
    return true;
  }

 private:
  void ensure_degree(int n) {
    if (n < 1) throw std::invalid_argument("coefficient index must be >= 1");
    if (n > degree()) {
      c_.resize(static_cast<std::size_t>(n), Complex{});
      d_.resize(static_cast<std::size_t>(n), Complex{});
    }
  }

  Complex c0_{};
  std::vector<Complex> c_;
  std::vector<Complex> d_;
};

}  // namespace pharmonic
