#pragma once

#include <map>
#include <utility>
#include <vector>

#include "pharmonic/types.hpp"

namespace pharmonic {

// Sparse polynomial in z and conj(z): sum e_{ij} z^i conj(z)^j.
// Terms that become exactly zero are pruned, so is_zero() means the
// coefficient map is empty, with no tolerance involved. That exactness is
// what lets the iterated-Laplacian checks compare against literal zero.
class BiPolynomial {
 public:
  using Key = std::pair<int, int>;
  using TermMap = std::map<Key, Complex>;

  BiPolynomial() = default;

  void add_term(int i, int j, Complex e) {
    if (e == Complex{}) return;
    const Key key{i, j};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      terms_.emplace(key, e);
      return;
    }
    it->second += e;
    if (it->second == Complex{}) terms_.erase(it);
  }

  Complex coeff(int i, int j) const {
    auto it = terms_.find(Key{i, j});
    return it == terms_.end() ? Complex{} : it->second;
  }

  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }

  int degree_z() const {
    int d = 0;
    for (const auto& [key, e] : terms_) d = std::max(d, key.first);
    return d;
  }

  int degree_zbar() const {
    int d = 0;
    for (const auto& [key, e] : terms_) d = std::max(d, key.second);
    return d;
  }

  // Wirtinger derivative d/dz: z^i conj(z)^j -> i z^(i-1) conj(z)^j.
  BiPolynomial dz() const {
    BiPolynomial out;
    for (const auto& [key, e] : terms_) {
      const auto [i, j] = key;
      if (i > 0) out.add_term(i - 1, j, static_cast<double>(i) * e);
    }
    return out;
  }

  // Wirtinger derivative d/dconj(z).
  BiPolynomial dzbar() const {
    BiPolynomial out;
    for (const auto& [key, e] : terms_) {
      const auto [i, j] = key;
      if (j > 0) out.add_term(i, j - 1, static_cast<double>(j) * e);
    }
    return out;
  }

  // Laplacian = 4 d^2/dz dconj(z), applied per monomial in one pass.
  BiPolynomial laplacian() const {
    BiPolynomial out;
    for (const auto& [key, e] : terms_) {
      const auto [i, j] = key;
      if (i > 0 && j > 0)
        out.add_term(i - 1, j - 1, 4.0 * static_cast<double>(i) *
                                       static_cast<double>(j) * e);
    }
    return out;
  }

  BiPolynomial shifted(int di, int dj) const {
    BiPolynomial out;
    for (const auto& [key, e] : terms_)
      out.add_term(key.first + di, key.second + dj, e);
    return out;
  }

  BiPolynomial scaled(Complex s) const {
    BiPolynomial out;
    for (const auto& [key, e] : terms_) out.add_term(key.first, key.second, s * e);
    return out;
  }

  BiPolynomial& operator+=(const BiPolynomial& rhs) {
    for (const auto& [key, e] : rhs.terms_) add_term(key.first, key.second, e);
    return *this;
  }

  friend BiPolynomial operator+(BiPolynomial lhs, const BiPolynomial& rhs) {
    lhs += rhs;
    return lhs;
  }

  friend bool operator==(const BiPolynomial& lhs, const BiPolynomial& rhs) {
    return lhs.terms_ == rhs.terms_;
  }

  Complex operator()(Complex z) const {
    const std::vector<Complex> zp = powers(z, degree_z());
    const std::vector<Complex> zbp = powers(std::conj(z), degree_zbar());
    Complex acc{};
    for (const auto& [key, e] : terms_)
      acc += e * zp[static_cast<std::size_t>(key.first)] *
             zbp[static_cast<std::size_t>(key.second)];
    return acc;
  }

  static std::vector<Complex> powers(Complex z, int n) {
    std::vector<Complex> p(static_cast<std::size_t>(n) + 1);
    p[0] = Complex{1.0, 0.0};
    for (int k = 1; k <= n; ++k)
      p[static_cast<std::size_t>(k)] = p[static_cast<std::size_t>(k - 1)] * z;
    return p;
  }

 private:
  TermMap terms_;
};

// Differential operator z d/dz - conj(z) d/dconj(z); degree preserving,
// acts on each monomial as multiplication by (i - j).
inline BiPolynomial mocanu_D(const BiPolynomial& q) {
  BiPolynomial out;
  for (const auto& [key, e] : q.terms()) {
    const auto [i, j] = key;
    out.add_term(i, j, static_cast<double>(i - j) * e);
  }
  return out;
}

}  // namespace pharmonic
