#pragma once

#include <cstddef>
#include <vector>

#include "pharmonic/bipoly.hpp"
#include "pharmonic/pharmonic_map.hpp"
#include "pharmonic/types.hpp"

namespace pharmonic {

// Value and Wirtinger derivatives of a map at one point.
struct WirtingerJet {
  Complex f;
  Complex f_z;
  Complex f_zbar;
  Complex f_zz;
  Complex f_zbarzbar;
  Complex f_zzbar;
};

struct PointMetrics {
  double lambda;    // |f_z| - |f_zbar|
  double Lambda;    // |f_z| + |f_zbar|
  double jacobian;  // lambda * Lambda = |f_z|^2 - |f_zbar|^2
};

// Precomputes flattened term lists for a map and its five derivative
// polynomials, so repeated evaluation over a grid builds each power table
// once per point instead of once per polynomial.
class JetEvaluator {
 public:
  explicit JetEvaluator(const PHarmonicMap& f) {
    const BiPolynomial q = to_bipoly(f);
    const BiPolynomial qz = q.dz();
    const BiPolynomial qzb = q.dzbar();
    flatten(q, f_);
    flatten(qz, fz_);
    flatten(qzb, fzb_);
    flatten(qz.dz(), fzz_);
    flatten(qzb.dzbar(), fzbzb_);
    flatten(qz.dzbar(), fzzb_);
    max_i_ = std::max({max_i(f_), max_i(fz_), max_i(fzb_), max_i(fzz_),
                       max_i(fzbzb_), max_i(fzzb_)});
    max_j_ = std::max({max_j(f_), max_j(fz_), max_j(fzb_), max_j(fzz_),
                       max_j(fzbzb_), max_j(fzzb_)});
  }

  WirtingerJet at(Complex z) const {
    const std::vector<Complex> zp = BiPolynomial::powers(z, max_i_);
    const std::vector<Complex> zbp = BiPolynomial::powers(std::conj(z), max_j_);
    return WirtingerJet{eval(f_, zp, zbp),     eval(fz_, zp, zbp),
                        eval(fzb_, zp, zbp),   eval(fzz_, zp, zbp),
                        eval(fzbzb_, zp, zbp), eval(fzzb_, zp, zbp)};
  }

 private:
  struct Term {
    int i;
    int j;
    Complex e;
  };

  static void flatten(const BiPolynomial& q, std::vector<Term>& out) {
    out.reserve(q.terms().size());
    for (const auto& [key, e] : q.terms())
      out.push_back(Term{key.first, key.second, e});
  }

  static int max_i(const std::vector<Term>& t) {
    int d = 0;
    for (const auto& term : t) d = std::max(d, term.i);
    return d;
  }

  static int max_j(const std::vector<Term>& t) {
    int d = 0;
    for (const auto& term : t) d = std::max(d, term.j);
    return d;
  }

  static Complex eval(const std::vector<Term>& t,
                      const std::vector<Complex>& zp,
                      const std::vector<Complex>& zbp) {
    Complex acc{};
    for (const auto& term : t)
      acc += term.e * zp[static_cast<std::size_t>(term.i)] *
             zbp[static_cast<std::size_t>(term.j)];
    return acc;
  }

  std::vector<Term> f_, fz_, fzb_, fzz_, fzbzb_, fzzb_;
  int max_i_ = 0;
  int max_j_ = 0;
};

inline WirtingerJet wirtinger(const PHarmonicMap& f, Complex z) {
  return JetEvaluator{f}.at(z);
}

inline PointMetrics metrics(const WirtingerJet& jet) {
  const double az = std::abs(jet.f_z);
  const double ab = std::abs(jet.f_zbar);
  // (az - ab)(az + ab) keeps the sign of the difference accurate when the
  // two moduli are close, unlike az*az - ab*ab.
  return PointMetrics{az - ab, az + ab, (az - ab) * (az + ab)};
}

inline PointMetrics metrics(const PHarmonicMap& f, Complex z) {
  return metrics(wirtinger(f, z));
}

}  // namespace pharmonic
