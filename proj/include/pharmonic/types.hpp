#pragma once

#include <cmath>
#include <complex>

namespace pharmonic {

using Complex = std::complex<double>;

inline bool finite_value(double x) { return std::isfinite(x); }

inline bool finite_value(const Complex& z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// Integer power by repeated multiplication. Exact for n == 0 and n == 1,
// and avoids the pow() detour through polar form for complex bases.
inline Complex ipow(Complex z, int n) {
  Complex acc{1.0, 0.0};
  for (int i = 0; i < n; ++i) acc *= z;
  return acc;
}

}  // namespace pharmonic
