#pragma once

#include <cmath>
#include <stdexcept>

namespace pharmonic {

struct BisectionResult {
  double root = 0.0;
  double f_at_root = 0.0;
  int iterations = 0;
};

// Bisection for a function positive at lo and negative at hi. Stops when the
// bracket width drops below width_tol; the residual at the midpoint is
// reported, not thrown on, so callers can decide what residual they accept.
template <typename F>
BisectionResult bisect_decreasing(F&& f, double lo, double hi,
                                  double width_tol = 1e-14,
                                  int max_iter = 200) {
  double flo = f(lo);
  double fhi = f(hi);
  if (!(flo > 0.0) || !(fhi < 0.0))
    throw std::runtime_error(
        "no bracket: expected f(lo) > 0 and f(hi) < 0");
  BisectionResult out;
  double mid = lo;
  double fmid = flo;
  while (hi - lo > width_tol && out.iterations < max_iter) {
    mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // bracket exhausted in doubles
    fmid = f(mid);
    if (fmid > 0.0) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
      fhi = fmid;
    }
    ++out.iterations;
  }
  out.root = 0.5 * (lo + hi);
  out.f_at_root = f(out.root);
  return out;
}

}  // namespace pharmonic
