#pragma once

#include "indzero/errors.hpp"

#include <cmath>
#include <string>

namespace indzero::detail {

/// Bisection on a bracket with f(lo) < 0 <= f(hi) (either orientation in x).
/// Stops when the bracket collapses to adjacent doubles.
template <class F>
double bisect_root(F&& f, double lo, double hi, const char* what, int max_iter = 300) {
  double flo = f(lo);
  double fhi = f(hi);
  if (!(flo < 0.0) || !(fhi >= 0.0)) {
    throw SolverError(std::string(what) + ": bracket has no sign change");
  }
  for (int i = 0; i < max_iter; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) {
      return std::abs(flo) < std::abs(fhi) ? lo : hi;
    }
    const double fm = f(mid);
    if (!std::isfinite(fm)) {
      throw SolverError(std::string(what) + ": non-finite value inside bracket");
    }
    if (fm < 0.0) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
      fhi = fm;
    }
  }
  throw SolverError(std::string(what) + ": bisection did not converge");
}

} // namespace indzero::detail
