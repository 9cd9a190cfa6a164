#include "indzero/certify.hpp"
#include "indzero/errors.hpp"
#include "indzero/regions.hpp"

#include <cmath>

namespace indzero {

std::string_view to_string(OrbitStop stop) {
  switch (stop) {
  case OrbitStop::MaxIterations:
    return "max_iterations";
  case OrbitStop::Diverged:
    return "diverged";
  case OrbitStop::NearMinusOne:
    return "near_minus_one";
  }
  return "max_iterations";
}

namespace {

void check_orbit_args(int d, ComplexPoint lambda, std::size_t n_max) {
  require_model_degree(d);
  require_finite(lambda, "lambda");
  if (n_max > kMaxOrbitLength) {
    throw PreconditionError("orbit length must not exceed 1e6");
  }
}

/// Records x_k given 1 + x_k; returns false when the orbit must stop.
bool record(OrbitResult& out, ComplexPoint point, ComplexPoint one_plus) {
  const std::size_t k = out.points.size();
  out.points.push_back(point);
  const double dist = std::abs(one_plus);
  out.min_dist_to_minus1 = k == 0 ? dist : std::min(out.min_dist_to_minus1, dist);
  if (one_plus.real() < 0.0 && !out.crossed) {
    out.crossed = true;
    out.first_crossing = k;
  }
  if (dist < kOrbitNearMinusOne) {
    out.stop = OrbitStop::NearMinusOne;
    return false;
  }
  if (!std::isfinite(dist) || std::abs(one_plus - 1.0) > kOrbitDivergence) {
    out.stop = OrbitStop::Diverged;
    return false;
  }
  return true;
}

} // namespace

OrbitResult orbit(int d, ComplexPoint lambda, std::size_t n_max) {
  check_orbit_args(d, lambda, n_max);
  OrbitResult out;
  out.points.reserve(n_max + 1);
  ComplexPoint x = 0.0;
  if (!record(out, x, 1.0 + x)) {
    return out;
  }
  for (std::size_t k = 0; k < n_max; ++k) {
    x = tree_map(x, lambda, d);
    if (!record(out, x, 1.0 + x)) {
      break;
    }
  }
  return out;
}

OrbitResult orbit_w(int d, ComplexPoint lambda, std::size_t n_max) {
  check_orbit_args(d, lambda, n_max);
  OrbitResult out;
  out.w_coordinates = true;
  out.points.reserve(n_max + 1);
  ComplexPoint w = 0.0;
  record(out, w, 1.0);
  for (std::size_t k = 0; k < n_max; ++k) {
    const ComplexPoint arg = 1.0 + lambda * std::exp(-static_cast<double>(d) * w);
    if (std::abs(arg) < kOrbitNearMinusOne) {
      out.stop = OrbitStop::NearMinusOne;
      out.min_dist_to_minus1 = std::min(out.min_dist_to_minus1, std::abs(arg));
      break;
    }
    w = principal_log(arg);
    if (!record(out, w, arg)) {
      break;
    }
  }
  return out;
}

} // namespace indzero
