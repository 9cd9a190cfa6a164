#include "indzero/complexgeom.hpp"

#include "indzero/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace indzero {

void require_finite(ComplexPoint z, const char* what) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw PreconditionError(std::string(what) + " must be finite");
  }
}

double principal_arg(ComplexPoint z) {
  if (z.imag() == 0.0) {
    return z.real() < 0.0 ? kPi : 0.0;
  }
  return std::atan2(z.imag(), z.real());
}

ComplexPoint principal_log(ComplexPoint z) {
  require_finite(z, "log argument");
  if (z == ComplexPoint{}) {
    throw DomainError("log of zero");
  }
  return {std::log(std::abs(z)), principal_arg(z)};
}

ComplexPoint cpow(ComplexPoint z, double delta) {
  require_finite(z, "power base");
  if (!(delta >= 0.0) || !std::isfinite(delta)) {
    throw PreconditionError("power exponent must be a finite nonnegative real");
  }
  if (z == ComplexPoint{}) {
    if (delta == 0.0) {
      return 1.0;
    }
    throw DomainError("zero raised to a positive power");
  }
  return std::exp(delta * principal_log(z));
}

double arg1p(ComplexPoint z) {
  require_finite(z, "arg1p argument");
  const ComplexPoint w = 1.0 + z;
  if (w == ComplexPoint{}) {
    throw DomainError("arg1p at -1");
  }
  return principal_arg(w);
}

double arg1p_relative(ComplexPoint z, ComplexPoint reference) {
  const ComplexPoint a = 1.0 + z;
  const ComplexPoint b = 1.0 + reference;
  if (a == ComplexPoint{} || b == ComplexPoint{}) {
    throw DomainError("arg1p at -1");
  }
  return principal_arg(a * std::conj(b));
}

double arg_unwrapped_near(ComplexPoint z, double reference) {
  if (z == ComplexPoint{}) {
    throw DomainError("argument of zero");
  }
  const ComplexPoint rotated = z * std::polar(1.0, -reference);
  return reference + principal_arg(rotated);
}

ArgUnwrapper::ArgUnwrapper(ComplexPoint first) : last_(first), value_(principal_arg(first)) {
  if (first == ComplexPoint{}) {
    throw DomainError("argument of zero");
  }
}

double ArgUnwrapper::push(ComplexPoint next) {
  if (next == ComplexPoint{}) {
    throw DomainError("argument of zero");
  }
  value_ += principal_arg(next * std::conj(last_));
  last_ = next;
  return value_;
}

bool covers(ComplexPoint cover, ComplexPoint z, double tol) {
  require_finite(cover, "cover");
  require_finite(z, "covered point");
  const double gap = arg1p_relative(z, cover);
  return std::abs(gap) <= tol && std::abs(1.0 + z) >= std::abs(1.0 + cover) - tol;
}

namespace {

double cross(ComplexPoint a, ComplexPoint b) { return a.real() * b.imag() - a.imag() * b.real(); }
double dot(ComplexPoint a, ComplexPoint b) { return a.real() * b.real() + a.imag() * b.imag(); }

} // namespace

bool ray_from_minus1_hits_segment(ComplexPoint z, ComplexPoint a, ComplexPoint b,
                                  ComplexPoint& hit, double tol) {
  // Work in coordinates centred at -1.
  const ComplexPoint dir = 1.0 + z;
  const ComplexPoint pa = 1.0 + a;
  const ComplexPoint pb = 1.0 + b;
  if (dir == ComplexPoint{}) {
    throw DomainError("ray from -1 through -1");
  }
  const ComplexPoint seg = pb - pa;
  const double denom = cross(dir, seg);
  const double scale = std::max({std::abs(pa), std::abs(pb), 1.0});
  if (std::abs(denom) <= 1e-15 * std::abs(dir) * std::max(std::abs(seg), 1e-300)) {
    // Ray parallel to the segment: covered only if the segment lies on the ray.
    if (std::abs(cross(dir, pa)) > tol * scale * std::abs(dir)) {
      return false;
    }
    // Pick the endpoint nearest to -1 that is in the ray direction.
    const bool a_ok = dot(dir, pa) > 0.0;
    const bool b_ok = dot(dir, pb) > 0.0;
    if (!a_ok && !b_ok) {
      return false;
    }
    ComplexPoint best = a_ok ? pa : pb;
    if (a_ok && b_ok && std::abs(pb) < std::abs(pa)) {
      best = pb;
    }
    hit = best - 1.0;
    return true;
  }
  // pa + u * seg = s * dir
  const double u = cross(pa, dir) / denom;
  if (u < -tol || u > 1.0 + tol) {
    return false;
  }
  const ComplexPoint q = pa + std::clamp(u, 0.0, 1.0) * seg;
  if (dot(q, dir) <= 0.0) {
    return false;
  }
  hit = q - 1.0;
  return true;
}

bool covered_by_segment(ComplexPoint z, ComplexPoint a, ComplexPoint b, double tol) {
  ComplexPoint hit;
  if (!ray_from_minus1_hits_segment(z, a, b, hit, tol)) {
    return false;
  }
  return std::abs(1.0 + z) >= std::abs(1.0 + hit) - tol;
}

CoverWitness geo_mean_dominates(ComplexPoint z1, ComplexPoint z2, double alpha) {
  require_finite(z1, "z1");
  require_finite(z2, "z2");
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw PreconditionError("alpha must lie in [0, 1]");
  }
  if (z1 == ComplexPoint{} || z2 == ComplexPoint{}) {
    throw PreconditionError("geo_mean_dominates needs nonzero points");
  }
  double theta = principal_arg(z1) - principal_arg(z2);
  if (std::abs(theta) > kPi + 1e-12) {
    throw PreconditionError("angular gap between z1 and z2 exceeds pi");
  }
  theta = std::clamp(theta, -kPi, kPi);
  if (z1 == z2) {
    return {1.0, alpha};
  }

  // Reduce to z2 = 1, z = r e^{i theta}, theta >= 0.
  const double r = std::abs(z1) / std::abs(z2);
  theta = std::abs(theta);

  if (theta == 0.0) {
    // Collinear with the origin: the geometric mean already lies on the segment.
    const double g = std::pow(r, alpha);
    if (r == 1.0) {
      return {1.0, alpha};
    }
    return {1.0, std::clamp((g - 1.0) / (r - 1.0), 0.0, 1.0)};
  }
  if (theta >= kPi) {
    // The segment passes through the origin.
    return {0.0, 1.0 / (1.0 + r)};
  }

  const double denom = r * std::sin((1.0 - alpha) * theta) + std::sin(alpha * theta);
  const double t = std::pow(r, 1.0 - alpha) * std::sin(theta) / denom;
  const double beta = std::sin(alpha * theta) / denom;
  return {t, beta};
}

ComplexPoint tree_map(ComplexPoint z, ComplexPoint lambda, int d) {
  const ComplexPoint w = 1.0 + z;
  if (w == ComplexPoint{}) {
    throw DomainError("tree map evaluated at -1");
  }
  ComplexPoint p = 1.0;
  ComplexPoint base = w;
  for (int e = d; e > 0; e >>= 1) {
    if (e & 1) {
      p *= base;
    }
    base *= base;
  }
  return lambda / p;
}

} // namespace indzero
