#include "indzero/regions.hpp"

#include "bisect.hpp"
#include "indzero/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <string>

namespace indzero {

namespace {

constexpr double kMembershipEps = 1e-12;

double d_of(int d) { return static_cast<double>(d); }

} // namespace

void require_model_degree(int d) {
  if (d < 2) {
    throw PreconditionError("d must be at least 2 (maximum degree d + 1 >= 3), got " + std::to_string(d));
  }
}

double shearer_radius(int d) {
  require_model_degree(d);
  const double x = d_of(d);
  return std::pow(x / (x + 1.0), x) / (x + 1.0);
}

double uniqueness_threshold(int d) {
  require_model_degree(d);
  const double x = d_of(d);
  return std::pow(x / (x - 1.0), x) / (x - 1.0);
}

ComplexPoint cardioid_point(int d, ComplexPoint alpha) {
  require_model_degree(d);
  require_finite(alpha, "alpha");
  if (std::abs(std::abs(alpha) - 1.0) > 1e-9) {
    throw PreconditionError("cardioid parameter must lie on the unit circle");
  }
  const double x = d_of(d);
  const ComplexPoint base = x / (x + alpha);
  // -alpha/(d+alpha) * (d/(d+alpha))^d, integer power.
  ComplexPoint p = 1.0;
  for (int i = 0; i < d; ++i) {
    p *= base;
  }
  return -alpha / (x + alpha) * p;
}

namespace {

ComplexPoint cardioid_at(int d, double s) { return cardioid_point(d, std::polar(1.0, -s)); }

double chord_error(ComplexPoint a, ComplexPoint b, ComplexPoint m) {
  const ComplexPoint ab = b - a;
  const double len = std::abs(ab);
  if (len == 0.0) {
    return std::abs(m - a);
  }
  return std::abs((m - a).real() * ab.imag() - (m - a).imag() * ab.real()) / len;
}

void refine(int d, double s0, ComplexPoint p0, double s1, ComplexPoint p1, double tol, int depth,
            std::vector<ComplexPoint>& out) {
  const double sm = 0.5 * (s0 + s1);
  const ComplexPoint pm = cardioid_at(d, sm);
  if (depth < 40 && (chord_error(p0, p1, pm) > tol || depth < 2)) {
    refine(d, s0, p0, sm, pm, tol, depth + 1, out);
    refine(d, sm, pm, s1, p1, tol, depth + 1, out);
    return;
  }
  out.push_back(p1);
}

} // namespace

std::vector<ComplexPoint> cardioid_polygon(int d, double chord_tol) {
  require_model_degree(d);
  constexpr int kCoarse = 64;
  std::vector<ComplexPoint> upper{cardioid_at(d, 0.0)};
  for (int k = 0; k < kCoarse; ++k) {
    const double s0 = kPi * k / kCoarse;
    const double s1 = k + 1 == kCoarse ? kPi : kPi * (k + 1) / kCoarse;
    refine(d, s0, upper.back(), s1, cardioid_at(d, s1), chord_tol, 0, upper);
  }
  upper.front() = {-shearer_radius(d), 0.0};
  upper.back() = {uniqueness_threshold(d), 0.0};
  std::vector<ComplexPoint> closed = upper;
  for (auto it = upper.rbegin() + 1; it != upper.rend(); ++it) {
    closed.push_back(std::conj(*it));
  }
  return closed;
}

namespace {

bool point_in_polygon(const std::vector<ComplexPoint>& poly, ComplexPoint p) {
  bool inside = false;
  for (std::size_t i = 0, j = poly.size() - 1; i < poly.size(); j = i++) {
    const ComplexPoint a = poly[i];
    const ComplexPoint b = poly[j];
    if ((a.imag() > p.imag()) != (b.imag() > p.imag())) {
      const double x = a.real() + (p.imag() - a.imag()) * (b.real() - a.real()) / (b.imag() - a.imag());
      if (p.real() < x) {
        inside = !inside;
      }
    }
  }
  return inside;
}

const std::vector<ComplexPoint>& cached_cardioid(int d) {
  static std::mutex mutex;
  static std::map<int, std::vector<ComplexPoint>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(d);
  if (it == cache.end()) {
    // chord error below 1e-6 absolute, and below 1e-6 relative to lambda*
    it = cache.emplace(d, cardioid_polygon(d, 1e-6 * std::min(1.0, shearer_radius(d)))).first;
  }
  return it->second;
}

} // namespace

bool cardioid_contains(int d, ComplexPoint lambda) {
  require_model_degree(d);
  require_finite(lambda, "lambda");
  return point_in_polygon(cached_cardioid(d), lambda);
}

double critical_theta_max(int d) {
  require_model_degree(d);
  return std::acos(1.0 / (d_of(d) + 0.5));
}

namespace {

double critical_bound_unchecked(int d, double theta) {
  const double x = d_of(d);
  const double s = std::pow(std::sin(0.5 * theta), 2);
  const double cap = x * std::log1p(1.0 / x);
  const double quad = 2.0 * x * (x + 1.0) * s / (x * x + 4.0 * (x + 1.0) * s);
  return std::min(cap, quad);
}

} // namespace

double critical_region_bound(int d, double theta) {
  const double theta_max = critical_theta_max(d);
  if (!(theta > 0.0 && theta <= theta_max)) {
    throw PreconditionError("critical-region theta must lie in (0, arccos(1/(d+0.5))]");
  }
  return critical_bound_unchecked(d, theta);
}

bool critical_region_contains(int d, ComplexPoint lambda) {
  require_model_degree(d);
  require_finite(lambda, "lambda");
  if (lambda == ComplexPoint{}) {
    return false;
  }
  const double theta = kPi - std::abs(principal_arg(lambda));
  const double theta_max = critical_theta_max(d);
  if (!(theta > 0.0 && theta <= theta_max * (1.0 + kMembershipEps))) {
    return false;
  }
  const double r = std::log(std::abs(lambda) / shearer_radius(d));
  const double bound = critical_bound_unchecked(d, std::min(theta, theta_max));
  return r >= -kMembershipEps && r <= bound + kMembershipEps;
}

double lhp_psi_star(int d, double phi) {
  const double x = d_of(d);
  return std::max(((2.0 - 1.0 / x) * phi - kPi) / (x + 1.0), 0.0);
}

namespace {

double lhp_bound_unchecked(int d, double phi) {
  const double x = d_of(d);
  const double psi = lhp_psi_star(d, phi);
  const double num = std::sin(phi / x) * std::pow(std::sin(phi), x);
  const double den = std::sin((x - 1.0) * phi / x - x * psi) * std::pow(std::sin(phi - psi), x);
  return num / den;
}

} // namespace

double lhp_bound(int d, double phi) {
  require_model_degree(d);
  if (!(phi >= kPi / 2 && phi < kPi)) {
    throw PreconditionError("lhp_bound needs phi in [pi/2, pi)");
  }
  return lhp_bound_unchecked(d, phi);
}

bool lhp_contains(int d, ComplexPoint lambda) {
  require_model_degree(d);
  require_finite(lambda, "lambda");
  if (lambda == ComplexPoint{}) {
    return false;
  }
  const double phi = std::abs(principal_arg(lambda));
  if (!(phi >= kPi / 2 && phi < kPi)) {
    return false;
  }
  return std::abs(lambda) < lhp_bound_unchecked(d, phi);
}

double theta_d_residual(int d, double x) {
  const double n = d_of(d);
  const double t = std::tan((kPi / 2 - x) / n);
  return std::tan(2.0 * x / n) - t / (1.0 - t / std::tan(x));
}

double theta_d(int d) {
  require_model_degree(d);
  static std::mutex mutex;
  static std::map<int, double> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(d); it != cache.end()) {
      return it->second;
    }
  }
  const double left = kPi / (2.0 * (d_of(d) + 1.0));
  const double right = kPi / 2;
  auto f = [d](double x) { return theta_d_residual(d, x); };
  // The right-hand side has a pole at the left end; walk towards it until the
  // difference is negative.
  double lo = left + 0.5 * (right - left);
  for (int i = 0; i < 200 && !(f(lo) < 0.0); ++i) {
    lo = left + 0.5 * (lo - left);
  }
  const double root = detail::bisect_root(f, lo, right, "theta_d");
  std::lock_guard lock(mutex);
  cache.emplace(d, root);
  return root;
}

double beta_star_residual(int d, double theta, double x) {
  const double n = d_of(d);
  const double t = std::tan((kPi / 2 - theta) / n);
  return std::tan((theta + x) / n) / std::sin(theta) - t / (std::sin(x) - std::cos(x) * t);
}

double beta_star(int d, double theta) {
  require_model_degree(d);
  const double td = theta_d(d);
  if (!(theta <= kPi / 2) || theta < td * (1.0 - 1e-12)) {
    throw PreconditionError("beta_star needs theta in [theta_d, pi/2]");
  }
  if (theta >= kPi / 2) {
    return 0.0;
  }
  const double pole = (kPi / 2 - theta) / d_of(d);
  auto f = [d, theta](double x) { return beta_star_residual(d, theta, x); };
  if (!(f(theta) >= 0.0)) {
    // theta == theta_d up to rounding: the root sits on the right end.
    return theta;
  }
  double lo = pole + 0.5 * (theta - pole);
  for (int i = 0; i < 200 && !(f(lo) < 0.0); ++i) {
    lo = pole + 0.5 * (lo - pole);
  }
  return detail::bisect_root(f, lo, theta, "beta_star");
}

namespace {

double rhp_bound_unchecked(int d, double theta) {
  const double n = d_of(d);
  if (theta == 0.0) {
    return 2.0 / n;
  }
  if (theta <= theta_d(d)) {
    return std::tan(2.0 * theta / n) / std::sin(theta);
  }
  return std::tan((theta + beta_star(d, theta)) / n) / std::sin(theta);
}

} // namespace

double rhp_bound(int d, double theta) {
  require_model_degree(d);
  if (!(theta > 0.0 && theta <= kPi / 2)) {
    throw PreconditionError("rhp_bound needs theta in (0, pi/2]");
  }
  return rhp_bound_unchecked(d, theta);
}

bool rhp_contains(int d, ComplexPoint lambda) {
  require_model_degree(d);
  require_finite(lambda, "lambda");
  if (lambda == ComplexPoint{}) {
    return false;
  }
  const double theta = std::abs(principal_arg(lambda));
  if (!(theta > 0.0 && theta <= kPi / 2)) {
    return false;
  }
  return std::abs(lambda) <= rhp_bound_unchecked(d, theta) * (1.0 + kMembershipEps);
}

std::string_view to_string(RegionKind kind) {
  switch (kind) {
  case RegionKind::Shearer:
    return "shearer";
  case RegionKind::Cardioid:
    return "cardioid";
  case RegionKind::Critical:
    return "critical";
  case RegionKind::Lhp:
    return "lhp";
  case RegionKind::Rhp:
    return "rhp";
  }
  return "unknown";
}

std::optional<RegionKind> parse_region_kind(std::string_view name) {
  for (auto k : kAllRegionKinds) {
    if (to_string(k) == name) {
      return k;
    }
  }
  return std::nullopt;
}

RegionVerdict region_membership(int d, ComplexPoint lambda) {
  require_model_degree(d);
  require_finite(lambda, "lambda");
  RegionVerdict v;
  const double lam_star = shearer_radius(d);
  const double modulus = std::abs(lambda);
  v.shearer = modulus <= lam_star * (1.0 + kMembershipEps);
  v.margin = 1.0 - modulus / lam_star;
  if (lambda == ComplexPoint{}) {
    return v;
  }
  v.critical = critical_region_contains(d, lambda);
  v.lhp = lhp_contains(d, lambda);
  v.rhp = rhp_contains(d, lambda);

  const double angle = std::abs(principal_arg(lambda));
  const double theta = kPi - angle;
  if (theta > 0.0 && theta <= critical_theta_max(d)) {
    v.margin = std::max(v.margin, critical_bound_unchecked(d, theta) - std::log(modulus / lam_star));
  }
  if (angle >= kPi / 2 && angle < kPi) {
    v.margin = std::max(v.margin, 1.0 - modulus / lhp_bound_unchecked(d, angle));
  }
  if (angle > 0.0 && angle <= kPi / 2) {
    v.margin = std::max(v.margin, 1.0 - modulus / rhp_bound_unchecked(d, angle));
  }
  return v;
}

namespace {

ComplexPoint boundary_point(int d, RegionKind kind, double param) {
  switch (kind) {
  case RegionKind::Shearer:
    return std::polar(shearer_radius(d), param);
  case RegionKind::Cardioid:
    if (param == 0.0) {
      return {-shearer_radius(d), 0.0};
    }
    if (param == kPi) {
      return {uniqueness_threshold(d), 0.0};
    }
    return cardioid_at(d, param);
  case RegionKind::Critical:
    return -shearer_radius(d) * std::exp(ComplexPoint{critical_bound_unchecked(d, param), -param});
  case RegionKind::Lhp:
    if (param >= kPi) {
      return 0.0;
    }
    return std::polar(lhp_bound_unchecked(d, param), param);
  case RegionKind::Rhp:
    if (param == kPi / 2) {
      return {0.0, rhp_bound_unchecked(d, param)};
    }
    return std::polar(rhp_bound_unchecked(d, param), param);
  }
  return 0.0;
}

std::pair<double, double> param_range(int d, RegionKind kind) {
  switch (kind) {
  case RegionKind::Shearer:
  case RegionKind::Cardioid:
    return {0.0, kPi};
  case RegionKind::Critical:
    return {0.0, critical_theta_max(d)};
  case RegionKind::Lhp:
    return {kPi / 2, kPi};
  case RegionKind::Rhp:
    return {0.0, kPi / 2};
  }
  return {0.0, 0.0};
}

} // namespace

RegionBoundary boundary_polyline(int d, RegionKind kind, int n_samples) {
  require_model_degree(d);
  if (n_samples < 16) {
    throw PreconditionError("boundary sampling needs at least 16 samples");
  }
  RegionBoundary out;
  out.kind = kind;
  out.d = d;
  const auto [lo, hi] = param_range(d, kind);
  out.samples.reserve(static_cast<std::size_t>(n_samples));
  for (int k = 0; k < n_samples; ++k) {
    const double param = k + 1 == n_samples ? hi : lo + (hi - lo) * k / (n_samples - 1);
    out.samples.push_back({param, boundary_point(d, kind, param)});
  }
  return out;
}

std::vector<ComplexPoint> RegionBoundary::reflected_curve() const {
  std::vector<ComplexPoint> out;
  out.reserve(2 * samples.size());
  for (const auto& s : samples) {
    out.push_back(s.point);
  }
  for (auto it = samples.rbegin() + 1; it != samples.rend(); ++it) {
    out.push_back(std::conj(it->point));
  }
  return out;
}

std::vector<ComplexPoint> RegionBoundary::outline() const {
  std::vector<ComplexPoint> upper;
  switch (kind) {
  case RegionKind::Shearer:
  case RegionKind::Cardioid:
    return reflected_curve();
  case RegionKind::Critical: {
    for (const auto& s : samples) {
      upper.push_back(s.point);
    }
    const double lam_star = shearer_radius(d);
    for (auto it = samples.rbegin(); it != samples.rend(); ++it) {
      upper.push_back(std::polar(lam_star, kPi - it->param));
    }
    break;
  }
  case RegionKind::Lhp:
    upper.push_back(0.0);
    for (const auto& s : samples) {
      upper.push_back(s.point);
    }
    break;
  case RegionKind::Rhp:
    upper.push_back(0.0);
    for (auto it = samples.rbegin(); it != samples.rend(); ++it) {
      upper.push_back(it->point);
    }
    upper.push_back(0.0);
    break;
  }
  std::vector<ComplexPoint> out = upper;
  for (const auto& p : upper) {
    out.push_back(std::conj(p));
  }
  return out;
}

} // namespace indzero
