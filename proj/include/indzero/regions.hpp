#pragma once

// Explicit zero-free regions for graphs of maximum degree d + 1: the Shearer disk,
// the cardioid U_d, the critical-vicinity region near -lambda*, the near-imaginary
// left half-plane region, and the right half-plane region.

#include "indzero/complexgeom.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace indzero {

/// Throws PreconditionError unless d >= 2.
void require_model_degree(int d);

/// lambda*(d) = d^d / (d+1)^(d+1).
double shearer_radius(int d);
/// lambda_c(d) = d^d / (d-1)^(d+1).
double uniqueness_threshold(int d);

/// kappa(alpha) = -alpha d^d / (d + alpha)^(d+1) for |alpha| = 1.
ComplexPoint cardioid_point(int d, ComplexPoint alpha);

/// Even-odd test against an adaptively refined polygon of the cardioid boundary.
bool cardioid_contains(int d, ComplexPoint lambda);

/// Cardioid boundary polygon (closed: first == last), chord error below tol.
std::vector<ComplexPoint> cardioid_polygon(int d, double chord_tol = 1e-6);

// Critical vicinity: lambda = -lambda* exp(r - i theta).

/// arccos(1 / (d + 0.5)), the largest admissible theta.
double critical_theta_max(int d);
/// min{ d log(1 + 1/d), 2d(d+1)s / (d^2 + 4(d+1)s) } with s = sin^2(theta/2).
double critical_region_bound(int d, double theta);
bool critical_region_contains(int d, ComplexPoint lambda);

// Near-imaginary region in the left half-plane: lambda = r e^{i phi}, phi in [pi/2, pi).

double lhp_psi_star(int d, double phi);
/// Strict bound: membership requires r < lhp_bound(d, phi).
double lhp_bound(int d, double phi);
bool lhp_contains(int d, ComplexPoint lambda);

// Right half-plane: lambda = r e^{i theta}, theta in (0, pi/2].

/// Unique root of tan(2x/d) = T / (1 - T / tan x), T = tan((pi/2 - x)/d),
/// on (pi/(2(d+1)), pi/2).
double theta_d(int d);
/// LHS - RHS of the defining equation of theta_d.
double theta_d_residual(int d, double x);

/// Unique root of tan((theta+x)/d)/sin(theta) = T/(sin x - cos x * T),
/// T = tan((pi/2 - theta)/d), on ((pi/2 - theta)/d, theta]; 0 at theta = pi/2.
double beta_star(int d, double theta);
double beta_star_residual(int d, double theta, double x);

/// Non-strict bound: membership requires r <= rhp_bound(d, theta).
double rhp_bound(int d, double theta);
bool rhp_contains(int d, ComplexPoint lambda);

enum class RegionKind { Shearer, Cardioid, Critical, Lhp, Rhp };

std::string_view to_string(RegionKind kind);
std::optional<RegionKind> parse_region_kind(std::string_view name);
inline constexpr RegionKind kAllRegionKinds[] = {RegionKind::Shearer, RegionKind::Cardioid, RegionKind::Critical,
                                                 RegionKind::Lhp, RegionKind::Rhp};

struct RegionVerdict {
  bool shearer = false;
  bool critical = false;
  bool lhp = false;
  bool rhp = false;
  /// Largest margin over the regions whose angular range contains lambda: relative
  /// slack in modulus for shearer/lhp/rhp, slack in r = log(|lambda|/lambda*) for
  /// the critical region. Positive inside.
  double margin = 0.0;

  bool any() const noexcept { return shearer || critical || lhp || rhp; }
  friend bool operator==(const RegionVerdict&, const RegionVerdict&) = default;
};

RegionVerdict region_membership(int d, ComplexPoint lambda);

struct BoundarySample {
  double param = 0.0;
  ComplexPoint point;
};

/// Upper-half-plane sweep of a region boundary. Parameters:
///   shearer   phi in [0, pi],            lambda* e^{i phi}
///   cardioid  s in [0, pi],              kappa(e^{-i s})   (-lambda* to lambda_c)
///   critical  theta in [0, theta_max],   -lambda* exp(r_max(theta) - i theta)
///   lhp       phi in [pi/2, pi],         lhp_bound(phi) e^{i phi}  (0 at phi = pi)
///   rhp       theta in [0, pi/2],        rhp_bound(theta) e^{i theta} (2/d at 0)
struct RegionBoundary {
  RegionKind kind = RegionKind::Shearer;
  int d = 2;
  std::vector<BoundarySample> samples;

  /// Sweep followed by its reflected conjugate; closed for shearer and cardioid.
  std::vector<ComplexPoint> reflected_curve() const;
  /// Closed outline of the region (for drawing).
  std::vector<ComplexPoint> outline() const;
};

RegionBoundary boundary_polyline(int d, RegionKind kind, int n_samples);

} // namespace indzero
