#pragma once

// Branch-cut-consistent complex primitives and the -1-covering calculus.
//
// Convention: for z = r e^{i theta} with theta in (-pi, pi], log z = log r + i theta
// and z^delta = r^delta e^{i delta theta}. 0^0 = 1; every other use of 0 is a
// domain error.

#include <complex>
#include <numbers>

namespace indzero {

using ComplexPoint = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;

/// Default tolerance for geometric predicates (arguments, moduli).
inline constexpr double kGeomTol = 1e-9;
/// Default tolerance for algebraic identities.
inline constexpr double kAlgTol = 1e-12;

/// Throws PreconditionError unless both components are finite.
void require_finite(ComplexPoint z, const char* what);

/// Principal argument in (-pi, pi]. Maps the -0.0 imaginary part to +pi on the
/// negative real axis, unlike std::arg.
double principal_arg(ComplexPoint z);

ComplexPoint principal_log(ComplexPoint z);

/// z^delta on the principal branch; delta >= 0.
ComplexPoint cpow(ComplexPoint z, double delta);

/// arg(1 + z), in (-pi, pi].
double arg1p(ComplexPoint z);

/// Signed angle from (1 + reference) to (1 + z), in (-pi, pi]. Measured as the
/// argument of the quotient, so it stays continuous when both points sit near the
/// branch cut.
double arg1p_relative(ComplexPoint z, ComplexPoint reference);

/// Angle of z measured on the branch (reference - pi, reference + pi].
double arg_unwrapped_near(ComplexPoint z, double reference);

/// Accumulates a continuous argument along a sampled path.
class ArgUnwrapper {
public:
  explicit ArgUnwrapper(ComplexPoint first);

  /// Feeds the next path point; returns its unwrapped argument.
  double push(ComplexPoint next);
  double value() const noexcept { return value_; }

private:
  ComplexPoint last_;
  double value_;
};

/// True iff z is -1-covered by `cover`: same argument viewed from -1 and at
/// least as far from -1.
bool covers(ComplexPoint cover, ComplexPoint z, double tol = kGeomTol);

/// Finds the point q on the segment [a, b] that lies on the ray from -1 through z.
/// Returns false when the ray misses the segment.
bool ray_from_minus1_hits_segment(ComplexPoint z, ComplexPoint a, ComplexPoint b,
                                  ComplexPoint& hit, double tol = kGeomTol);

/// True iff z is -1-covered by some point of the segment [a, b].
bool covered_by_segment(ComplexPoint z, ComplexPoint a, ComplexPoint b, double tol = kGeomTol);

struct CoverWitness {
  double t = 1.0;
  double beta = 0.0;
};

/// The weighted geometric mean, shrunk by t, lands on the segment [z2, z1]:
/// t * z1^alpha * z2^(1-alpha) = beta * z1 + (1 - beta) * z2 with t, beta in [0,1].
CoverWitness geo_mean_dominates(ComplexPoint z1, ComplexPoint z2, double alpha);

/// The univariate tree map z -> lambda / (1 + z)^d.
ComplexPoint tree_map(ComplexPoint z, ComplexPoint lambda, int d);

} // namespace indzero
