#pragma once

// Iterated-curve certification of zero-freeness, grid scans, orbits of the tree
// recurrence, and numeric checks of two explicit curve constructions.

#include "indzero/complexgeom.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace indzero {

struct CurveOptions {
  double dt = 1e-3;
  double t_max = 200.0;
  double tol_im = 1e-9;
  double tol_arg = 1e-9;
  /// Stop sampling once the outcome is decided (negative imaginary part seen or
  /// the window [tau*, tau*+1] is complete).
  bool stop_early = true;
};

inline constexpr double kMaxCurveTime = 1e4;
/// Neighbouring samples whose arg(1 + h) differ by more than this get a midpoint.
inline constexpr double kRefineArgJump = 0.05;
/// Midpoints are not inserted below dt / kMaxRefineFactor spacing.
inline constexpr double kMaxRefineFactor = 1024.0;

/// h(t) = t lambda on [0, 1] and h(t) = lambda / (1 + h(t - 1))^d beyond.
struct CurveSamples {
  double dt = 0.0;
  std::vector<double> t_values;
  std::vector<ComplexPoint> points;
};

/// Samples the curve. Needs Im lambda > 0, dt in (0, 0.1], t_max in [1, 1e4].
/// Throws DomainError when a sample comes within 1e-12 of -1 or overflows.
CurveSamples h_curve(int d, ComplexPoint lambda, const CurveOptions& opts = {});
CurveSamples h_curve(int d, ComplexPoint lambda, double dt, double t_max);

/// Largest sampled t' such that the unwrapped arg(1 + h) is non-decreasing (up to
/// tol_arg per step) on [0, t']. Returns the last sampled t when no decrease occurs.
double tau_star(const CurveSamples& samples, double tol_arg = 1e-9);

enum class CertStatus { Certified, Refuted, Inconclusive };

std::string_view to_string(CertStatus status);

/// Outcome of a curve run. Refuted means some sample has Im h < -tol_im, so the
/// criterion's hypothesis fails; it does not assert that a zero exists.
struct Certificate {
  int d = 2;
  ComplexPoint lambda;
  CertStatus status = CertStatus::Inconclusive;
  std::optional<double> tau_star;
  std::optional<long long> ceil_tau_star;
  double min_im = 0.0;
  double tol_im = 1e-9;
  double tol_arg = 1e-9;
  double dt = 1e-3;
  double t_max = 200.0;
  /// arg(1 + h(tau*)) and the threshold arg(lambda)/d it was compared with.
  std::optional<double> arg_at_tau;
  double arg_threshold = 0.0;
  /// True when the run used conj(lambda).
  bool conjugated = false;
  std::string diagnostic;
  CurveSamples samples;
};

/// Runs the curve with the stopping window [tau*, tau* + 1]. Im lambda < 0 is
/// handled through conj(lambda); real lambda gives Inconclusive; lambda = 0 throws.
Certificate certify_simons(int d, ComplexPoint lambda, const CurveOptions& opts = {});

struct ScanWindow {
  double re0 = 0.0;
  double re1 = 0.0;
  double im0 = 0.0;
  double im1 = 0.0;
};

struct ScanCell {
  ComplexPoint lambda;
  CertStatus status = CertStatus::Inconclusive;
  std::optional<long long> ceil_tau_star;
};

inline constexpr int kMaxScanResolution = 4096;

/// res x res cells, row-major with the imaginary part outer and the real part
/// inner, each certified at its centre. Curve samples are not retained.
std::vector<ScanCell> scan_grid(int d, const ScanWindow& window, int res, const CurveOptions& opts = {},
                                unsigned threads = 1);

enum class OrbitStop { MaxIterations, Diverged, NearMinusOne };

std::string_view to_string(OrbitStop stop);

struct OrbitResult {
  /// x_0 = 0, x_{k+1} = lambda / (1 + x_k)^d (or w_k = log(1 + x_k) for orbit_w).
  std::vector<ComplexPoint> points;
  /// min_k |1 + x_k|.
  double min_dist_to_minus1 = 0.0;
  /// Some iterate has Re(1 + x_k) < 0.
  bool crossed = false;
  std::optional<std::size_t> first_crossing;
  OrbitStop stop = OrbitStop::MaxIterations;
  bool w_coordinates = false;
};

inline constexpr std::size_t kMaxOrbitLength = 1000000;
inline constexpr double kOrbitDivergence = 1e9;
inline constexpr double kOrbitNearMinusOne = 1e-12;

OrbitResult orbit(int d, ComplexPoint lambda, std::size_t n_max);
/// Iterates w -> log(1 + lambda e^{-d w}) from w = 0. Reaching 1 + lambda e^{-dw}
/// within 1e-12 of 0 ends the run with stop == NearMinusOne.
OrbitResult orbit_w(int d, ComplexPoint lambda, std::size_t n_max);

struct CheckReport {
  bool ok = true;
  /// Name of the first failing condition, empty when ok.
  std::string failed;
  /// 1-based index of the first failing closed-form condition, 0 otherwise.
  int failed_index = 0;
  std::vector<std::string> notes;
};

/// lambda = lambda0 e^{i theta} near the positive real threshold.
struct SokalParams {
  int d = 3;
  double epsilon = 0.1;
  double delta = 0.01;
  double theta = 0.0;

  /// (1 - eps)(d - eps)^d / (d - 1)^(d+1)
  double lambda0() const;
  /// (1 - eps)/(d - 1), a fixed point of z -> lambda0 / (1 + z)^d.
  double z0() const;
  ComplexPoint z_plus() const;
  ComplexPoint z_minus() const;
  ComplexPoint lambda() const;
};

inline constexpr int kCheckGrid = 1000;

/// Checks, in order: delta < 1, theta < pi/10, |arg z+-| <= pi/10,
/// arg z+ > arg f(z-) > 0, arg z- < arg f(z+) < 0, |f(z-)| < |z+| and
/// |f(z+)| < |z-|, arg(f(z+)/(1+f(z+))) + arg(z+/(1+z+)) >= 0, monotonicity of
/// arg(1 + f(t z+-)) on a grid, and -1-covering of f(h(t)) by the two-segment
/// curve h through z-, 0, z+.
CheckReport sokal_curve_check(const SokalParams& params);

/// Two-segment curve h(t) = -t r2 e^{-i beta} on [-1, 0], t tan(psi) i on [0, 1].
struct RhpCurveParams {
  int d = 2;
  ComplexPoint lambda;
  double beta = 0.0;
  double psi = 0.0;
  double r2 = 0.0;

  ComplexPoint a() const { return std::polar(r2, -beta); }
  ComplexPoint b() const;
  bool in_l1(ComplexPoint z, double tol = kAlgTol) const;
  bool in_l2(ComplexPoint z, double tol = kAlgTol) const;
};

/// The parameter choice (beta, psi, r2) that works for every r up to rhp_bound.
RhpCurveParams rhp_params_for(int d, ComplexPoint lambda);

/// The five closed-form conditions (with 1e-12 slack for rounding), then
/// f(h(t)) in L1 u L2 on a grid over [-1, 1].
CheckReport rhp_curve_check(const RhpCurveParams& params);

} // namespace indzero
