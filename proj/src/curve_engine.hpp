#pragma once

#include "indzero/certify.hpp"

#include <optional>

namespace indzero::detail {

/// What the stopping rule saw along a sampled curve.
struct CurveVerdict {
  double min_im = 0.0;
  std::optional<double> refuted_at;
  std::optional<double> tau;
  double arg_at_tau = 0.0;
  bool window_complete = false;
  bool window_monotone = true;
  std::optional<double> window_violation_at;
  /// Decided before t_max: refuted or window complete.
  bool decided() const { return refuted_at.has_value() || window_complete; }
};

struct CurveRun {
  CurveSamples samples;
  CurveVerdict verdict;
};

CurveRun run_curve(int d, ComplexPoint lambda, const CurveOptions& opts);

void validate_curve_options(const CurveOptions& opts);

} // namespace indzero::detail
