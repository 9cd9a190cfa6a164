#include "curve_engine.hpp"

#include "indzero/errors.hpp"
#include "indzero/regions.hpp"

#include <cmath>
#include <string>

namespace indzero {

namespace detail {

namespace {

constexpr double kDegenerateDistance = 1e-12;
constexpr double kGridSlack = 1e-9;

ComplexPoint curve_step(ComplexPoint z, ComplexPoint lambda, int d) {
  const ComplexPoint w = 1.0 + z;
  if (std::abs(w) < kDegenerateDistance) {
    throw DomainError("curve sample within 1e-12 of -1");
  }
  const ComplexPoint next = tree_map(z, lambda, d);
  if (!std::isfinite(next.real()) || !std::isfinite(next.imag())) {
    throw DomainError("curve sample overflowed");
  }
  return next;
}

void check_sample(ComplexPoint z) {
  if (std::abs(1.0 + z) < kDegenerateDistance) {
    throw DomainError("curve sample within 1e-12 of -1");
  }
}

/// Stopping-rule bookkeeping fed with samples in increasing t.
class Analyzer {
public:
  Analyzer(double tol_im, double tol_arg) : tol_im_(tol_im), tol_arg_(tol_arg) {}

  void reset() {
    v_ = CurveVerdict{};
    started_ = false;
    row_open_ = false;
  }

  const CurveVerdict& verdict() const { return v_; }

  /// Returns true once the outcome is decided.
  bool push(double t, ComplexPoint h) {
    if (!started_) {
      started_ = true;
      v_.min_im = h.imag();
      arg_ = arg1p(h);
    } else {
      const double next = arg_ + arg1p_relative(h, prev_);
      v_.min_im = std::min(v_.min_im, h.imag());
      if (!v_.tau) {
        if (next < arg_ - tol_arg_) {
          v_.tau = prev_t_;
          v_.arg_at_tau = arg_;
        }
      } else if (next > arg_ + tol_arg_ && v_.window_monotone) {
        v_.window_monotone = false;
        v_.window_violation_at = t;
      }
      arg_ = next;
    }
    prev_ = h;
    prev_t_ = t;
    if (h.imag() < -tol_im_) {
      v_.refuted_at = t;
      return true;
    }
    if (!v_.tau && flat_row_closes(t)) {
      v_.window_complete = true;
      return true;
    }
    if (v_.tau && t >= *v_.tau + 1.0 - kGridSlack) {
      v_.window_complete = true;
      return true;
    }
    return false;
  }

private:
  /// A whole unit row [m-1, m] with arg(1 + h) constant within tol_arg is a
  /// numerically stationary curve: it serves as the window after tau = m - 1.
  bool flat_row_closes(double t) {
    if (row_open_) {
      row_min_ = std::min(row_min_, arg_);
      row_max_ = std::max(row_max_, arg_);
    }
    const double m = std::round(t);
    if (m < 1.0 || std::abs(t - m) > kGridSlack) {
      return false;
    }
    if (row_open_ && row_max_ - row_min_ <= tol_arg_) {
      v_.tau = m - 1.0;
      v_.arg_at_tau = row_start_arg_;
      return true;
    }
    row_open_ = true;
    row_start_arg_ = row_min_ = row_max_ = arg_;
    return false;
  }

  double tol_im_;
  double tol_arg_;
  CurveVerdict v_;
  bool started_ = false;
  bool row_open_ = false;
  double row_start_arg_ = 0.0;
  double row_min_ = 0.0;
  double row_max_ = 0.0;
  double arg_ = 0.0;
  ComplexPoint prev_;
  double prev_t_ = 0.0;
};

} // namespace

void validate_curve_options(const CurveOptions& opts) {
  if (!(opts.dt > 0.0 && opts.dt <= 0.1)) {
    throw PreconditionError("dt must lie in (0, 0.1]");
  }
  if (!(opts.t_max >= 1.0 && opts.t_max <= kMaxCurveTime)) {
    throw PreconditionError("t_max must lie in [1, 1e4]");
  }
  if (!(opts.tol_im >= 0.0 && opts.tol_arg >= 0.0) || !std::isfinite(opts.tol_im) ||
      !std::isfinite(opts.tol_arg)) {
    throw PreconditionError("tolerances must be finite and non-negative");
  }
}

CurveRun run_curve(int d, ComplexPoint lambda, const CurveOptions& opts) {
  require_model_degree(d);
  require_finite(lambda, "lambda");
  validate_curve_options(opts);
  if (!(lambda.imag() > 0.0)) {
    throw PreconditionError("the curve needs Im lambda > 0");
  }

  const auto n_base = static_cast<std::size_t>(std::ceil(1.0 / opts.dt - kGridSlack));
  const double min_gap = opts.dt / kMaxRefineFactor;
  std::vector<double> s(n_base + 1);
  for (std::size_t i = 0; i <= n_base; ++i) {
    s[i] = static_cast<double>(i) / static_cast<double>(n_base);
  }
  s.back() = 1.0;

  std::vector<std::vector<ComplexPoint>> rows;
  Analyzer analyzer(opts.tol_im, opts.tol_arg);

  // Inserts midpoints into row j (and every earlier row) where arg(1 + h) jumps.
  auto refine_row = [&](std::size_t j) {
    bool inserted = false;
    auto& row = rows[j];
    for (std::size_t i = 0; i + 1 < row.size();) {
      const double jump = std::abs(arg1p_relative(row[i + 1], row[i]));
      const double mid = 0.5 * (s[i] + s[i + 1]);
      if (jump <= kRefineArgJump || s[i + 1] - s[i] <= min_gap || mid <= s[i] || mid >= s[i + 1]) {
        ++i;
        continue;
      }
      s.insert(s.begin() + static_cast<std::ptrdiff_t>(i + 1), mid);
      ComplexPoint z = mid * lambda;
      for (std::size_t k = 0; k <= j; ++k) {
        if (k > 0) {
          z = curve_step(z, lambda, d);
        }
        check_sample(z);
        rows[k].insert(rows[k].begin() + static_cast<std::ptrdiff_t>(i + 1), z);
      }
      inserted = true;
    }
    return inserted;
  };

  // Feeds row j to the analyzer; returns true when decided.
  auto feed_row = [&](std::size_t j) {
    const auto& row = rows[j];
    for (std::size_t i = (j == 0 ? 0 : 1); i < row.size(); ++i) {
      const double t = static_cast<double>(j) + s[i];
      if (t > opts.t_max + kGridSlack) {
        return false;
      }
      if (analyzer.push(t, row[i]) && opts.stop_early) {
        return true;
      }
    }
    return false;
  };

  std::vector<ComplexPoint> first(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    first[i] = s[i] * lambda;
    check_sample(first[i]);
  }
  first.back() = lambda;
  rows.push_back(std::move(first));
  refine_row(0);
  bool decided = feed_row(0);

  for (std::size_t j = 1; !decided && static_cast<double>(j) < opts.t_max; ++j) {
    std::vector<ComplexPoint> row(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      row[i] = curve_step(rows[j - 1][i], lambda, d);
    }
    rows.push_back(std::move(row));
    if (refine_row(j)) {
      analyzer.reset();
      decided = false;
      for (std::size_t k = 0; k <= j && !decided; ++k) {
        decided = feed_row(k);
      }
    } else {
      decided = feed_row(j);
    }
  }

  CurveRun run;
  run.verdict = analyzer.verdict();
  double t_end = opts.t_max;
  if (opts.stop_early && run.verdict.decided()) {
    t_end = run.verdict.refuted_at ? *run.verdict.refuted_at : *run.verdict.tau + 1.0;
  }
  run.samples.dt = opts.dt;
  for (std::size_t j = 0; j < rows.size(); ++j) {
    for (std::size_t i = (j == 0 ? 0 : 1); i < rows[j].size(); ++i) {
      const double t = static_cast<double>(j) + s[i];
      if (t > t_end + kGridSlack) {
        break;
      }
      run.samples.t_values.push_back(t);
      run.samples.points.push_back(rows[j][i]);
    }
  }
  return run;
}

} // namespace detail

CurveSamples h_curve(int d, ComplexPoint lambda, const CurveOptions& opts) {
  return detail::run_curve(d, lambda, opts).samples;
}

CurveSamples h_curve(int d, ComplexPoint lambda, double dt, double t_max) {
  CurveOptions opts;
  opts.dt = dt;
  opts.t_max = t_max;
  return h_curve(d, lambda, opts);
}

double tau_star(const CurveSamples& samples, double tol_arg) {
  if (samples.points.empty()) {
    throw PreconditionError("tau_star needs a non-empty sample set");
  }
  double arg = arg1p(samples.points.front());
  for (std::size_t k = 1; k < samples.points.size(); ++k) {
    const double next = arg + arg1p_relative(samples.points[k], samples.points[k - 1]);
    if (next < arg - tol_arg) {
      return samples.t_values[k - 1];
    }
    arg = next;
  }
  return samples.t_values.back();
}

} // namespace indzero
