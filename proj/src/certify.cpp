#include "curve_engine.hpp"
#include "parallel.hpp"

#include "indzero/errors.hpp"
#include "indzero/regions.hpp"

#include <cmath>
#include <sstream>

namespace indzero {

std::string_view to_string(CertStatus status) {
  switch (status) {
  case CertStatus::Certified:
    return "Certified";
  case CertStatus::Refuted:
    return "Refuted";
  case CertStatus::Inconclusive:
    return "Inconclusive";
  }
  return "Inconclusive";
}

namespace {

std::string describe(const char* what, double value) {
  std::ostringstream os;
  os.precision(17);
  os << what << value;
  return os.str();
}

} // namespace

Certificate certify_simons(int d, ComplexPoint lambda, const CurveOptions& opts) {
  require_model_degree(d);
  require_finite(lambda, "lambda");
  detail::validate_curve_options(opts);
  if (lambda == ComplexPoint{}) {
    throw PreconditionError("certify needs lambda != 0");
  }
  Certificate cert;
  cert.d = d;
  cert.lambda = lambda;
  cert.tol_im = opts.tol_im;
  cert.tol_arg = opts.tol_arg;
  cert.dt = opts.dt;
  cert.t_max = opts.t_max;

  if (lambda.imag() == 0.0) {
    cert.status = CertStatus::Inconclusive;
    cert.diagnostic = "real lambda: the curve criterion needs Im lambda > 0";
    return cert;
  }
  ComplexPoint run_lambda = lambda;
  if (lambda.imag() < 0.0) {
    run_lambda = std::conj(lambda);
    cert.conjugated = true;
  }
  cert.arg_threshold = principal_arg(run_lambda) / d;

  detail::CurveRun run;
  try {
    run = detail::run_curve(d, run_lambda, opts);
  } catch (const DomainError& e) {
    cert.status = CertStatus::Inconclusive;
    cert.diagnostic = std::string("degenerate curve: ") + e.what();
    return cert;
  }
  const auto& v = run.verdict;
  cert.min_im = v.min_im;
  if (v.tau) {
    cert.tau_star = *v.tau;
    cert.ceil_tau_star = static_cast<long long>(std::ceil(*v.tau));
    cert.arg_at_tau = v.arg_at_tau;
  }
  cert.samples = std::move(run.samples);

  if (v.refuted_at) {
    cert.status = CertStatus::Refuted;
    cert.diagnostic = describe("Im h(t) < -tol_im at t = ", *v.refuted_at);
  } else if (!v.window_complete) {
    cert.status = CertStatus::Inconclusive;
    cert.diagnostic = v.tau ? "t_max reached inside the window [tau*, tau*+1]"
                            : "t_max reached while arg(1 + h) was still non-decreasing";
  } else if (!(v.arg_at_tau <= cert.arg_threshold + opts.tol_arg)) {
    cert.status = CertStatus::Inconclusive;
    cert.diagnostic = describe("arg(1 + h(tau*)) exceeds arg(lambda)/d: ", v.arg_at_tau);
  } else if (!v.window_monotone) {
    cert.status = CertStatus::Inconclusive;
    cert.diagnostic = describe("arg(1 + h) increases inside [tau*, tau*+1] at t = ", *v.window_violation_at);
  } else {
    cert.status = CertStatus::Certified;
  }
  return cert;
}

std::vector<ScanCell> scan_grid(int d, const ScanWindow& window, int res, const CurveOptions& opts,
                                unsigned threads) {
  require_model_degree(d);
  if (res < 1 || res > kMaxScanResolution) {
    throw PreconditionError("scan resolution must lie in [1, 4096]");
  }
  for (double x : {window.re0, window.re1, window.im0, window.im1}) {
    if (!std::isfinite(x)) {
      throw PreconditionError("scan window must be finite");
    }
  }
  if (!(window.re0 < window.re1 && window.im0 < window.im1)) {
    throw PreconditionError("scan window needs re0 < re1 and im0 < im1");
  }
  detail::validate_curve_options(opts);
  CurveOptions run_opts = opts;
  run_opts.stop_early = true;

  const auto n = static_cast<std::size_t>(res);
  std::vector<ScanCell> cells(n * n);
  const double dre = (window.re1 - window.re0) / res;
  const double dim = (window.im1 - window.im0) / res;
  detail::parallel_for(cells.size(), threads, [&](std::size_t k) {
    const std::size_t row = k / n;
    const std::size_t col = k % n;
    ScanCell& cell = cells[k];
    cell.lambda = {window.re0 + (static_cast<double>(col) + 0.5) * dre,
                   window.im0 + (static_cast<double>(row) + 0.5) * dim};
    if (cell.lambda == ComplexPoint{}) {
      cell.status = CertStatus::Inconclusive;
      return;
    }
    const Certificate cert = certify_simons(d, cell.lambda, run_opts);
    cell.status = cert.status;
    cell.ceil_tau_star = cert.ceil_tau_star;
  });
  return cells;
}

} // namespace indzero
