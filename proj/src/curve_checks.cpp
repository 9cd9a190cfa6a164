#include "indzero/certify.hpp"
#include "indzero/errors.hpp"
#include "indzero/regions.hpp"

#include <cmath>
#include <sstream>

namespace indzero {

namespace {

constexpr double kCheckSlack = 1e-12;

void fail(CheckReport& report, int index, std::string name) {
  if (report.ok) {
    report.ok = false;
    report.failed = std::move(name);
    report.failed_index = index;
  }
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

} // namespace

double SokalParams::lambda0() const {
  const double x = d;
  return (1.0 - epsilon) * std::pow(x - epsilon, x) / std::pow(x - 1.0, x + 1.0);
}

double SokalParams::z0() const { return (1.0 - epsilon) / (d - 1.0); }

ComplexPoint SokalParams::z_plus() const { return ComplexPoint{1.0 - epsilon, delta} / (d - 1.0); }

ComplexPoint SokalParams::z_minus() const { return ComplexPoint{1.0 - epsilon, -delta} / (d - 1.0); }

ComplexPoint SokalParams::lambda() const { return std::polar(lambda0(), theta); }

CheckReport sokal_curve_check(const SokalParams& p) {
  require_model_degree(p.d);
  if (!(p.epsilon > 0.0 && p.epsilon < 1.0) || !(p.delta > 0.0) || !(p.theta >= 0.0) ||
      !std::isfinite(p.delta) || !std::isfinite(p.theta)) {
    throw PreconditionError("need epsilon in (0,1), delta > 0, theta >= 0");
  }
  CheckReport report;
  const ComplexPoint lambda = p.lambda();
  const ComplexPoint zp = p.z_plus();
  const ComplexPoint zm = p.z_minus();
  auto f = [&](ComplexPoint z) { return tree_map(z, lambda, p.d); };
  const ComplexPoint fzp = f(zp);
  const ComplexPoint fzm = f(zm);
  const double arg_zp = principal_arg(zp);
  const double arg_zm = principal_arg(zm);
  const double arg_fzp = principal_arg(fzp);
  const double arg_fzm = principal_arg(fzm);
  report.notes.push_back("arg z+ = " + fmt(arg_zp) + ", arg f(z-) = " + fmt(arg_fzm));
  report.notes.push_back("arg z- = " + fmt(arg_zm) + ", arg f(z+) = " + fmt(arg_fzp));

  if (!(p.delta < 1.0)) {
    fail(report, 1, "delta < 1");
  }
  if (!(p.theta < kPi / 10)) {
    fail(report, 2, "theta < pi/10");
  }
  if (!(std::abs(arg_zp) <= kPi / 10 && std::abs(arg_zm) <= kPi / 10)) {
    fail(report, 3, "|arg z+-| <= pi/10");
  }
  if (!(arg_zp > arg_fzm && arg_fzm > 0.0)) {
    fail(report, 4, "arg z+ > arg f(z-) > 0");
  }
  if (!(arg_zm < arg_fzp && arg_fzp < 0.0)) {
    fail(report, 5, "arg z- < arg f(z+) < 0");
  }
  if (!(std::abs(fzm) < std::abs(zp) && std::abs(fzp) < std::abs(zm))) {
    fail(report, 6, "|f(z-)| < |z+| and |f(z+)| < |z-|");
  }
  const double turn_sum = principal_arg(fzp / (1.0 + fzp)) + principal_arg(zp / (1.0 + zp));
  report.notes.push_back("arg(f(z+)/(1+f(z+))) + arg(z+/(1+z+)) = " + fmt(turn_sum));
  if (!(turn_sum >= 0.0)) {
    fail(report, 7, "arg(f(z+)/(1+f(z+))) + arg(z+/(1+z+)) >= 0");
  }
  if (!report.ok) {
    return report;
  }

  double prev_plus = arg1p(f(0.0));
  double prev_minus = prev_plus;
  for (int k = 1; k <= kCheckGrid; ++k) {
    const double t = static_cast<double>(k) / kCheckGrid;
    const double a_plus = arg1p(f(t * zp));
    const double a_minus = arg1p(f(t * zm));
    if (a_plus > prev_plus + kCheckSlack) {
      fail(report, 0, "arg(1 + f(t z+)) decreasing in t (fails at t = " + fmt(t) + ")");
    }
    if (a_minus < prev_minus - kCheckSlack) {
      fail(report, 0, "arg(1 + f(t z-)) increasing in t (fails at t = " + fmt(t) + ")");
    }
    prev_plus = a_plus;
    prev_minus = a_minus;
  }
  for (int k = 0; k <= kCheckGrid; ++k) {
    const double t = -1.0 + 2.0 * k / kCheckGrid;
    const ComplexPoint h = t >= 0.0 ? t * zp : -t * zm;
    const ComplexPoint image = f(h);
    if (!covered_by_segment(image, 0.0, zp) && !covered_by_segment(image, 0.0, zm)) {
      fail(report, 0, "f(h(t)) is -1-covered by h (fails at t = " + fmt(t) + ")");
    }
  }
  return report;
}

ComplexPoint RhpCurveParams::b() const { return {0.0, std::tan(psi)}; }

bool RhpCurveParams::in_l1(ComplexPoint z, double tol) const {
  return z.real() >= -tol && z.imag() >= -tol && z.imag() <= std::tan(psi) + tol;
}

bool RhpCurveParams::in_l2(ComplexPoint z, double tol) const {
  const double a = principal_arg(z);
  return a >= -beta - tol && a <= tol && z.imag() >= -r2 * std::sin(beta) - tol;
}

RhpCurveParams rhp_params_for(int d, ComplexPoint lambda) {
  require_model_degree(d);
  require_finite(lambda, "lambda");
  const double theta = principal_arg(lambda);
  if (!(lambda != ComplexPoint{} && theta > 0.0 && theta <= kPi / 2)) {
    throw PreconditionError("need lambda = r e^{i theta} with r > 0 and theta in (0, pi/2]");
  }
  const double n = d;
  const double t = std::tan((kPi / 2 - theta) / n);
  RhpCurveParams p;
  p.d = d;
  p.lambda = lambda;
  if (theta <= theta_d(d)) {
    p.beta = theta;
    p.psi = 2.0 * theta / n;
    p.r2 = theta <= kPi / (2.0 * (n + 1.0)) ? std::abs(lambda) : t / (std::sin(theta) - std::cos(theta) * t);
  } else {
    p.beta = beta_star(d, theta);
    p.psi = (theta + p.beta) / n;
    p.r2 = theta >= kPi / 2 ? std::tan(kPi / (2.0 * n)) : t / (std::sin(p.beta) - std::cos(p.beta) * t);
  }
  return p;
}

CheckReport rhp_curve_check(const RhpCurveParams& p) {
  require_model_degree(p.d);
  require_finite(p.lambda, "lambda");
  const double theta = principal_arg(p.lambda);
  const double r = std::abs(p.lambda);
  if (!(r > 0.0 && theta > 0.0 && theta <= kPi / 2)) {
    throw PreconditionError("need lambda = r e^{i theta} with r > 0 and theta in (0, pi/2]");
  }
  if (!(p.beta >= 0.0 && p.beta < kPi / 2 && p.psi >= 0.0 && p.psi < kPi / 2 && p.r2 >= 0.0) ||
      !std::isfinite(p.r2)) {
    throw PreconditionError("need beta, psi in [0, pi/2) and finite r2 >= 0");
  }
  CheckReport report;
  const double n = p.d;
  if (!(theta - n * p.psi >= -p.beta - kCheckSlack)) {
    fail(report, 1, "theta - d psi >= -beta");
  }
  if (!(p.r2 >= r * (1.0 - kCheckSlack))) {
    fail(report, 2, "r2 >= r");
  }
  if (!(r * std::sin(theta) <= std::tan(p.psi) + kCheckSlack)) {
    fail(report, 3, "r sin(theta) <= tan(psi)");
  }
  const double turn = theta + n * principal_arg(1.0 + std::polar(p.r2, p.beta));
  report.notes.push_back("theta + d arg(1 + r2 e^{i beta}) = " + fmt(turn));
  if (!(turn <= kPi / 2 + kCheckSlack)) {
    fail(report, 4, "theta + d arg(1 + r2 e^{i beta}) <= pi/2");
  }
  if (!(theta >= p.beta - kCheckSlack)) {
    fail(report, 5, "theta >= beta");
  }
  if (!report.ok) {
    return report;
  }
  const ComplexPoint a = p.a();
  const ComplexPoint b = p.b();
  for (int k = 0; k <= kCheckGrid; ++k) {
    const double t = -1.0 + 2.0 * k / kCheckGrid;
    const ComplexPoint h = t < 0.0 ? -t * a : t * b;
    const ComplexPoint image = tree_map(h, p.lambda, p.d);
    if (!p.in_l1(image) && !p.in_l2(image)) {
      fail(report, 0, "f(h(t)) in L1 u L2 (fails at t = " + fmt(t) + ")");
      break;
    }
  }
  return report;
}

} // namespace indzero
