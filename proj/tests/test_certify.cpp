#include "indzero/certify.hpp"
#include "indzero/errors.hpp"
#include "indzero/regions.hpp"

#include <doctest.h>

#include <cmath>
#include <optional>

using namespace indzero;

namespace {

/// Index of the sample at parameter t, or npos.
std::size_t find_t(const CurveSamples& s, double t) {
  for (std::size_t i = 0; i < s.t_values.size(); ++i) {
    if (std::abs(s.t_values[i] - t) < 1e-9) {
      return i;
    }
  }
  return static_cast<std::size_t>(-1);
}

} // namespace

TEST_SUITE("certify") {

TEST_CASE("curve definition") {
  const ComplexPoint lambda(0.0, 0.02);
  CurveOptions opts;
  opts.stop_early = false;
  opts.t_max = 6.0;
  const CurveSamples s = h_curve(9, lambda, opts);
  REQUIRE(s.t_values.size() == s.points.size());
  CHECK(s.t_values.front() == 0.0);
  for (std::size_t i = 0; i < s.points.size(); ++i) {
    CHECK(std::isfinite(s.points[i].real()));
    CHECK(s.points[i].imag() >= 0.0);
    if (i > 0) {
      CHECK(s.t_values[i] > s.t_values[i - 1]);
    }
  }
  const std::size_t one = find_t(s, 1.0);
  REQUIRE(one < s.points.size());
  CHECK(s.points[one] == lambda);
  const std::size_t two = find_t(s, 2.0);
  REQUIRE(two < s.points.size());
  CHECK(std::abs(s.points[two] - lambda / std::pow(1.0 + lambda, 9)) < 1e-12);
  for (std::size_t i = 0; i < s.points.size(); ++i) {
    const double t = s.t_values[i];
    if (t <= 1.0) {
      CHECK(std::abs(s.points[i] - t * lambda) < 1e-15);
    } else {
      const std::size_t back = find_t(s, t - 1.0);
      REQUIRE(back < s.points.size());
      CHECK(std::abs(s.points[i] - tree_map(s.points[back], lambda, 9)) <= 1e-12);
    }
  }
  CHECK_THROWS_AS(h_curve(9, ComplexPoint(0.1, 0.0), opts), PreconditionError);
  CHECK_THROWS_AS(h_curve(9, lambda, 0.2, 10.0), PreconditionError);
  CHECK_THROWS_AS(h_curve(9, lambda, 1e-3, 2e4), PreconditionError);
}

TEST_CASE("adaptive refinement keeps argument jumps small") {
  const ComplexPoint lambda(-0.036, 0.012);
  CurveOptions opts;
  opts.dt = 0.05;
  opts.stop_early = false;
  opts.t_max = 30.0;
  const CurveSamples s = h_curve(9, lambda, opts);
  for (std::size_t i = 1; i < s.points.size(); ++i) {
    const double gap = s.t_values[i] - s.t_values[i - 1];
    const double jump = std::abs(arg1p_relative(s.points[i], s.points[i - 1]));
    CHECK((jump <= kRefineArgJump || gap <= opts.dt / kMaxRefineFactor * 1.000001));
  }
}

TEST_CASE("tau_star") {
  const CurveSamples s = h_curve(9, ComplexPoint(0, 0.01), 1e-3, 50.0);
  const double tau = tau_star(s);
  CHECK(tau >= 1.0);
  // for purely imaginary lambda the derivative of arg(1 + h) just after t = 1 is
  // -d |lambda|^3 < 0, so the first decrease is seen one step after 1
  CHECK(tau == doctest::Approx(1.0));

  CurveSamples synth;
  synth.dt = 0.1;
  for (int k = 0; k <= 30; ++k) {
    const double t = 0.1 * k;
    const double a = t <= 1.7 ? 0.1 * t : 0.17 - 0.05 * (t - 1.7);
    synth.t_values.push_back(t);
    synth.points.push_back(std::polar(1.0, a) - 1.0);
  }
  CHECK(tau_star(synth) == doctest::Approx(1.7).epsilon(1e-12));
  CHECK(tau_star(synth, 0.01) == doctest::Approx(3.0));
}

TEST_CASE("certify examples") {
  const Certificate axis = certify_simons(9, ComplexPoint(0, 0.9 * std::tan(kPi / 18)));
  CHECK(axis.status == CertStatus::Certified);

  const Certificate small = certify_simons(9, ComplexPoint(0, 0.02));
  CHECK(small.status == CertStatus::Certified);
  REQUIRE(small.tau_star.has_value());
  CHECK(*small.tau_star >= 1.0);
  CHECK(*small.ceil_tau_star <= 2);
  CHECK(small.min_im >= -small.tol_im);
  CHECK(*small.arg_at_tau <= small.arg_threshold + small.tol_arg);

  const Certificate near_axis = certify_simons(9, ComplexPoint(-0.05, 0.001));
  CHECK(near_axis.status != CertStatus::Certified);

  const Certificate real = certify_simons(9, ComplexPoint(0.5, 0.0));
  CHECK(real.status == CertStatus::Inconclusive);
  CHECK_FALSE(real.diagnostic.empty());

  const Certificate lower = certify_simons(9, ComplexPoint(0, -0.02));
  CHECK(lower.status == CertStatus::Certified);
  CHECK(lower.conjugated);
  CHECK(lower.lambda == ComplexPoint(0, -0.02));

  CHECK_THROWS_AS(certify_simons(9, 0.0), PreconditionError);
}

TEST_CASE("certified runs satisfy the certificate invariants") {
  for (ComplexPoint lambda : {ComplexPoint(0.01, 0.01), ComplexPoint(-0.03, 0.01), ComplexPoint(0.1, 0.1)}) {
    const Certificate c = certify_simons(9, lambda);
    if (c.status != CertStatus::Certified) {
      continue;
    }
    REQUIRE(c.tau_star.has_value());
    const auto& s = c.samples;
    double arg = 0.0;
    double at_tau = 0.0;
    for (std::size_t i = 0; i < s.points.size(); ++i) {
      CHECK(s.points[i].imag() >= -c.tol_im);
      if (i > 0) {
        const double next = arg + arg1p_relative(s.points[i], s.points[i - 1]);
        if (s.t_values[i] > *c.tau_star + 1e-12) {
          CHECK(next <= arg + c.tol_arg);
        }
        arg = next;
      }
      if (std::abs(s.t_values[i] - *c.tau_star) < 1e-12) {
        at_tau = arg;
      }
    }
    CHECK(s.t_values.back() == doctest::Approx(*c.tau_star + 1.0));
    CHECK(at_tau <= principal_arg(lambda) / 9 + c.tol_arg);
  }
}

TEST_CASE("a curve that settles within tolerance closes on a flat row") {
  // f'(z*) is about -d lambda here, so successive rows shrink by ~0.05 and the
  // eventual turn of arg(1 + h) is far below double precision.
  const Certificate c = certify_simons(9, ComplexPoint(-0.005, 0.001));
  REQUIRE(c.status == CertStatus::Certified);
  REQUIRE(c.tau_star);
  CHECK(*c.tau_star == std::floor(*c.tau_star));
  CHECK(*c.tau_star > 1.0);
  double lo = 1e300;
  double hi = -1e300;
  std::optional<ArgUnwrapper> unwrap;
  for (std::size_t i = 0; i < c.samples.points.size(); ++i) {
    const ComplexPoint w = 1.0 + c.samples.points[i];
    const double a = unwrap ? unwrap->push(w) : (unwrap.emplace(w), principal_arg(w));
    if (c.samples.t_values[i] >= *c.tau_star - 1e-9) {
      lo = std::min(lo, a);
      hi = std::max(hi, a);
    }
  }
  CHECK(hi - lo <= c.tol_arg);
  CHECK(c.samples.t_values.back() == doctest::Approx(*c.tau_star + 1.0));
}

TEST_CASE("refuted runs show a negative imaginary part") {
  const Certificate c = certify_simons(9, ComplexPoint(-0.05, 0.001));
  if (c.status == CertStatus::Refuted) {
    CHECK(c.min_im < -c.tol_im);
    CHECK(c.samples.points.back().imag() < -c.tol_im);
  }
}

TEST_CASE("scan grid") {
  const int d = 9;
  const ScanWindow inside{-0.01, 0.01, 0.001, 0.015};
  for (const auto& cell : scan_grid(d, inside, 6)) {
    REQUIRE(std::abs(cell.lambda) < 0.5 * shearer_radius(d));
    CHECK(cell.status == CertStatus::Certified);
  }
  const ScanWindow negative{-0.1, -0.05, -0.001, 0.001};
  for (const auto& cell : scan_grid(d, negative, 8)) {
    CHECK(cell.status != CertStatus::Certified);
  }
  const ScanWindow one{-0.03, -0.01, 0.01, 0.03};
  const auto single = scan_grid(d, one, 1);
  REQUIRE(single.size() == 1);
  CHECK(std::abs(single[0].lambda - ComplexPoint(-0.02, 0.02)) < 1e-15);
  const Certificate direct = certify_simons(d, single[0].lambda);
  CHECK(single[0].status == direct.status);
  CHECK(single[0].ceil_tau_star == direct.ceil_tau_star);

  const ScanWindow wide{-0.06, 0.06, 0.001, 0.08};
  const auto a = scan_grid(d, wide, 12, {}, 1);
  const auto b = scan_grid(d, wide, 12, {}, 3);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].lambda == b[i].lambda);
    CHECK(a[i].status == b[i].status);
    CHECK(a[i].ceil_tau_star == b[i].ceil_tau_star);
  }
  CHECK_THROWS_AS(scan_grid(d, wide, 4097), PreconditionError);
}

TEST_CASE("orbit examples") {
  const OrbitResult fixed = orbit(2, -4.0 / 27.0, 1000000);
  CHECK(fixed.points.front() == ComplexPoint(0, 0));
  CHECK(std::abs(fixed.points.back() + 1.0 / 3.0) < 1e-6);
  CHECK(fixed.min_dist_to_minus1 == doctest::Approx(2.0 / 3.0).epsilon(1e-6));
  CHECK_FALSE(fixed.crossed);

  const OrbitResult cross = orbit(2, -0.17, 10);
  CHECK(cross.crossed);
  REQUIRE(cross.first_crossing.has_value());
  CHECK(*cross.first_crossing <= 10);
  // hand iteration: 1 + x_8 = -0.08245705617866306
  CHECK(std::abs((1.0 + cross.points[8]).real() + 0.08245705617866306) < 1e-12);
  CHECK(*cross.first_crossing == 8);

  const OrbitResult trap = orbit(2, -0.14, 10000);
  double lowest = 1.0;
  for (const auto& x : trap.points) {
    lowest = std::min(lowest, (1.0 + x).real());
  }
  CHECK(lowest >= 0.66);

  for (std::size_t k = 0; k + 1 < trap.points.size(); ++k) {
    CHECK(std::abs(trap.points[k + 1] - tree_map(trap.points[k], -0.14, 2)) <= 1e-12);
  }
  const OrbitResult big = orbit(2, 1e12, 5);
  CHECK(big.stop == OrbitStop::Diverged);
  // lambda = -(1 + lambda)^2 sends x_2 to -1
  const double golden = (std::sqrt(5.0) - 3.0) / 2.0;
  const OrbitResult hit = orbit(2, golden, 5);
  CHECK(hit.stop == OrbitStop::NearMinusOne);
  CHECK_THROWS_AS(orbit(2, 0.1, 1000001), PreconditionError);
}

TEST_CASE("orbit in log coordinates") {
  const ComplexPoint lambda(-0.05, 0.08);
  const OrbitResult z = orbit(3, lambda, 200);
  const OrbitResult w = orbit_w(3, lambda, 200);
  REQUIRE(z.points.size() == w.points.size());
  for (std::size_t k = 0; k < z.points.size(); ++k) {
    CHECK(std::abs(std::exp(w.points[k]) - 1.0 - z.points[k]) < 1e-9);
  }
  const OrbitResult zero = orbit_w(4, 0.0, 20);
  for (const auto& p : zero.points) {
    CHECK(p == ComplexPoint(0, 0));
  }
  const OrbitResult fixed = orbit_w(2, -4.0 / 27.0, 1000000);
  CHECK(std::abs(fixed.points.back() - std::log(2.0 / 3.0)) < 2e-6);
  const OrbitResult hit = orbit_w(2, (std::sqrt(5.0) - 3.0) / 2.0, 5);
  CHECK(hit.stop == OrbitStop::NearMinusOne);
}

TEST_CASE("Sokal construction") {
  CHECK(sokal_curve_check({3, 0.1, 0.01, 0.0}).ok);
  const auto wide = sokal_curve_check({3, 0.1, 0.5, 0.0});
  CHECK_FALSE(wide.ok);
  CHECK_FALSE(wide.failed.empty());
  CHECK(wide.failed_index > 0);
  for (int d = 2; d <= 10; ++d) {
    for (double eps : {0.01, 0.05, 0.1, 0.3, 0.5, 0.9}) {
      const SokalParams p{d, eps, 0.01, 0.0};
      CHECK(std::abs(p.lambda0() / std::pow(1.0 + p.z0(), d) - p.z0()) < 1e-12);
    }
  }
  CHECK_THROWS_AS(sokal_curve_check({3, 1.0, 0.01, 0.0}), PreconditionError);
  CHECK_THROWS_AS(sokal_curve_check({3, 0.1, 0.0, 0.0}), PreconditionError);
}

TEST_CASE("right half-plane construction") {
  for (int d : {2, 3, 5, 9, 20}) {
    CAPTURE(d);
    const double td = theta_d(d);
    for (int k = 1; k <= 20; ++k) {
      const double theta = kPi / 2 * k / 20;
      CAPTURE(theta);
      const ComplexPoint lambda = std::polar(0.999 * rhp_bound(d, theta), theta);
      const RhpCurveParams p = rhp_params_for(d, lambda);
      if (theta <= td) {
        CHECK(p.beta == doctest::Approx(theta).epsilon(1e-14));
        CHECK(p.psi == doctest::Approx(2 * theta / d));
      }
      const auto report = rhp_curve_check(p);
      CHECK_MESSAGE(report.ok, report.failed);
    }
  }
  const double t = std::tan(kPi / 18);
  RhpCurveParams axis{9, ComplexPoint(0, t), 0.0, kPi / 18, t};
  CHECK(rhp_curve_check(axis).ok);
  RhpCurveParams narrow = axis;
  narrow.psi = 0.5 * kPi / 18;
  const auto bad = rhp_curve_check(narrow);
  CHECK_FALSE(bad.ok);
  CHECK(bad.failed_index == 3);
  CHECK_THROWS_AS(rhp_curve_check(RhpCurveParams{9, ComplexPoint(-1, 1), 0.1, 0.1, 1.0}), PreconditionError);
}

TEST_CASE("status names") {
  CHECK(to_string(CertStatus::Certified) == "Certified");
  CHECK(to_string(CertStatus::Refuted) == "Refuted");
  CHECK(to_string(CertStatus::Inconclusive) == "Inconclusive");
  CHECK(to_string(OrbitStop::Diverged) == "diverged");
}

} // TEST_SUITE
