#include "indzero/certify.hpp"
#include "indzero/complexgeom.hpp"
#include "indzero/indpoly.hpp"
#include "indzero/regions.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

using namespace indzero;

TEST_SUITE("properties") {

TEST_CASE("cpow agrees with exp(delta log z)") {
  std::mt19937_64 rng(101);
  std::uniform_real_distribution<double> lmod(-8.0, 8.0);
  std::uniform_real_distribution<double> ang(-kPi, kPi);
  std::uniform_real_distribution<double> del(0.0, 5.0);
  for (int k = 0; k < 100000; ++k) {
    ComplexPoint z = std::polar(std::exp(lmod(rng)), ang(rng));
    if (k % 97 == 0) {
      z = {-std::abs(z), 0.0};
    }
    const double delta = del(rng);
    const ComplexPoint want = std::exp(delta * principal_log(z));
    const ComplexPoint got = cpow(z, delta);
    if (std::abs(got - want) > 1e-11 * std::abs(want)) {
      FAIL_CHECK("cpow mismatch at z = " << z << ", delta = " << delta);
    }
  }
}

TEST_CASE("geometric means dominate arithmetic means") {
  std::mt19937_64 rng(103);
  std::uniform_real_distribution<double> lmod(-5.0, 5.0);
  std::uniform_real_distribution<double> ang(-kPi, kPi);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int done = 0;
  while (done < 100000) {
    const ComplexPoint z1 = std::polar(std::exp(lmod(rng)), ang(rng));
    const ComplexPoint z2 = std::polar(std::exp(lmod(rng)), ang(rng));
    if (std::abs(principal_arg(z1) - principal_arg(z2)) > kPi) {
      continue;
    }
    const double alpha = unit(rng);
    const CoverWitness w = geo_mean_dominates(z1, z2, alpha);
    const ComplexPoint lhs = w.t * cpow(z1, alpha) * cpow(z2, 1.0 - alpha);
    const ComplexPoint rhs = w.beta * z1 + (1.0 - w.beta) * z2;
    const double scale = std::max({1.0, std::abs(z1), std::abs(z2)});
    if (!(std::abs(lhs - rhs) < 1e-9 * scale && w.t >= 0.0 && w.t <= 1.0 + 1e-12 && w.beta >= -1e-12 &&
          w.beta <= 1.0 + 1e-12)) {
      FAIL_CHECK("witness fails at z1 = " << z1 << ", z2 = " << z2 << ", alpha = " << alpha);
    }
    ++done;
  }
}

TEST_CASE("covering is transitive along a ray") {
  std::mt19937_64 rng(107);
  std::uniform_int_distribution<int> coord(-20, 20);
  std::uniform_int_distribution<int> expo(-6, 6);
  int checked = 0;
  for (int k = 0; k < 20000; ++k) {
    const int p = coord(rng);
    const int q = coord(rng);
    if (p == 0 && q == 0) {
      continue;
    }
    int e[3] = {expo(rng), expo(rng), expo(rng)};
    std::sort(e, e + 3);
    // 1 + z = 2^e (p + iq): scaling by powers of two keeps the argument exact
    auto point = [&](int ex) { return std::ldexp(1.0, ex) * ComplexPoint(p, q) - 1.0; };
    const ComplexPoint a = point(e[0]);
    const ComplexPoint b = point(e[1]);
    const ComplexPoint c = point(e[2]);
    if (covers(a, b, 0.0) && covers(b, c, 0.0)) {
      CHECK(covers(a, c, 0.0));
      ++checked;
    }
  }
  CHECK(checked > 10000);
}

TEST_CASE("the tree map scales covered points") {
  std::mt19937_64 rng(109);
  std::uniform_real_distribution<double> ang(-kPi, kPi);
  std::uniform_real_distribution<double> mod(0.05, 3.0);
  std::uniform_real_distribution<double> stretch(1.0, 4.0);
  for (int k = 0; k < 20000; ++k) {
    const ComplexPoint w = std::polar(mod(rng), ang(rng)) - 1.0;
    const ComplexPoint z = stretch(rng) * (1.0 + w) - 1.0;
    REQUIRE(covers(w, z, 1e-9));
    const ComplexPoint lambda = std::polar(mod(rng), ang(rng));
    const int d = 1 + static_cast<int>(rng() % 10);
    const ComplexPoint fz = tree_map(z, lambda, d);
    const ComplexPoint fw = tree_map(w, lambda, d);
    CHECK(std::abs(principal_arg(fz / fw)) < 1e-9);
    CHECK(std::abs(fz) <= std::abs(fw) * (1.0 + 1e-12));
  }
}

TEST_CASE("certified points are not zeros of small trees") {
  const TreeCatalog catalog(3, 11);
  std::mt19937_64 rng(113);
  std::uniform_real_distribution<double> re(-0.4, 0.4);
  std::uniform_real_distribution<double> im(0.001, 0.4);
  int certified = 0;
  for (int k = 0; k < 200; ++k) {
    const ComplexPoint lambda(re(rng), im(rng));
    if (certify_simons(3, lambda).status == CertStatus::Certified) {
      ++certified;
      CHECK(catalog.min_abs(lambda).min_modulus > 1e-6);
    }
  }
  CHECK(certified > 20);
}

TEST_CASE("certification is conjugate consistent") {
  std::mt19937_64 rng(127);
  std::uniform_real_distribution<double> u(-0.1, 0.1);
  for (int k = 0; k < 1000; ++k) {
    const ComplexPoint lambda(u(rng), u(rng));
    if (lambda.imag() == 0.0) {
      continue;
    }
    CHECK(certify_simons(5, lambda).status == certify_simons(5, std::conj(lambda)).status);
  }
}

TEST_CASE("the critical region is certified") {
  const int d = 9;
  const double tmax = critical_theta_max(d);
  for (int k = 1; k <= 50; ++k) {
    const double theta = tmax * k / 50.0;
    const double r = 0.99 * critical_region_bound(d, theta);
    const ComplexPoint lambda = -shearer_radius(d) * std::exp(ComplexPoint(r, -theta));
    const Certificate c = certify_simons(d, lambda);
    CHECK_MESSAGE(c.status == CertStatus::Certified, "theta = " << theta << ": " << c.diagnostic);
  }
}

TEST_CASE("extending the run past the window never refutes") {
  std::mt19937_64 rng(131);
  std::uniform_real_distribution<double> re(-0.05, 0.2);
  std::uniform_real_distribution<double> im(0.001, 0.2);
  int done = 0;
  for (int k = 0; k < 1000 && done < 100; ++k) {
    const int d = 2 + static_cast<int>(rng() % 8);
    const ComplexPoint lambda(re(rng), im(rng));
    const Certificate c = certify_simons(d, lambda);
    if (c.status != CertStatus::Certified) {
      continue;
    }
    CurveOptions longer;
    longer.stop_early = false;
    longer.t_max = std::ceil(*c.tau_star + 1.0) + 5.0;
    const CurveSamples s = h_curve(d, lambda, longer);
    double lowest = 0.0;
    for (const auto& p : s.points) {
      lowest = std::min(lowest, p.imag());
    }
    CHECK(lowest >= -c.tol_im);
    ++done;
  }
  CHECK(done == 100);
}

TEST_CASE("integer samples of the curve follow the orbit") {
  for (ComplexPoint lambda : {ComplexPoint(0.05, 0.03), ComplexPoint(-0.02, 0.01), ComplexPoint(0.3, 0.5)}) {
    CurveOptions opts;
    opts.stop_early = false;
    opts.t_max = 30.0;
    const CurveSamples s = h_curve(4, lambda, opts);
    const OrbitResult o = orbit(4, lambda, 30);
    for (std::size_t i = 0; i < s.t_values.size(); ++i) {
      const double t = s.t_values[i];
      if (t == std::floor(t)) {
        const auto n = static_cast<std::size_t>(t);
        REQUIRE(n < o.points.size());
        CHECK(std::abs(s.points[i] - o.points[n]) < 1e-10);
      }
    }
  }
}

} // TEST_SUITE
