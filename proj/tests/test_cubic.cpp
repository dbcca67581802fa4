#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "padovan/cubic.hpp"

#include <cmath>
#include <stdexcept>

using padovan::CubicRoots;
using padovan::RFormulaReport;
using padovan::check_R_formula;
using padovan::solve_characteristic_cubic;

namespace {
const double kGrid[] = {0.25, 0.5, 1.0, 1.25, 2.0, 5.0};

double residual(double p, double q, double x) { return (x * x - p) * x - q; }
}  // namespace

TEST_CASE("plastic number at p = q = 1") {
  CubicRoots roots = solve_characteristic_cubic(1.0, 1.0);
  CHECK(roots.phi == doctest::Approx(1.3247179572447460).epsilon(1e-15));
  CHECK(std::fabs(residual(1.0, 1.0, roots.phi)) < 1e-15);
  // The complex pair has modulus sqrt(q/phi) = sqrt(1/phi) < 1.
  CHECK(std::abs(roots.varphi) == doctest::Approx(std::sqrt(1.0 / roots.phi)).epsilon(1e-12));
  CHECK(roots.varphi.imag() != 0.0);
  CHECK(roots.varphi_conj == std::conj(roots.varphi));
}

TEST_CASE("root solve is tight across the parameter grid") {
  for (double p : kGrid) {
    for (double q : kGrid) {
      CubicRoots roots = solve_characteristic_cubic(p, q);
      CHECK(roots.phi > 0.0);
      double phi3 = roots.phi * roots.phi * roots.phi;
      CHECK(std::fabs(residual(p, q, roots.phi)) < 1e-13 * std::max(1.0, phi3));
    }
  }
}

TEST_CASE("Vieta relations hold for the full root set") {
  for (double p : kGrid) {
    for (double q : kGrid) {
      CubicRoots r = solve_characteristic_cubic(p, q);
      std::complex<double> phi(r.phi, 0.0);
      std::complex<double> e1 = phi + r.varphi + r.varphi_conj;
      std::complex<double> e2 = phi * r.varphi + phi * r.varphi_conj + r.varphi * r.varphi_conj;
      std::complex<double> e3 = phi * r.varphi * r.varphi_conj;
      double scale = std::max({1.0, p, q});
      CHECK(std::abs(e1) < 1e-10 * scale);
      CHECK(std::abs(e2 + p) < 1e-10 * scale);
      CHECK(std::abs(e3 - q) < 1e-10 * scale);
    }
  }
}

TEST_CASE("rational root lands exactly") {
  // lambda = 1 solves lambda^3 = 0.6*lambda + 0.4 and the double evaluation
  // is exact, so the solver must return 1.0 bitwise.
  CubicRoots roots = solve_characteristic_cubic(0.6, 0.4);
  CHECK(roots.phi == 1.0);
  // Same shape at p = q = 1/2.
  CHECK(solve_characteristic_cubic(0.5, 0.5).phi == 1.0);
}

TEST_CASE("root below one still bracketed") {
  // p + q < 1 puts the root under the convenient [1/max(1,q), 1+p+q]
  // bracket; the solver must recover with the origin endpoint.
  CubicRoots roots = solve_characteristic_cubic(0.25, 0.25);
  CHECK(roots.phi < 1.0);
  CHECK(roots.phi > 0.0);
  CHECK(std::fabs(residual(0.25, 0.25, roots.phi)) < 1e-15);
  CHECK(roots.phi == doctest::Approx(0.7606898534022838).epsilon(1e-12));
}

TEST_CASE("domain gates") {
  CHECK_THROWS_AS(solve_characteristic_cubic(0.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(solve_characteristic_cubic(-1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(solve_characteristic_cubic(1.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(solve_characteristic_cubic(1.0, -2.0), std::domain_error);
  CHECK_THROWS_AS(padovan::detail::solve_cubic_core(-0.5, 1.0), std::domain_error);
  CHECK_THROWS_AS(padovan::detail::solve_cubic_core(1.0, 0.0), std::domain_error);
}

TEST_CASE("deflation handles a repeated real pair") {
  // lambda^3 = 3*lambda + 2 factors as (lambda - 2)(lambda + 1)^2.
  CubicRoots roots = solve_characteristic_cubic(3.0, 2.0);
  CHECK(roots.phi == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(roots.varphi.imag() == 0.0);
  CHECK(roots.varphi.real() == doctest::Approx(-1.0).epsilon(1e-6));
  CHECK(roots.varphi_conj.real() == doctest::Approx(-1.0).epsilon(1e-6));
}

TEST_CASE("degenerate p = 0 edge via the core solver") {
  // lambda^3 = 1: the real root is 1 and the complex pair sits on the unit
  // circle, which is exactly why the theory keeps p > 0.
  CubicRoots roots = padovan::detail::solve_cubic_core(0.0, 1.0);
  CHECK(roots.phi == 1.0);
  CHECK(std::abs(roots.varphi) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(roots.varphi.real() == doctest::Approx(-0.5).epsilon(1e-12));
}

TEST_CASE("radical formula agrees on the real branch") {
  CubicRoots roots = solve_characteristic_cubic(1.0, 1.0);
  RFormulaReport rep = check_R_formula(1.0, 1.0, roots);
  CHECK(rep.radicand == doctest::Approx(69.0));
  CHECK(!rep.complex_branch);
  CHECK(rep.consistent);
  CHECK(rep.R.imag() == doctest::Approx(0.0).epsilon(1e-12));

  // p = q = 1/2 gives R = 3 + sqrt(3) on the real branch and phi exactly 1.
  CubicRoots half = solve_characteristic_cubic(0.5, 0.5);
  RFormulaReport rep_half = check_R_formula(0.5, 0.5, half);
  CHECK(rep_half.R.real() == doctest::Approx(4.732050807568877).epsilon(1e-13));
  CHECK(std::abs(rep_half.phi_formula - std::complex<double>(1.0, 0.0)) < 1e-12);
  CHECK(rep_half.consistent);
}

TEST_CASE("radical formula needs the principal complex branch when the radicand is negative") {
  CubicRoots roots = solve_characteristic_cubic(2.0, 0.1);
  RFormulaReport rep = check_R_formula(2.0, 0.1, roots);
  CHECK(rep.radicand < 0.0);
  CHECK(rep.complex_branch);
  CHECK(rep.consistent);
  CHECK(rep.residual < 1e-12);

  CubicRoots ex = solve_characteristic_cubic(1.25, 0.5);
  RFormulaReport rep_ex = check_R_formula(1.25, 0.5, ex);
  CHECK(rep_ex.complex_branch);
  CHECK(rep_ex.R.real() == doctest::Approx(3.84233).epsilon(1e-5));
  CHECK(rep_ex.R.imag() == doctest::Approx(0.486319).epsilon(1e-5));
  CHECK(rep_ex.consistent);
}

TEST_CASE("radical formula stays consistent across the grid") {
  for (double p : kGrid) {
    for (double q : kGrid) {
      CubicRoots roots = solve_characteristic_cubic(p, q);
      RFormulaReport rep = check_R_formula(p, q, roots);
      CHECK(rep.consistent);
    }
  }
}
