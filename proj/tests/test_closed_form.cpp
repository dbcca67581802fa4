#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "padovan/closed_form.hpp"
#include "padovan/dynamics.hpp"
#include "padovan/params.hpp"
#include "padovan/sequence.hpp"

#include <cstring>
#include <stdexcept>
#include <string>
#include <utility>

using padovan::Backend;
using padovan::ForbiddenInitialsError;
using padovan::ForbiddenReport;
using padovan::ForbiddenSet;
using padovan::GenPadovanCache;
using padovan::Orbit;
using padovan::Params;
using padovan::Rational;
using padovan::ScalarInitials;
using padovan::SystemInitials;
using padovan::SystemOrbit;
using padovan::forbidden_scan;
using padovan::generate;
using padovan::iterate_scalar;
using padovan::iterate_system;
using padovan::scalar_denominator;
using padovan::system_closed;
using padovan::system_denominator_a;
using padovan::system_denominator_b;
using padovan::x_closed;

namespace {
Params pq(long pn, long pd, long qn, long qd) {
  return Params::from_pq(Rational(pn, pd), Rational(qn, qd));
}
}  // namespace

TEST_CASE("zero initial values are rejected up front") {
  CHECK_THROWS_AS(ScalarInitials(Rational(0), Rational(2)), std::invalid_argument);
  CHECK_THROWS_AS(ScalarInitials(Rational(2), Rational(0)), std::invalid_argument);
  CHECK_THROWS_AS(SystemInitials(Rational(1), Rational(1), Rational(0), Rational(1)),
                  std::invalid_argument);
  CHECK_THROWS_AS(SystemInitials(Rational(1), Rational(1), Rational(1), Rational(0)),
                  std::invalid_argument);
}

TEST_CASE("forbidden set labels") {
  CHECK(std::strcmp(to_string(ForbiddenSet::none), "none") == 0);
  CHECK(std::strcmp(to_string(ForbiddenSet::F), "F") == 0);
  CHECK(std::strcmp(to_string(ForbiddenSet::F1), "F1") == 0);
  CHECK(std::strcmp(to_string(ForbiddenSet::F2), "F2") == 0);
}

TEST_CASE("denominator family anchors") {
  Params params = pq(5, 4, 1, 2);
  GenPadovanCache cache = generate(params, 6);
  ScalarInitials inits{Rational(3), Rational(1, 5)};
  // D_{-1} = q*S_{-3} = 1 independent of the initial values.
  CHECK(scalar_denominator(cache, inits, -1) == Rational(1));
  CHECK(scalar_denominator(cache, inits, 0) == inits.x_m1);
  CHECK(scalar_denominator(cache, inits, 1) == inits.x_0 * inits.x_m1);

  ScalarInitials other{Rational(-7, 3), Rational(9, 2)};
  CHECK(scalar_denominator(cache, other, -1) == Rational(1));
}

TEST_CASE("closed form reproduces the worked scalar orbit") {
  Params params = pq(5, 4, 1, 2);
  ScalarInitials inits{Rational(3), Rational(1, 5)};
  CHECK(x_closed(params, inits, -1) == Rational(3));
  CHECK(x_closed(params, inits, 0) == Rational(1, 5));
  CHECK(x_closed(params, inits, 1) == Rational(85, 12));
  CHECK(x_closed(params, inits, 2) == Rational(9, 17));
  CHECK_THROWS_AS(x_closed(params, inits, -2), std::invalid_argument);
}

TEST_CASE("closed form agrees with the exact iteration term by term") {
  Params params = pq(2, 1, 3, 1);
  ScalarInitials inits{Rational(7, 3), Rational(5, 2)};
  Orbit orbit = iterate_scalar(params, inits, 30, Backend::exact);
  REQUIRE(orbit.termination == padovan::Termination::completed);
  GenPadovanCache cache = generate(params, 31);
  for (int n = -1; n <= 30; ++n) CHECK(x_closed(cache, inits, n) == orbit.x(n).rational());
}

TEST_CASE("vanishing denominator raises a structured error") {
  Params params = Params::from_pq(1, 1);
  ScalarInitials inits{Rational(-1), Rational(2)};  // x_{-1} = -q/p
  try {
    x_closed(params, inits, 5);
    FAIL("expected ForbiddenInitialsError");
  } catch (const ForbiddenInitialsError& e) {
    CHECK(e.which() == ForbiddenSet::F);
    CHECK(e.index() == 2);
    CHECK(std::string(e.what()) ==
          "initial values lie in forbidden set F: denominator vanishes at index 2");
  }
}

TEST_CASE("a later zero lets earlier terms through, including an exact zero term") {
  Params params = Params::from_pq(1, 1);
  ScalarInitials inits{Rational(-1, 3), Rational(2)};  // first zero is D_4
  GenPadovanCache cache = generate(params, 6);
  CHECK(scalar_denominator(cache, inits, 4).is_zero());
  CHECK(x_closed(cache, inits, 2) == Rational(-3, 2));
  // x_3 = D_4/D_3 = 0 is a legitimate orbit value; the breakdown is at the
  // next step, where x_4 divides by x_3*x_2.
  CHECK(x_closed(cache, inits, 3) == Rational(0));
  CHECK_THROWS_AS(x_closed(cache, inits, 4), ForbiddenInitialsError);

  Orbit orbit = iterate_scalar(params, inits, 10, Backend::exact);
  CHECK(orbit.termination == padovan::Termination::forbidden_hit);
  CHECK(orbit.failure_step == 4);
}

TEST_CASE("system closed form reproduces the worked system orbit") {
  Params params = pq(3, 5, 2, 5);
  SystemInitials inits{Rational(6, 5), Rational(18, 5), Rational(23, 10), Rational(4, 5)};
  auto base = system_closed(params, inits, -1);
  CHECK(base.first == Rational(6, 5));
  CHECK(base.second == Rational(23, 10));
  auto at0 = system_closed(params, inits, 0);
  CHECK(at0.first == Rational(18, 5));
  CHECK(at0.second == Rational(4, 5));
  auto at1 = system_closed(params, inits, 1);
  CHECK(at1.first == Rational(7, 6));
  CHECK(at1.second == Rational(89, 414));
}

TEST_CASE("system closed form agrees with the exact iteration for both parities") {
  Params params = Params::from_pq(1, 1);
  SystemInitials inits{Rational(2), Rational(3), Rational(1, 2), Rational(5)};
  SystemOrbit orbit = iterate_system(params, inits, 25, Backend::exact);
  REQUIRE(orbit.termination == padovan::Termination::completed);
  GenPadovanCache cache = generate(params, 26);
  for (int n = -1; n <= 25; ++n) {
    auto pair = system_closed(cache, inits, n);
    CHECK(pair.first == orbit.x(n).rational());
    CHECK(pair.second == orbit.y(n).rational());
  }
}

TEST_CASE("scalar forbidden scan finds the hit and reports it") {
  Params params = Params::from_pq(1, 1);
  ForbiddenReport report = forbidden_scan(params, ScalarInitials{Rational(-1), Rational(2)}, 50);
  CHECK(report.hit);
  CHECK(report.first_index == 2);
  CHECK(report.which == ForbiddenSet::F);
  CHECK(report.horizon == 50);
  CHECK(report.note == "denominator family F first vanishes at index 2");
}

TEST_CASE("clean scan is explicit about its horizon") {
  Params params = Params::from_pq(1, 1);
  ForbiddenReport report = forbidden_scan(params, ScalarInitials{Rational(1), Rational(1)}, 200);
  CHECK(!report.hit);
  CHECK(report.first_index == -1);
  CHECK(report.which == ForbiddenSet::none);
  CHECK(report.note ==
        "no vanishing denominator for any index up to 200; indices beyond the horizon are not "
        "certified");
  CHECK_THROWS_AS(forbidden_scan(params, ScalarInitials{Rational(1), Rational(1)}, -1),
                  std::invalid_argument);
}

TEST_CASE("system scan attributes hits to the right family") {
  Params params = Params::from_pq(1, 1);
  // y_{-1} = -q/p zeroes the (y_{-1}, x_0) family at index 2.
  ForbiddenReport b_hit = forbidden_scan(
      params, SystemInitials{Rational(1), Rational(2), Rational(-1), Rational(3)}, 50);
  CHECK(b_hit.hit);
  CHECK(b_hit.first_index == 2);
  CHECK(b_hit.which == ForbiddenSet::F2);

  // When both families vanish at the same index the scan credits F1.
  ForbiddenReport tie = forbidden_scan(
      params, SystemInitials{Rational(-1), Rational(2), Rational(-1), Rational(3)}, 50);
  CHECK(tie.hit);
  CHECK(tie.first_index == 2);
  CHECK(tie.which == ForbiddenSet::F1);

  ForbiddenReport clean = forbidden_scan(
      params, SystemInitials{Rational(2), Rational(3), Rational(1, 2), Rational(5)}, 100);
  CHECK(!clean.hit);
  CHECK(clean.which == ForbiddenSet::none);
}
