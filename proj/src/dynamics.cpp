#include "padovan/dynamics.hpp"

#include "padovan/sequence.hpp"

#include <cmath>
#include <stdexcept>

namespace padovan {

const char* to_string(Termination t) {
  switch (t) {
    case Termination::completed: return "completed";
    case Termination::forbidden_hit: return "forbidden_hit";
    case Termination::float_overflow: return "float_overflow";
  }
  return "completed";
}

namespace {

// Magnitudes below this make a float division meaningless; treat them the
// same way as an overflowed term.
constexpr double kFloatDenominatorFloor = 1e-300;

Orbit iterate_scalar_exact(const Params& params, const ScalarInitials& inits, int steps) {
  Orbit orbit;
  orbit.backend = Backend::exact;
  orbit.states.reserve(static_cast<size_t>(steps) + 2);
  orbit.states.emplace_back(Scalar(inits.x_m1));
  orbit.states.emplace_back(Scalar(inits.x_0));
  for (int n = 1; n <= steps; ++n) {
    const Rational& prev = orbit.states[orbit.states.size() - 1].rational();
    const Rational& prev2 = orbit.states[orbit.states.size() - 2].rational();
    Rational den = prev * prev2;
    if (den.is_zero()) {
      orbit.termination = Termination::forbidden_hit;
      orbit.failure_step = n;
      return orbit;
    }
    orbit.states.emplace_back(Scalar((params.p * prev2 + params.q) / den));
  }
  return orbit;
}

Orbit iterate_scalar_float(const Params& params, const ScalarInitials& inits, int steps) {
  Orbit orbit;
  orbit.backend = Backend::floating;
  orbit.states.reserve(static_cast<size_t>(steps) + 2);
  orbit.states.emplace_back(Scalar(inits.x_m1.to_double()));
  orbit.states.emplace_back(Scalar(inits.x_0.to_double()));
  const double p = params.p_d(), q = params.q_d();
  for (int n = 1; n <= steps; ++n) {
    double prev = orbit.states[orbit.states.size() - 1].to_double();
    double prev2 = orbit.states[orbit.states.size() - 2].to_double();
    double den = prev * prev2;
    double next = (p * prev2 + q) / den;
    if (!std::isfinite(den) || std::fabs(den) < kFloatDenominatorFloor ||
        !std::isfinite(next)) {
      orbit.termination = Termination::float_overflow;
      orbit.failure_step = n;
      return orbit;
    }
    orbit.states.emplace_back(Scalar(next));
  }
  return orbit;
}

}  // namespace

Orbit iterate_scalar(const Params& params, const ScalarInitials& inits, int steps,
                     Backend backend) {
  if (steps < 0) throw std::invalid_argument("iterate_scalar: steps must be nonnegative");
  return backend == Backend::exact ? iterate_scalar_exact(params, inits, steps)
                                   : iterate_scalar_float(params, inits, steps);
}

SystemOrbit iterate_system(const Params& params, const SystemInitials& inits, int steps,
                           Backend backend) {
  if (steps < 0) throw std::invalid_argument("iterate_system: steps must be nonnegative");
  SystemOrbit orbit;
  orbit.backend = backend;
  orbit.x_states.reserve(static_cast<size_t>(steps) + 2);
  orbit.y_states.reserve(static_cast<size_t>(steps) + 2);
  if (backend == Backend::exact) {
    orbit.x_states.emplace_back(Scalar(inits.x_m1));
    orbit.x_states.emplace_back(Scalar(inits.x_0));
    orbit.y_states.emplace_back(Scalar(inits.y_m1));
    orbit.y_states.emplace_back(Scalar(inits.y_0));
    for (int n = 1; n <= steps; ++n) {
      const Rational& xp = orbit.x_states[orbit.x_states.size() - 1].rational();
      const Rational& xp2 = orbit.x_states[orbit.x_states.size() - 2].rational();
      const Rational& yp = orbit.y_states[orbit.y_states.size() - 1].rational();
      const Rational& yp2 = orbit.y_states[orbit.y_states.size() - 2].rational();
      Rational den_x = yp * xp2;
      Rational den_y = xp * yp2;
      if (den_x.is_zero() || den_y.is_zero()) {
        orbit.termination = Termination::forbidden_hit;
        orbit.failure_step = n;
        return orbit;
      }
      orbit.x_states.emplace_back(Scalar((params.p * xp2 + params.q) / den_x));
      orbit.y_states.emplace_back(Scalar((params.p * yp2 + params.q) / den_y));
    }
    return orbit;
  }
  orbit.x_states.emplace_back(Scalar(inits.x_m1.to_double()));
  orbit.x_states.emplace_back(Scalar(inits.x_0.to_double()));
  orbit.y_states.emplace_back(Scalar(inits.y_m1.to_double()));
  orbit.y_states.emplace_back(Scalar(inits.y_0.to_double()));
  const double p = params.p_d(), q = params.q_d();
  for (int n = 1; n <= steps; ++n) {
    double xp = orbit.x_states[orbit.x_states.size() - 1].to_double();
    double xp2 = orbit.x_states[orbit.x_states.size() - 2].to_double();
    double yp = orbit.y_states[orbit.y_states.size() - 1].to_double();
    double yp2 = orbit.y_states[orbit.y_states.size() - 2].to_double();
    double den_x = yp * xp2;
    double den_y = xp * yp2;
    double next_x = (p * xp2 + q) / den_x;
    double next_y = (p * yp2 + q) / den_y;
    bool bad = !std::isfinite(den_x) || !std::isfinite(den_y) ||
               std::fabs(den_x) < kFloatDenominatorFloor ||
               std::fabs(den_y) < kFloatDenominatorFloor || !std::isfinite(next_x) ||
               !std::isfinite(next_y);
    if (bad) {
      orbit.termination = Termination::float_overflow;
      orbit.failure_step = n;
      return orbit;
    }
    orbit.x_states.emplace_back(Scalar(next_x));
    orbit.y_states.emplace_back(Scalar(next_y));
  }
  return orbit;
}

ZSubstitutionReport z_substitution_check(const Params& params, const ScalarInitials& inits,
                                         int steps) {
  if (steps < 0) throw std::invalid_argument("z_substitution_check: steps must be nonnegative");
  ZSubstitutionReport report;
  report.steps = steps;

  Orbit orbit = iterate_scalar(params, inits, steps, Backend::exact);

  // z_n = z-ladder with z_{-2} = 1/x_{-1}, z_{-1} = 1, z_0 = x_0, so that
  // x_n = z_n / z_{n-1} holds for the seeds. zs[i] stores z_{i-2}.
  std::vector<Rational> zs;
  zs.reserve(static_cast<size_t>(steps) + 3);
  zs.push_back(Rational(1) / inits.x_m1);
  zs.push_back(Rational(1));
  zs.push_back(inits.x_0);
  for (int n = 1; n <= steps; ++n)
    zs.push_back(params.p * zs[static_cast<size_t>(n)] + params.q * zs[static_cast<size_t>(n - 1)]);
  auto z = [&zs](int n) -> const Rational& { return zs[static_cast<size_t>(n + 2)]; };

  auto note_mismatch = [&report](int n) {
    if (report.first_mismatch_n < 0 || n < report.first_mismatch_n) report.first_mismatch_n = n;
  };

  // The ladder is linear so it never fails; the direct orbit must fail at
  // exactly one past the first z zero (that zero is the x term whose product
  // denominator vanishes one step later).
  int first_zero = -1;
  for (int n = 1; n <= steps; ++n) {
    if (z(n).is_zero()) {
      first_zero = n;
      break;
    }
  }
  if (first_zero >= 0 && first_zero + 1 <= steps) {
    report.termination_consistent = orbit.termination == Termination::forbidden_hit &&
                                    orbit.failure_step == first_zero + 1;
  } else {
    report.termination_consistent = orbit.termination == Termination::completed;
  }
  if (!report.termination_consistent) note_mismatch(first_zero >= 0 ? first_zero + 1 : steps);

  report.checked_up_to = orbit.last_index();
  for (int n = -1; n <= orbit.last_index(); ++n) {
    if (!(orbit.x(n).rational() == z(n) / z(n - 1))) {
      report.ratios_match = false;
      note_mismatch(n);
      break;
    }
  }

  GenPadovanCache cache = generate(params, steps + 3);
  // With q = 0 the ladder never reaches back to z_{-2}, so the expansion
  // identity only starts at n = -1 (and its tail term is absent).
  int expansion_start = params.q.is_zero() ? -1 : -2;
  for (int n = expansion_start; n <= steps; ++n) {
    Rational tail = params.q.is_zero() ? Rational(0) : params.q * cache.at(n - 1) * z(-2);
    Rational expanded = cache.at(n) * z(0) + cache.at(n + 1) * z(-1) + tail;
    if (!(expanded == z(n))) {
      report.expansion_matches = false;
      note_mismatch(n);
      break;
    }
  }

  Rational a = params.p, b = params.q, c = Rational(0);
  for (int r = 0; r <= steps; ++r) {
    bool row_ok = a == cache.at(r + 2) && b == cache.at(r + 3) && c == params.q * cache.at(r + 1);
    if (!row_ok) {
      report.rows_match = false;
      note_mismatch(r);
      break;
    }
    Rational next_a = b;
    Rational next_b = c + params.p * a;
    Rational next_c = params.q * a;
    a = next_a;
    b = next_b;
    c = next_c;
  }

  return report;
}

}  // namespace padovan
