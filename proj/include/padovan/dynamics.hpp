#pragma once

#include "padovan/closed_form.hpp"
#include "padovan/params.hpp"
#include "padovan/scalar.hpp"

#include <vector>

namespace padovan {

// Direct iteration of x_{n+1} = (p*x_{n-1} + q) / (x_n * x_{n-1}) and of the
// symmetric two-equation system, on either backend. The exact backend is the
// oracle the closed forms are checked against; the float backend is what the
// convergence experiments run on.

enum class Termination { completed, forbidden_hit, float_overflow };
const char* to_string(Termination t);

struct Orbit {
  Backend backend = Backend::exact;
  // states[0] = x_{-1}, states[1] = x_0, states[k] = x_{k-1}.
  std::vector<Scalar> states;
  Termination termination = Termination::completed;
  // Index of the first term that could not be computed; -1 when the run
  // completed. states holds every term before it.
  int failure_step = -1;

  const Scalar& x(int n) const { return states.at(static_cast<size_t>(n + 1)); }
  int last_index() const { return static_cast<int>(states.size()) - 2; }
};

struct SystemOrbit {
  Backend backend = Backend::exact;
  std::vector<Scalar> x_states, y_states;  // same layout as Orbit::states
  Termination termination = Termination::completed;
  int failure_step = -1;

  const Scalar& x(int n) const { return x_states.at(static_cast<size_t>(n + 1)); }
  const Scalar& y(int n) const { return y_states.at(static_cast<size_t>(n + 1)); }
  int last_index() const { return static_cast<int>(x_states.size()) - 2; }
};

// Runs the recurrence for `steps` new terms (so the orbit covers indices
// -1..steps when nothing fails). Initial values are taken exactly; the float
// backend converts them once up front.
Orbit iterate_scalar(const Params& params, const ScalarInitials& inits, int steps,
                     Backend backend);
SystemOrbit iterate_system(const Params& params, const SystemInitials& inits, int steps,
                           Backend backend);

// Exact consistency check of the substitution z_{n+1} = p*z_{n-1} + q*z_{n-2}
// obtained from x_n = z_n / z_{n-1} with z_{-1} = 1. Verifies, over the
// computed prefix of the orbit:
//   * ratios_match: z_n / z_{n-1} reproduces every x_n,
//   * expansion_matches: z_n = S_n*z_0 + S_{n+1}*z_{-1} + q*S_{n-1}*z_{-2},
//   * rows_match: the unrolled coefficient rows (A, B, C), stepped by
//     (A', B', C') = (B, C + p*A, q*A) from (p, q, 0), equal
//     (S_{r+2}, S_{r+3}, q*S_{r+1}),
//   * termination_consistent: the z-ladder breaks down exactly where the
//     direct iteration does.
struct ZSubstitutionReport {
  int steps = 0;
  int checked_up_to = -1;
  bool ratios_match = true;
  bool expansion_matches = true;
  bool rows_match = true;
  bool termination_consistent = true;
  int first_mismatch_n = -1;
};
ZSubstitutionReport z_substitution_check(const Params& params, const ScalarInitials& inits,
                                         int steps);

}  // namespace padovan
