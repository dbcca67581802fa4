#pragma once

#include "padovan/cubic.hpp"
#include "padovan/params.hpp"
#include "padovan/rational.hpp"

#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace padovan {

// Default seed for the convergence sweeps: the string "PAD0VA" read as a
// base-36 numeral. Any other seed works; this one makes the stock reports
// reproducible across machines.
inline constexpr std::uint64_t kDefaultSweepSeed = 1529058214ull;

enum class Verdict { stable, marginal, unstable };
const char* to_string(Verdict v);

// The equilibrium as a double, plus an exact certificate: the double is
// itself a rational number, so its residual under lambda^3 - p*lambda - q
// can be computed with no rounding at all. The solver's answer is nudged by
// up to two ulp to whichever neighbour minimizes that exact residual.
struct EquilibriumCertificate {
  double phi = 0.0;
  Rational phi_rational;
  Rational residual;          // phi_rational^3 - p*phi_rational - q, signed
  double residual_abs = 0.0;  // |residual| rounded to double, for reporting
};

EquilibriumCertificate equilibrium(const Params& params);

struct ClarkCheck {
  double sum = 0.0;  // |t1| + |t2|
  bool holds = false;
  std::string note;
};
// Sufficient condition |t1| + |t2| < 1 for asymptotic stability of
// y_{n+1} = t1*y_n + t2*y_{n-1}. For this equation the sum works out to
// 1 + q/phi^3 > 1, so the check never affirms; the note says so.
ClarkCheck clark_check(double t1, double t2);

struct JuryCheck {
  double a0 = 0.0, a1 = 0.0;
  bool modulus_ok = false;  // |a0| < 1
  bool linear_ok = false;   // |a1| < 1 + a0
  double slack = 0.0;       // min(1 - |a0|, 1 + a0 - |a1|)
  Verdict verdict = Verdict::marginal;
};
// Schur-Cohn conditions for both roots of lambda^2 + a1*lambda + a0 to lie
// strictly inside the unit circle. Verdicts within 1e-12 of the boundary
// are reported as marginal rather than rounded to a side.
JuryCheck jury_check(double a0, double a1);

struct StabilityReport {
  EquilibriumCertificate eq;

  double t1 = 0.0, t2 = 0.0;        // analytic partials of f at (phi, phi)
  double t1_fd = 0.0, t2_fd = 0.0;  // central-difference estimates

  // The same partials written in terms of the radical R from the cubic's
  // closed-form root, evaluated verbatim for comparison. paper_gap_* is the
  // distance to the analytic value; paper_inequality_value is the related
  // bound |(p*R^2 + 12p^2 + 12qR) / (R^6 + p*R^2 + 12p^2 + 48p^3/R^2)|,
  // whose numerator uses 12qR where the t1 display uses 6qR.
  RFormulaReport r_formula;
  std::complex<double> paper_t1, paper_t2;
  double paper_gap_t1 = 0.0, paper_gap_t2 = 0.0;
  double paper_inequality_value = 0.0;

  ClarkCheck clark;
  double a1 = 0.0, a0 = 0.0;  // lambda^2 + a1*lambda + a0 = lambda^2 - t1*lambda - t2
  JuryCheck jury;
  std::pair<bool, bool> jury_conditions{false, false};

  std::complex<double> eig1, eig2;
  double spectral_radius = 0.0;
  Verdict verdict = Verdict::marginal;
};

ClarkCheck clark_check(const StabilityReport& report);
JuryCheck jury_check(const StabilityReport& report);

// Linearization of f(x, y) = (p*y + q)/(x*y) about (phi, phi), with every
// verdict the report carries. Requires p, q > 0.
StabilityReport linearize(const Params& params);

struct SystemEquilibriumReport {
  EquilibriumCertificate cert;
  double x = 0.0, y = 0.0;  // both equal cert.phi
  // |x - (p*x + q)/(x*y)| at the equilibrium.
  double substitution_residual = 0.0;
  // Smallest fixed-point residual seen on an off-diagonal grid over
  // (0, 10]^2 (points with |x - y| < 0.25 skipped). A clearly positive
  // value is evidence the diagonal point is the only equilibrium in range.
  double min_offdiagonal_residual = 0.0;
  int grid_n = 0;
};
SystemEquilibriumReport system_equilibrium(const Params& params, int grid_n = 40);

struct SweepConfig {
  int n_trials = 500;
  int n_steps = 300;
  double tolerance = 1e-6;
  std::uint64_t seed = kDefaultSweepSeed;
  double lo = 0.05, hi = 20.0;  // initials drawn uniformly from (lo, hi]
  bool system = false;
  int threads = 1;  // execution detail only; the report never depends on it
};

struct SweepFailure {
  int trial = 0;
  std::uint64_t sub_seed = 0;
  std::vector<double> initials;  // x_{-1}, x_0 [, y_{-1}, y_0]
  double final_error = 0.0;      // +inf when the orbit overflowed
  std::string termination;
};

struct SweepReport {
  int n_trials = 0;
  int n_steps = 0;
  double tolerance = 0.0;
  std::uint64_t seed = 0;
  double lo = 0.0, hi = 0.0;
  bool system = false;
  double phi = 0.0;
  int converged_count = 0;
  double worst_final_error = 0.0;
  std::vector<SweepFailure> failures;
};

// Float-mode convergence experiment: n_trials random initial conditions,
// each iterated n_steps, converged when the final distance to phi (max over
// components for the system) is below tolerance. Each trial draws from its
// own sub-seed, so reports are identical no matter how many threads run the
// trials or in which order they finish.
SweepReport attractor_sweep(const Params& params, const SweepConfig& config);

}  // namespace padovan
