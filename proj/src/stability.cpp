#include "padovan/stability.hpp"

#include "padovan/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

namespace padovan {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::stable: return "stable";
    case Verdict::marginal: return "marginal";
    case Verdict::unstable: return "unstable";
  }
  return "marginal";
}

namespace {

constexpr double kBoundaryBand = 1e-12;

Rational exact_residual(const Params& params, double x) {
  Rational r = Rational::from_double(x);
  return r * r * r - params.p * r - params.q;
}

// The solver's root is already good to a couple of ulp; pick whichever of
// its five nearest doubles makes the exact residual smallest, so the
// certificate is as tight as the type allows.
EquilibriumCertificate certify(const Params& params, double phi0) {
  double candidates[5];
  candidates[0] = std::nextafter(std::nextafter(phi0, 0.0), 0.0);
  candidates[1] = std::nextafter(phi0, 0.0);
  candidates[2] = phi0;
  candidates[3] = std::nextafter(phi0, std::numeric_limits<double>::infinity());
  candidates[4] = std::nextafter(candidates[3], std::numeric_limits<double>::infinity());

  EquilibriumCertificate best;
  bool have = false;
  Rational best_abs;
  for (double c : candidates) {
    Rational res = exact_residual(params, c);
    Rational res_abs = res.abs();
    if (!have || res_abs < best_abs) {
      have = true;
      best_abs = res_abs;
      best.phi = c;
      best.phi_rational = Rational::from_double(c);
      best.residual = res;
      best.residual_abs = res_abs.to_double();
    }
  }
  return best;
}

}  // namespace

EquilibriumCertificate equilibrium(const Params& params) {
  if (!params.positive_pq())
    throw std::domain_error("equilibrium requires p > 0 and q > 0");
  CubicRoots roots = solve_characteristic_cubic(params.p_d(), params.q_d());
  return certify(params, roots.phi);
}

ClarkCheck clark_check(double t1, double t2) {
  ClarkCheck check;
  check.sum = std::fabs(t1) + std::fabs(t2);
  check.holds = check.sum < 1.0;
  check.note = check.holds
                   ? "|t1| + |t2| < 1: the sufficient condition affirms asymptotic stability"
                   : "|t1| + |t2| >= 1: the condition is only sufficient, so no verdict follows";
  return check;
}

ClarkCheck clark_check(const StabilityReport& report) {
  return clark_check(report.t1, report.t2);
}

JuryCheck jury_check(double a0, double a1) {
  JuryCheck check;
  check.a0 = a0;
  check.a1 = a1;
  check.modulus_ok = std::fabs(a0) < 1.0;
  check.linear_ok = std::fabs(a1) < 1.0 + a0;
  check.slack = std::min(1.0 - std::fabs(a0), 1.0 + a0 - std::fabs(a1));
  if (check.slack > kBoundaryBand) {
    check.verdict = Verdict::stable;
  } else if (check.slack < -kBoundaryBand) {
    check.verdict = Verdict::unstable;
  } else {
    check.verdict = Verdict::marginal;
  }
  return check;
}

JuryCheck jury_check(const StabilityReport& report) {
  return jury_check(report.a0, report.a1);
}

StabilityReport linearize(const Params& params) {
  StabilityReport rep;
  if (!params.positive_pq())
    throw std::domain_error("linearize requires p > 0 and q > 0");
  const double p = params.p_d();
  const double q = params.q_d();
  CubicRoots roots = solve_characteristic_cubic(p, q);
  rep.eq = certify(params, roots.phi);

  const double phi = rep.eq.phi;
  const double phi3 = phi * phi * phi;
  rep.t1 = -(p * phi + q) / phi3;
  rep.t2 = -q / phi3;

  auto f = [p, q](double u, double v) { return (p * v + q) / (u * v); };
  const double h = 1e-6 * phi;
  rep.t1_fd = (f(phi + h, phi) - f(phi - h, phi)) / (2.0 * h);
  rep.t2_fd = (f(phi, phi + h) - f(phi, phi - h)) / (2.0 * h);

  rep.r_formula = check_R_formula(p, q, roots);
  const std::complex<double> R = rep.r_formula.R;
  const std::complex<double> R2 = R * R;
  const std::complex<double> den = R2 * R2 * R2 + p * R2 + 12.0 * p * p + 48.0 * p * p * p / R2;
  rep.paper_t1 = -(p * R2 + 12.0 * p * p + 6.0 * q * R) / den;
  rep.paper_t2 = -(6.0 * q * R) / den;
  rep.paper_gap_t1 = std::abs(rep.paper_t1 - std::complex<double>(rep.t1));
  rep.paper_gap_t2 = std::abs(rep.paper_t2 - std::complex<double>(rep.t2));
  rep.paper_inequality_value = std::abs((p * R2 + 12.0 * p * p + 12.0 * q * R) / den);

  rep.clark = clark_check(rep.t1, rep.t2);
  if (!rep.clark.holds) {
    rep.clark.note =
        "inconclusive for every p, q > 0: |t1| + |t2| = 1 + q/phi^3 > 1 and the "
        "condition is only sufficient; the verdict comes from the eigenvalue moduli instead";
  }

  rep.a1 = -rep.t1;
  rep.a0 = -rep.t2;
  rep.jury = jury_check(rep.a0, rep.a1);
  rep.jury_conditions = {rep.jury.modulus_ok, rep.jury.linear_ok};

  const double disc = rep.t1 * rep.t1 + 4.0 * rep.t2;
  if (disc >= 0.0) {
    const double s = std::sqrt(disc);
    rep.eig1 = std::complex<double>((rep.t1 + s) / 2.0, 0.0);
    rep.eig2 = std::complex<double>((rep.t1 - s) / 2.0, 0.0);
  } else {
    const double s = std::sqrt(-disc) / 2.0;
    rep.eig1 = std::complex<double>(rep.t1 / 2.0, s);
    rep.eig2 = std::complex<double>(rep.t1 / 2.0, -s);
  }
  rep.spectral_radius = std::max(std::abs(rep.eig1), std::abs(rep.eig2));
  if (rep.spectral_radius < 1.0 - kBoundaryBand) {
    rep.verdict = Verdict::stable;
  } else if (rep.spectral_radius > 1.0 + kBoundaryBand) {
    rep.verdict = Verdict::unstable;
  } else {
    rep.verdict = Verdict::marginal;
  }
  return rep;
}

SystemEquilibriumReport system_equilibrium(const Params& params, int grid_n) {
  if (grid_n < 2) throw std::invalid_argument("system_equilibrium: grid_n must be at least 2");
  SystemEquilibriumReport rep;
  rep.cert = equilibrium(params);
  rep.x = rep.cert.phi;
  rep.y = rep.cert.phi;
  const double p = params.p_d();
  const double q = params.q_d();
  rep.substitution_residual = std::fabs(rep.x - (p * rep.x + q) / (rep.x * rep.y));

  // Fixed points of the system solve x^2*y = p*x + q and y^2*x = p*y + q.
  // Subtracting forces x*y*(x - y) = p*(x - y), so any off-diagonal
  // equilibrium would need x*y = p; the grid scan below is the empirical
  // counterpart: nowhere off the diagonal do both residuals get small.
  rep.grid_n = grid_n;
  double min_resid = std::numeric_limits<double>::infinity();
  for (int i = 1; i <= grid_n; ++i) {
    for (int j = 1; j <= grid_n; ++j) {
      const double gx = 10.0 * i / grid_n;
      const double gy = 10.0 * j / grid_n;
      if (std::fabs(gx - gy) < 0.25) continue;
      const double r1 = gx * gx * gy - p * gx - q;
      const double r2 = gy * gy * gx - p * gy - q;
      min_resid = std::min(min_resid, std::max(std::fabs(r1), std::fabs(r2)));
    }
  }
  rep.min_offdiagonal_residual = min_resid;
  return rep;
}

namespace {

std::uint64_t splitmix64_next(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Uniform draw from (lo, hi]: the unit draw lands in [0, 1) and is folded
// from the top end, so lo itself (and with it a zero initial value when
// lo = 0) can never come back.
double draw_range(std::uint64_t& state, double lo, double hi) {
  const double u = static_cast<double>(splitmix64_next(state) >> 11) * 0x1.0p-53;
  return hi - u * (hi - lo);
}

struct TrialResult {
  std::uint64_t sub_seed = 0;
  std::vector<double> initials;
  double error = 0.0;
  bool converged = false;
  Termination termination = Termination::completed;
};

TrialResult run_trial(const Params& params, const SweepConfig& config, double phi, int trial) {
  TrialResult result;
  result.sub_seed =
      config.seed + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(trial + 1);
  std::uint64_t state = result.sub_seed;
  const int n_draws = config.system ? 4 : 2;
  for (int k = 0; k < n_draws; ++k)
    result.initials.push_back(draw_range(state, config.lo, config.hi));

  if (config.system) {
    SystemInitials inits(Rational::from_double(result.initials[0]),
                         Rational::from_double(result.initials[1]),
                         Rational::from_double(result.initials[2]),
                         Rational::from_double(result.initials[3]));
    SystemOrbit orbit = iterate_system(params, inits, config.n_steps, Backend::floating);
    result.termination = orbit.termination;
    if (orbit.termination != Termination::completed) {
      result.error = std::numeric_limits<double>::infinity();
      return result;
    }
    result.error = std::max(std::fabs(orbit.x(config.n_steps).to_double() - phi),
                            std::fabs(orbit.y(config.n_steps).to_double() - phi));
  } else {
    ScalarInitials inits(Rational::from_double(result.initials[0]),
                         Rational::from_double(result.initials[1]));
    Orbit orbit = iterate_scalar(params, inits, config.n_steps, Backend::floating);
    result.termination = orbit.termination;
    if (orbit.termination != Termination::completed) {
      result.error = std::numeric_limits<double>::infinity();
      return result;
    }
    result.error = std::fabs(orbit.x(config.n_steps).to_double() - phi);
  }
  result.converged = result.error < config.tolerance;
  return result;
}

}  // namespace

SweepReport attractor_sweep(const Params& params, const SweepConfig& config) {
  if (config.n_trials < 1 || config.n_steps < 1)
    throw std::invalid_argument("attractor_sweep: need at least one trial and one step");
  if (!(config.lo > 0.0) || !(config.hi > config.lo))
    throw std::invalid_argument("attractor_sweep: initial range must satisfy 0 < lo < hi");
  EquilibriumCertificate cert = equilibrium(params);

  std::vector<TrialResult> results(static_cast<size_t>(config.n_trials));
  const int n_threads = std::max(1, std::min(config.threads, config.n_trials));
  if (n_threads == 1) {
    for (int t = 0; t < config.n_trials; ++t)
      results[static_cast<size_t>(t)] = run_trial(params, config, cert.phi, t);
  } else {
    // Trials are indexed work items: each thread fills its own stride of the
    // results vector and no state is shared, so the reduction below sees the
    // same data as a serial run.
    std::vector<std::thread> workers;
    workers.reserve(static_cast<size_t>(n_threads));
    for (int w = 0; w < n_threads; ++w) {
      workers.emplace_back([&, w]() {
        for (int t = w; t < config.n_trials; t += n_threads)
          results[static_cast<size_t>(t)] = run_trial(params, config, cert.phi, t);
      });
    }
    for (auto& worker : workers) worker.join();
  }

  SweepReport report;
  report.n_trials = config.n_trials;
  report.n_steps = config.n_steps;
  report.tolerance = config.tolerance;
  report.seed = config.seed;
  report.lo = config.lo;
  report.hi = config.hi;
  report.system = config.system;
  report.phi = cert.phi;
  report.worst_final_error = 0.0;
  for (int t = 0; t < config.n_trials; ++t) {
    const TrialResult& r = results[static_cast<size_t>(t)];
    report.worst_final_error = std::max(report.worst_final_error, r.error);
    if (r.converged) {
      ++report.converged_count;
    } else {
      SweepFailure failure;
      failure.trial = t;
      failure.sub_seed = r.sub_seed;
      failure.initials = r.initials;
      failure.final_error = r.error;
      failure.termination = to_string(r.termination);
      report.failures.push_back(std::move(failure));
    }
  }
  return report;
}

}  // namespace padovan
