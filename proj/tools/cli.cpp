#include "cli.hpp"

#include "padovan/closed_form.hpp"
#include "padovan/cubic.hpp"
#include "padovan/dynamics.hpp"
#include "padovan/report.hpp"
#include "padovan/scalar.hpp"
#include "padovan/sequence.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace padovan::cli {

namespace {

// Configuration problems all funnel through this type so run() can map them
// to one exit code and a uniform "error:" line.
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

Rational parse_rational_flag(const char* flag, const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string(flag) + ": " + e.what());
  }
}

Params build_params(const Options& opts) {
  const bool any_abg = !opts.alpha.empty() || !opts.beta.empty() || !opts.gamma.empty();
  const bool any_pq = !opts.p.empty() || !opts.q.empty();
  if (any_abg && any_pq)
    throw ConfigError("give either --alpha/--beta/--gamma or --p/--q, not both");
  if (any_abg) {
    if (opts.alpha.empty() || opts.beta.empty() || opts.gamma.empty())
      throw ConfigError("--alpha, --beta and --gamma must be given together");
    try {
      return Params::from_alpha_beta_gamma(parse_rational_flag("--alpha", opts.alpha),
                                           parse_rational_flag("--beta", opts.beta),
                                           parse_rational_flag("--gamma", opts.gamma));
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
  }
  if (!any_pq) throw ConfigError("parameters required: --alpha/--beta/--gamma or --p/--q");
  if (opts.p.empty() || opts.q.empty()) throw ConfigError("--p and --q must be given together");
  return Params::from_pq(parse_rational_flag("--p", opts.p),
                         parse_rational_flag("--q", opts.q));
}

ScalarInitials build_scalar_initials(const Options& opts) {
  if (opts.x_m1.empty() || opts.x_0.empty())
    throw ConfigError("initial values required: --x-1 and --x0");
  try {
    return ScalarInitials(parse_rational_flag("--x-1", opts.x_m1),
                          parse_rational_flag("--x0", opts.x_0));
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

SystemInitials build_system_initials(const Options& opts) {
  if (opts.x_m1.empty() || opts.x_0.empty() || opts.y_m1.empty() || opts.y_0.empty())
    throw ConfigError("initial values required: --x-1, --x0, --y-1 and --y0");
  try {
    return SystemInitials(parse_rational_flag("--x-1", opts.x_m1),
                          parse_rational_flag("--x0", opts.x_0),
                          parse_rational_flag("--y-1", opts.y_m1),
                          parse_rational_flag("--y0", opts.y_0));
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

std::string pick_format(const Options& opts, const char* fallback, bool json_only) {
  std::string format = opts.format.empty() ? fallback : opts.format;
  if (format != "csv" && format != "json")
    throw ConfigError("--format must be csv or json");
  if (json_only && format == "csv")
    throw ConfigError(opts.command + " output is json only");
  return format;
}

Backend pick_backend(const Options& opts) {
  if (opts.backend == "exact") return Backend::exact;
  if (opts.backend == "float") return Backend::floating;
  throw ConfigError("--backend must be exact or float");
}

void validate_common(const Options& opts) {
  if (opts.precision < 1) throw ConfigError("--precision must be at least 1");
}

void require_nonzero_q(const Params& params) {
  if (params.q.is_zero())
    throw ConfigError("the closed form needs q != 0 (its backward seed is 1/q)");
}

int default_steps(const Options& opts, int fallback) {
  if (opts.steps < 0) return fallback;
  return opts.steps;
}

std::string verdict_str(Verdict v) { return to_string(v); }

// ---------------------------------------------------------------- sequence

int run_sequence(const Options& opts, std::ostream& out, std::ostream& err) {
  Params params = build_params(opts);
  if (opts.n < 0) throw ConfigError("--n must be nonnegative");
  const std::string format = pick_format(opts, "csv", false);
  GenPadovanCache cache = generate(params, opts.n);

  bool with_binet = opts.binet;
  CubicRoots roots;
  BinetCoefficients coeffs;
  if (with_binet) {
    if (!params.positive_pq())
      throw ConfigError("--binet needs p > 0 and q > 0 (real dominant root)");
    roots = solve_characteristic_cubic(params.p_d(), params.q_d());
    try {
      coeffs = binet_coefficients(roots);
    } catch (const std::domain_error& e) {
      throw ConfigError(e.what());
    }
  }

  if (format == "csv") {
    err << params_echo(params) << '\n';
    std::vector<std::string> header = {"n", "S_n", "S_n_decimal"};
    if (with_binet) {
      header.push_back("S_n_binet");
      header.push_back("binet_abs_error");
    }
    out << csv_row(header);
    for (int n = 0; n <= opts.n; ++n) {
      const Rational& s = cache.at(n);
      std::vector<std::string> row = {std::to_string(n), csv_field(s.to_string(), true),
                                      s.to_decimal(opts.precision)};
      if (with_binet) {
        double b = binet_eval(roots, coeffs, n);
        row.push_back(format_double(b, opts.precision));
        row.push_back(format_double(std::fabs(b - s.to_double()), opts.precision));
      }
      out << csv_row(row);
    }
    return kExitOk;
  }

  Json run;
  run["n"] = opts.n;
  run["binet"] = with_binet;
  run["precision"] = opts.precision;
  Json data = Json::array();
  for (int n = 0; n <= opts.n; ++n) {
    const Rational& s = cache.at(n);
    Json item;
    item["n"] = n;
    item["S_n"] = s.to_string();
    item["S_n_decimal"] = s.to_decimal(opts.precision);
    if (with_binet) {
      double b = binet_eval(roots, coeffs, n);
      item["S_n_binet"] = json_double(b);
      item["binet_abs_error"] = json_double(std::fabs(b - s.to_double()));
    }
    data.push_back(std::move(item));
  }
  out << document("sequence", params, std::move(run), std::move(data)).dump(2) << '\n';
  return kExitOk;
}

// ----------------------------------------------------------------- iterate

std::string scalar_cell(const Scalar& v, int precision, bool quote_exact) {
  if (v.is_exact()) {
    std::string s = v.rational().to_string();
    return quote_exact ? csv_field(s, true) : s;
  }
  return format_double(v.to_double(), precision);
}

int run_iterate(const Options& opts, std::ostream& out, std::ostream& err) {
  Params params = build_params(opts);
  const int steps = default_steps(opts, 100);
  if (steps < 0) throw ConfigError("--steps must be nonnegative");
  const Backend backend = pick_backend(opts);
  const std::string format = pick_format(opts, "csv", false);

  Termination termination = Termination::completed;
  int failure_step = -1;

  if (!opts.system) {
    ScalarInitials inits = build_scalar_initials(opts);
    Orbit orbit = iterate_scalar(params, inits, steps, backend);
    termination = orbit.termination;
    failure_step = orbit.failure_step;
    if (format == "csv") {
      err << params_echo(params) << '\n';
      out << csv_row({"n", "x_n"});
      for (int n = -1; n <= orbit.last_index(); ++n)
        out << csv_row({std::to_string(n), scalar_cell(orbit.x(n), opts.precision, true)});
    } else {
      Json run;
      run["backend"] = to_string(backend);
      run["steps"] = steps;
      run["system"] = false;
      run["precision"] = opts.precision;
      run["termination"] = to_string(termination);
      run["failure_step"] = failure_step;
      Json data = Json::array();
      for (int n = -1; n <= orbit.last_index(); ++n) {
        Json item;
        item["n"] = n;
        if (backend == Backend::exact) {
          item["x_n"] = orbit.x(n).rational().to_string();
          item["x_n_decimal"] = orbit.x(n).rational().to_decimal(opts.precision);
        } else {
          item["x_n"] = json_double(orbit.x(n).to_double());
        }
        data.push_back(std::move(item));
      }
      out << document("iterate", params, std::move(run), std::move(data)).dump(2) << '\n';
    }
  } else {
    SystemInitials inits = build_system_initials(opts);
    SystemOrbit orbit = iterate_system(params, inits, steps, backend);
    termination = orbit.termination;
    failure_step = orbit.failure_step;
    if (format == "csv") {
      err << params_echo(params) << '\n';
      out << csv_row({"n", "x_n", "y_n"});
      for (int n = -1; n <= orbit.last_index(); ++n)
        out << csv_row({std::to_string(n), scalar_cell(orbit.x(n), opts.precision, true),
                        scalar_cell(orbit.y(n), opts.precision, true)});
    } else {
      Json run;
      run["backend"] = to_string(backend);
      run["steps"] = steps;
      run["system"] = true;
      run["precision"] = opts.precision;
      run["termination"] = to_string(termination);
      run["failure_step"] = failure_step;
      Json data = Json::array();
      for (int n = -1; n <= orbit.last_index(); ++n) {
        Json item;
        item["n"] = n;
        if (backend == Backend::exact) {
          item["x_n"] = orbit.x(n).rational().to_string();
          item["y_n"] = orbit.y(n).rational().to_string();
          item["x_n_decimal"] = orbit.x(n).rational().to_decimal(opts.precision);
          item["y_n_decimal"] = orbit.y(n).rational().to_decimal(opts.precision);
        } else {
          item["x_n"] = json_double(orbit.x(n).to_double());
          item["y_n"] = json_double(orbit.y(n).to_double());
        }
        data.push_back(std::move(item));
      }
      out << document("iterate", params, std::move(run), std::move(data)).dump(2) << '\n';
    }
  }

  if (termination != Termination::completed)
    err << "orbit stopped at step " << failure_step << ": " << to_string(termination) << '\n';
  if (termination == Termination::forbidden_hit && opts.strict) return kExitForbidden;
  return kExitOk;
}

// ----------------------------------------------------------------- compare

struct ClosedTable {
  // denominators[k + 1] holds D_k, for k = -1 .. steps + 1
  std::vector<Rational> denominators;
  int first_zero = -1;  // smallest k in [0, steps] with D_k = 0
  ForbiddenSet which = ForbiddenSet::none;

  const Rational& d(int k) const { return denominators[static_cast<size_t>(k + 1)]; }
};

ClosedTable scalar_closed_table(const GenPadovanCache& cache, const ScalarInitials& inits,
                                int steps) {
  ClosedTable table;
  table.denominators.reserve(static_cast<size_t>(steps) + 3);
  for (int k = -1; k <= steps + 1; ++k)
    table.denominators.push_back(scalar_denominator(cache, inits, k));
  for (int k = 0; k <= steps; ++k) {
    if (table.d(k).is_zero()) {
      table.first_zero = k;
      table.which = ForbiddenSet::F;
      break;
    }
  }
  return table;
}

int run_compare(const Options& opts, std::ostream& out, std::ostream& err) {
  Params params = build_params(opts);
  require_nonzero_q(params);
  const int steps = default_steps(opts, 100);
  if (steps < 0) throw ConfigError("--steps must be nonnegative");
  const Backend backend = pick_backend(opts);
  const std::string format = pick_format(opts, "csv", false);
  GenPadovanCache cache = generate(params, steps + 1);

  bool forbidden = false;
  int forbidden_index = -1;
  ForbiddenSet forbidden_which = ForbiddenSet::none;
  Termination termination = Termination::completed;
  int failure_step = -1;

  Json run;
  run["backend"] = to_string(backend);
  run["steps"] = steps;
  run["system"] = opts.system;
  run["precision"] = opts.precision;
  Json data = Json::array();
  Json summary;
  std::ostringstream csv;
  std::string max_note;

  if (!opts.system) {
    ScalarInitials inits = build_scalar_initials(opts);
    ClosedTable table = scalar_closed_table(cache, inits, steps);
    forbidden = table.first_zero >= 0;
    forbidden_index = table.first_zero;
    forbidden_which = table.which;
    Orbit orbit = iterate_scalar(params, inits, steps, backend);
    termination = orbit.termination;
    failure_step = orbit.failure_step;
    int last = orbit.last_index();
    if (forbidden) last = std::min(last, table.first_zero - 1);

    if (backend == Backend::exact) {
      Rational max_dev;
      csv << csv_row({"n", "x_iterated", "x_closed", "deviation"});
      for (int n = -1; n <= last; ++n) {
        Rational closed = table.d(n + 1) / table.d(n);
        const Rational& iter = orbit.x(n).rational();
        Rational dev = (closed - iter).abs();
        if (max_dev < dev) max_dev = dev;
        if (format == "csv") {
          csv << csv_row({std::to_string(n), csv_field(iter.to_string(), true),
                          csv_field(closed.to_string(), true),
                          csv_field(dev.to_string(), true)});
        } else {
          Json item;
          item["n"] = n;
          item["x_iterated"] = iter.to_string();
          item["x_closed"] = closed.to_string();
          item["deviation"] = dev.to_string();
          data.push_back(std::move(item));
        }
      }
      summary["max_deviation"] = max_dev.to_string();
      max_note = "max deviation: " + max_dev.to_string();
    } else {
      double max_rel = 0.0;
      csv << csv_row({"n", "x_iterated", "x_closed", "relative_deviation"});
      for (int n = -1; n <= last; ++n) {
        double closed = (table.d(n + 1) / table.d(n)).to_double();
        double iter = orbit.x(n).to_double();
        double rel = std::fabs(closed - iter) / std::max(1.0, std::fabs(closed));
        max_rel = std::max(max_rel, rel);
        if (format == "csv") {
          csv << csv_row({std::to_string(n), format_double(iter, opts.precision),
                          format_double(closed, opts.precision),
                          format_double(rel, opts.precision)});
        } else {
          Json item;
          item["n"] = n;
          item["x_iterated"] = json_double(iter);
          item["x_closed"] = json_double(closed);
          item["relative_deviation"] = json_double(rel);
          data.push_back(std::move(item));
        }
      }
      summary["max_relative_deviation"] = json_double(max_rel);
      max_note = "max relative deviation: " + format_double(max_rel, opts.precision);
    }
  } else {
    SystemInitials inits = build_system_initials(opts);
    std::vector<Rational> va, vb;
    va.reserve(static_cast<size_t>(steps) + 3);
    vb.reserve(static_cast<size_t>(steps) + 3);
    for (int k = -1; k <= steps + 1; ++k) {
      va.push_back(system_denominator_a(cache, inits, k));
      vb.push_back(system_denominator_b(cache, inits, k));
    }
    auto da = [&va](int k) -> const Rational& { return va[static_cast<size_t>(k + 1)]; };
    auto db = [&vb](int k) -> const Rational& { return vb[static_cast<size_t>(k + 1)]; };
    for (int k = 0; k <= steps && !forbidden; ++k) {
      if (da(k).is_zero()) {
        forbidden = true;
        forbidden_index = k;
        forbidden_which = ForbiddenSet::F1;
      } else if (db(k).is_zero()) {
        forbidden = true;
        forbidden_index = k;
        forbidden_which = ForbiddenSet::F2;
      }
    }
    SystemOrbit orbit = iterate_system(params, inits, steps, backend);
    termination = orbit.termination;
    failure_step = orbit.failure_step;
    int last = orbit.last_index();
    if (forbidden) last = std::min(last, forbidden_index - 1);

    if (backend == Backend::exact) {
      Rational max_dev;
      csv << csv_row(
          {"n", "x_iterated", "x_closed", "x_deviation", "y_iterated", "y_closed", "y_deviation"});
      for (int n = -1; n <= last; ++n) {
        const bool even = n % 2 == 0;
        Rational closed_x = even ? db(n + 1) / db(n) : da(n + 1) / da(n);
        Rational closed_y = even ? da(n + 1) / da(n) : db(n + 1) / db(n);
        const Rational& iter_x = orbit.x(n).rational();
        const Rational& iter_y = orbit.y(n).rational();
        Rational dev_x = (closed_x - iter_x).abs();
        Rational dev_y = (closed_y - iter_y).abs();
        if (max_dev < dev_x) max_dev = dev_x;
        if (max_dev < dev_y) max_dev = dev_y;
        if (format == "csv") {
          csv << csv_row({std::to_string(n), csv_field(iter_x.to_string(), true),
                          csv_field(closed_x.to_string(), true),
                          csv_field(dev_x.to_string(), true),
                          csv_field(iter_y.to_string(), true),
                          csv_field(closed_y.to_string(), true),
                          csv_field(dev_y.to_string(), true)});
        } else {
          Json item;
          item["n"] = n;
          item["x_iterated"] = iter_x.to_string();
          item["x_closed"] = closed_x.to_string();
          item["x_deviation"] = dev_x.to_string();
          item["y_iterated"] = iter_y.to_string();
          item["y_closed"] = closed_y.to_string();
          item["y_deviation"] = dev_y.to_string();
          data.push_back(std::move(item));
        }
      }
      summary["max_deviation"] = max_dev.to_string();
      max_note = "max deviation: " + max_dev.to_string();
    } else {
      double max_rel = 0.0;
      csv << csv_row({"n", "x_iterated", "x_closed", "x_relative_deviation", "y_iterated",
                      "y_closed", "y_relative_deviation"});
      for (int n = -1; n <= last; ++n) {
        const bool even = n % 2 == 0;
        double closed_x = (even ? db(n + 1) / db(n) : da(n + 1) / da(n)).to_double();
        double closed_y = (even ? da(n + 1) / da(n) : db(n + 1) / db(n)).to_double();
        double iter_x = orbit.x(n).to_double();
        double iter_y = orbit.y(n).to_double();
        double rel_x = std::fabs(closed_x - iter_x) / std::max(1.0, std::fabs(closed_x));
        double rel_y = std::fabs(closed_y - iter_y) / std::max(1.0, std::fabs(closed_y));
        max_rel = std::max({max_rel, rel_x, rel_y});
        if (format == "csv") {
          csv << csv_row({std::to_string(n), format_double(iter_x, opts.precision),
                          format_double(closed_x, opts.precision),
                          format_double(rel_x, opts.precision),
                          format_double(iter_y, opts.precision),
                          format_double(closed_y, opts.precision),
                          format_double(rel_y, opts.precision)});
        } else {
          Json item;
          item["n"] = n;
          item["x_iterated"] = json_double(iter_x);
          item["x_closed"] = json_double(closed_x);
          item["x_relative_deviation"] = json_double(rel_x);
          item["y_iterated"] = json_double(iter_y);
          item["y_closed"] = json_double(closed_y);
          item["y_relative_deviation"] = json_double(rel_y);
          data.push_back(std::move(item));
        }
      }
      summary["max_relative_deviation"] = json_double(max_rel);
      max_note = "max relative deviation: " + format_double(max_rel, opts.precision);
    }
  }

  run["termination"] = to_string(termination);
  run["failure_step"] = failure_step;
  if (forbidden) {
    Json fj;
    fj["which"] = to_string(forbidden_which);
    fj["first_index"] = forbidden_index;
    run["forbidden"] = std::move(fj);
  }

  if (format == "csv") {
    err << params_echo(params) << '\n';
    out << csv.str();
    err << max_note << '\n';
  } else {
    out << document("compare", params, std::move(run), std::move(data), std::move(summary))
               .dump(2)
        << '\n';
  }
  if (forbidden) {
    err << "forbidden set " << to_string(forbidden_which) << ": denominator vanishes at index "
        << forbidden_index << "; table truncated" << '\n';
    if (opts.strict) return kExitForbidden;
  }
  return kExitOk;
}

// --------------------------------------------------------------- stability

Json equilibrium_json(const EquilibriumCertificate& cert) {
  Json j;
  j["phi"] = json_double(cert.phi);
  j["phi_rational"] = cert.phi_rational.to_string();
  j["residual"] = cert.residual.to_string();
  j["residual_abs"] = json_double(cert.residual_abs);
  return j;
}

int run_stability(const Options& opts, std::ostream& out, std::ostream&) {
  Params params = build_params(opts);
  pick_format(opts, "json", true);
  StabilityReport rep = linearize(params);

  Json j;
  j["equilibrium"] = equilibrium_json(rep.eq);
  j["t1"] = json_double(rep.t1);
  j["t2"] = json_double(rep.t2);
  j["t1_fd"] = json_double(rep.t1_fd);
  j["t2_fd"] = json_double(rep.t2_fd);
  j["paper_t1"] = json_complex(rep.paper_t1);
  j["paper_t2"] = json_complex(rep.paper_t2);
  j["paper_gap_t1"] = json_double(rep.paper_gap_t1);
  j["paper_gap_t2"] = json_double(rep.paper_gap_t2);
  j["paper_inequality_value"] = json_double(rep.paper_inequality_value);
  Json rf;
  rf["radicand"] = json_double(rep.r_formula.radicand);
  rf["R"] = json_complex(rep.r_formula.R);
  rf["phi_formula"] = json_complex(rep.r_formula.phi_formula);
  rf["residual"] = json_double(rep.r_formula.residual);
  rf["complex_branch"] = rep.r_formula.complex_branch;
  rf["consistent"] = rep.r_formula.consistent;
  j["r_formula"] = std::move(rf);
  Json cj;
  cj["sum"] = json_double(rep.clark.sum);
  cj["holds"] = rep.clark.holds;
  cj["note"] = rep.clark.note;
  j["clark"] = std::move(cj);
  j["a1"] = json_double(rep.a1);
  j["a0"] = json_double(rep.a0);
  Json jj;
  jj["a0"] = json_double(rep.jury.a0);
  jj["a1"] = json_double(rep.jury.a1);
  jj["modulus_ok"] = rep.jury.modulus_ok;
  jj["linear_ok"] = rep.jury.linear_ok;
  jj["slack"] = json_double(rep.jury.slack);
  jj["verdict"] = verdict_str(rep.jury.verdict);
  j["jury"] = std::move(jj);
  j["jury_conditions"] = Json::array({rep.jury_conditions.first, rep.jury_conditions.second});
  j["eigenvalues"] = Json::array({json_complex(rep.eig1), json_complex(rep.eig2)});
  j["spectral_radius"] = json_double(rep.spectral_radius);
  j["verdict"] = verdict_str(rep.verdict);

  if (opts.system) {
    SystemEquilibriumReport sys = system_equilibrium(params);
    Json sj;
    sj["x"] = json_double(sys.x);
    sj["y"] = json_double(sys.y);
    sj["substitution_residual"] = json_double(sys.substitution_residual);
    sj["min_offdiagonal_residual"] = json_double(sys.min_offdiagonal_residual);
    sj["grid_n"] = sys.grid_n;
    j["system_equilibrium"] = std::move(sj);
  }

  Json run;
  run["system"] = opts.system;
  out << document("stability", params, std::move(run), Json::array({std::move(j)})).dump(2)
      << '\n';
  return kExitOk;
}

// --------------------------------------------------------------- forbidden

int run_forbidden(const Options& opts, std::ostream& out, std::ostream& err) {
  Params params = build_params(opts);
  require_nonzero_q(params);
  if (opts.horizon < 0) throw ConfigError("--horizon must be nonnegative");
  const std::string format = pick_format(opts, "json", false);

  ForbiddenReport report = opts.system
                               ? forbidden_scan(params, build_system_initials(opts), opts.horizon)
                               : forbidden_scan(params, build_scalar_initials(opts), opts.horizon);

  if (format == "csv") {
    err << params_echo(params) << '\n';
    out << csv_row({"hit", "first_index", "which", "horizon", "note"});
    out << csv_row({report.hit ? "true" : "false", std::to_string(report.first_index),
                    to_string(report.which), std::to_string(report.horizon),
                    csv_field(report.note)});
  } else {
    Json run;
    run["system"] = opts.system;
    run["horizon"] = opts.horizon;
    Json item;
    item["hit"] = report.hit;
    item["first_index"] = report.first_index;
    item["which"] = to_string(report.which);
    item["horizon"] = report.horizon;
    item["note"] = report.note;
    out << document("forbidden", params, std::move(run), Json::array({std::move(item)})).dump(2)
        << '\n';
  }
  if (report.hit && opts.strict) return kExitForbidden;
  return kExitOk;
}

// ------------------------------------------------------------------- sweep

int run_sweep(const Options& opts, std::ostream& out, std::ostream&) {
  Params params = build_params(opts);
  pick_format(opts, "json", true);
  if (opts.threads < 1) throw ConfigError("--threads must be at least 1");
  SweepConfig config;
  config.n_trials = opts.trials;
  config.n_steps = default_steps(opts, 300);
  config.tolerance = opts.tolerance;
  config.seed = opts.seed;
  config.lo = opts.lo;
  config.hi = opts.hi;
  config.system = opts.system;
  config.threads = opts.threads;
  SweepReport report = attractor_sweep(params, config);

  // Thread count deliberately never appears here: the same configuration
  // must serialize identically however the trials were scheduled.
  Json run;
  run["n_trials"] = report.n_trials;
  run["n_steps"] = report.n_steps;
  run["tolerance"] = json_double(report.tolerance);
  run["seed"] = report.seed;
  run["lo"] = json_double(report.lo);
  run["hi"] = json_double(report.hi);
  run["system"] = report.system;
  Json data = Json::array();
  for (const SweepFailure& f : report.failures) {
    Json item;
    item["trial"] = f.trial;
    item["sub_seed"] = f.sub_seed;
    Json inits = Json::array();
    for (double v : f.initials) inits.push_back(json_double(v));
    item["initials"] = std::move(inits);
    item["final_error"] = json_double(f.final_error);
    item["termination"] = f.termination;
    data.push_back(std::move(item));
  }
  Json summary;
  summary["phi"] = json_double(report.phi);
  summary["converged_count"] = report.converged_count;
  summary["worst_final_error"] = json_double(report.worst_final_error);
  out << document("sweep", params, std::move(run), std::move(data), std::move(summary)).dump(2)
      << '\n';
  return kExitOk;
}

int dispatch(const Options& opts, std::ostream& out, std::ostream& err) {
  validate_common(opts);
  std::ostringstream buffer;
  int code;
  if (opts.command == "sequence") {
    code = run_sequence(opts, buffer, err);
  } else if (opts.command == "iterate") {
    code = run_iterate(opts, buffer, err);
  } else if (opts.command == "compare") {
    code = run_compare(opts, buffer, err);
  } else if (opts.command == "stability") {
    code = run_stability(opts, buffer, err);
  } else if (opts.command == "forbidden") {
    code = run_forbidden(opts, buffer, err);
  } else if (opts.command == "sweep") {
    code = run_sweep(opts, buffer, err);
  } else {
    throw ConfigError("unknown command: " + opts.command);
  }
  if (!opts.out_path.empty()) {
    std::ofstream file(opts.out_path, std::ios::binary);
    if (!file) throw ConfigError("cannot open output file: " + opts.out_path);
    file << buffer.str();
    if (!file) throw ConfigError("failed writing output file: " + opts.out_path);
  } else {
    out << buffer.str();
  }
  return code;
}

}  // namespace

int run(const Options& opts, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(opts, out, err);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }
}

}  // namespace padovan::cli
