#include "padovan/closed_form.hpp"

#include <string>

namespace padovan {

const char* to_string(ForbiddenSet s) {
  switch (s) {
    case ForbiddenSet::none: return "none";
    case ForbiddenSet::F: return "F";
    case ForbiddenSet::F1: return "F1";
    case ForbiddenSet::F2: return "F2";
  }
  return "none";
}

namespace {

std::string forbidden_message(ForbiddenSet which, int index) {
  return std::string("initial values lie in forbidden set ") + to_string(which) +
         ": denominator vanishes at index " + std::to_string(index);
}

}  // namespace

ForbiddenInitialsError::ForbiddenInitialsError(ForbiddenSet which, int index)
    : std::domain_error(forbidden_message(which, index)), which_(which), index_(index) {}

Rational scalar_denominator(const GenPadovanCache& cache, const ScalarInitials& inits, int n) {
  // D_n = S_n*x_{-1} + S_{n-1}*x_0*x_{-1} + q*S_{n-2}. At n = -1 only the
  // last term survives and q*S_{-3} = 1, so D_{-1} = 1 for every admissible
  // parameter choice.
  return cache.at(n) * inits.x_m1 + cache.at(n - 1) * inits.x_0 * inits.x_m1 +
         cache.params().q * cache.at(n - 2);
}

Rational system_denominator_a(const GenPadovanCache& cache, const SystemInitials& inits, int n) {
  return cache.at(n) * inits.x_m1 + cache.at(n - 1) * inits.y_0 * inits.x_m1 +
         cache.params().q * cache.at(n - 2);
}

Rational system_denominator_b(const GenPadovanCache& cache, const SystemInitials& inits, int n) {
  return cache.at(n) * inits.y_m1 + cache.at(n - 1) * inits.x_0 * inits.y_m1 +
         cache.params().q * cache.at(n - 2);
}

Rational x_closed(const GenPadovanCache& cache, const ScalarInitials& inits, int n) {
  if (n < -1) throw std::invalid_argument("x_closed: index must be at least -1");
  // The ratio D_{n+1}/D_n only telescopes back to x_n when no intermediate
  // denominator vanishes, so scan the whole prefix before dividing.
  for (int k = 0; k <= n; ++k) {
    if (scalar_denominator(cache, inits, k).is_zero())
      throw ForbiddenInitialsError(ForbiddenSet::F, k);
  }
  return scalar_denominator(cache, inits, n + 1) / scalar_denominator(cache, inits, n);
}

Rational x_closed(const Params& params, const ScalarInitials& inits, int n) {
  if (n < -1) throw std::invalid_argument("x_closed: index must be at least -1");
  GenPadovanCache cache = generate(params, n + 1 > 0 ? n + 1 : 0);
  return x_closed(cache, inits, n);
}

std::pair<Rational, Rational> system_closed(const GenPadovanCache& cache,
                                            const SystemInitials& inits, int n) {
  if (n < -1) throw std::invalid_argument("system_closed: index must be at least -1");
  for (int k = 0; k <= n; ++k) {
    if (system_denominator_a(cache, inits, k).is_zero())
      throw ForbiddenInitialsError(ForbiddenSet::F1, k);
    if (system_denominator_b(cache, inits, k).is_zero())
      throw ForbiddenInitialsError(ForbiddenSet::F2, k);
  }
  // Terms of the interleaved orbits alternate between the two denominator
  // families: even x_n (and odd y_n) come from the (y_{-1}, x_0) family,
  // odd x_n (and even y_n) from the (x_{-1}, y_0) family.
  Rational from_a = system_denominator_a(cache, inits, n + 1) / system_denominator_a(cache, inits, n);
  Rational from_b = system_denominator_b(cache, inits, n + 1) / system_denominator_b(cache, inits, n);
  if (n % 2 == 0) return {from_b, from_a};
  return {from_a, from_b};
}

std::pair<Rational, Rational> system_closed(const Params& params, const SystemInitials& inits,
                                            int n) {
  if (n < -1) throw std::invalid_argument("system_closed: index must be at least -1");
  GenPadovanCache cache = generate(params, n + 1 > 0 ? n + 1 : 0);
  return system_closed(cache, inits, n);
}

namespace {

std::string clean_note(int horizon) {
  return "no vanishing denominator for any index up to " + std::to_string(horizon) +
         "; indices beyond the horizon are not certified";
}

std::string hit_note(ForbiddenSet which, int index) {
  return std::string("denominator family ") + to_string(which) + " first vanishes at index " +
         std::to_string(index);
}

}  // namespace

ForbiddenReport forbidden_scan(const Params& params, const ScalarInitials& inits, int horizon) {
  if (horizon < 0) throw std::invalid_argument("forbidden_scan: horizon must be nonnegative");
  GenPadovanCache cache = generate(params, horizon + 1);
  ForbiddenReport report;
  report.horizon = horizon;
  for (int n = -1; n <= horizon; ++n) {
    if (scalar_denominator(cache, inits, n).is_zero()) {
      report.hit = true;
      report.first_index = n;
      report.which = ForbiddenSet::F;
      report.note = hit_note(report.which, n);
      return report;
    }
  }
  report.note = clean_note(horizon);
  return report;
}

ForbiddenReport forbidden_scan(const Params& params, const SystemInitials& inits, int horizon) {
  if (horizon < 0) throw std::invalid_argument("forbidden_scan: horizon must be nonnegative");
  GenPadovanCache cache = generate(params, horizon + 1);
  ForbiddenReport report;
  report.horizon = horizon;
  for (int n = -1; n <= horizon; ++n) {
    // Check the (x_{-1}, y_0) family first so a simultaneous zero is
    // attributed to F1.
    if (system_denominator_a(cache, inits, n).is_zero()) {
      report.hit = true;
      report.first_index = n;
      report.which = ForbiddenSet::F1;
      report.note = hit_note(report.which, n);
      return report;
    }
    if (system_denominator_b(cache, inits, n).is_zero()) {
      report.hit = true;
      report.first_index = n;
      report.which = ForbiddenSet::F2;
      report.note = hit_note(report.which, n);
      return report;
    }
  }
  report.note = clean_note(horizon);
  return report;
}

}  // namespace padovan
