#include "padovan/cubic.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace padovan {

namespace {

double cubic_value(double p, double q, double x) {
  return (x * x - p) * x - q;
}

}  // namespace

namespace detail {

CubicRoots solve_cubic_core(double p, double q) {
  if (!(q > 0.0) || !(p >= 0.0) || !std::isfinite(p) || !std::isfinite(q))
    throw std::domain_error("cubic solver requires finite p >= 0 and q > 0");

  // f(x) = x^3 - p*x - q is -q at the origin and increasing past sqrt(p/3),
  // so the positive root is the only sign change right of zero.
  double lo = 1.0 / std::max(1.0, q);
  double hi = 1.0 + p + q;
  // The convenient lower endpoint overshoots the root when p + q < 1 (the
  // root drops below 1 there); fall back to the origin in that case.
  if (cubic_value(p, q, lo) > 0.0) lo = 0.0;

  double x;
  if (cubic_value(p, q, lo) == 0.0) {
    x = lo;
  } else if (cubic_value(p, q, hi) == 0.0) {
    x = hi;
  } else {
    double flo = cubic_value(p, q, lo);
    for (int it = 0; it < 200 && hi - lo > 1e-16 * hi; ++it) {
      double mid = 0.5 * (lo + hi);
      double fm = cubic_value(p, q, mid);
      if (fm == 0.0) {
        lo = hi = mid;
        break;
      }
      if ((fm < 0.0) == (flo < 0.0)) {
        lo = mid;
        flo = fm;
      } else {
        hi = mid;
      }
    }
    x = 0.5 * (lo + hi);
    for (int it = 0; it < 60; ++it) {
      double fx = cubic_value(p, q, x);
      double dfx = 3.0 * x * x - p;
      if (fx == 0.0 || dfx == 0.0) break;
      double next = x - fx / dfx;
      if (!(next > 0.0) || !std::isfinite(next)) break;
      bool done = std::abs(next - x) <= std::numeric_limits<double>::epsilon() * std::abs(x);
      x = next;
      if (done) break;
    }
  }

  // Ulp scan around the Newton result; keep whichever neighbour minimises |f|.
  double best = x;
  double best_f = std::abs(cubic_value(p, q, x));
  double down = x, up = x;
  for (int i = 0; i < 2; ++i) {
    down = std::nextafter(down, 0.0);
    up = std::nextafter(up, std::numeric_limits<double>::infinity());
    for (double cand : {down, up}) {
      double f = std::abs(cubic_value(p, q, cand));
      if (f < best_f) {
        best = cand;
        best_f = f;
      }
    }
  }

  CubicRoots roots;
  roots.p = p;
  roots.q = q;
  roots.phi = best;

  double b = best;
  double c = best * best - p;
  double disc = b * b - 4.0 * c;
  if (disc >= 0.0) {
    double s = std::sqrt(disc);
    roots.varphi = std::complex<double>((-b + s) / 2.0, 0.0);
    roots.varphi_conj = std::complex<double>((-b - s) / 2.0, 0.0);
  } else {
    roots.varphi = std::complex<double>(-b / 2.0, std::sqrt(-disc) / 2.0);
    roots.varphi_conj = std::conj(roots.varphi);
  }
  return roots;
}

}  // namespace detail

CubicRoots solve_characteristic_cubic(double p, double q) {
  if (!(p > 0.0) || !(q > 0.0))
    throw std::domain_error("characteristic cubic requires p > 0 and q > 0");
  return detail::solve_cubic_core(p, q);
}

RFormulaReport check_R_formula(double p, double q, const CubicRoots& roots) {
  RFormulaReport rep;
  rep.radicand = 81.0 * q * q - 12.0 * p * p * p;
  std::complex<double> inner =
      108.0 * q + 12.0 * std::sqrt(std::complex<double>(rep.radicand, 0.0));
  rep.R = std::pow(inner, 1.0 / 3.0);
  rep.phi_formula = (rep.R * rep.R + 12.0 * p) / (6.0 * rep.R);
  rep.residual = std::abs(rep.phi_formula - std::complex<double>(roots.phi, 0.0));
  rep.complex_branch = rep.radicand < 0.0;
  rep.consistent = rep.residual <= 1e-6 * roots.phi;
  return rep;
}

}  // namespace padovan
