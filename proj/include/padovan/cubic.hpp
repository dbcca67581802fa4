#pragma once

#include <complex>

namespace padovan {

// Roots of the characteristic cubic lambda^3 = p*lambda + q.
struct CubicRoots {
  double p = 0.0;
  double q = 0.0;
  double phi = 0.0;                  // the positive real root, dominant for p,q > 0
  std::complex<double> varphi;       // remaining pair; conjugates when the
  std::complex<double> varphi_conj;  // deflated quadratic has negative discriminant
};

// Positive-root solver for p, q > 0: bracketed bisection, Newton polish, and
// a final ulp scan. The returned phi leaves |phi^3 - p*phi - q| at a few ulp.
// The remaining pair comes from deflation: lambda^2 + phi*lambda + (phi^2 - p).
CubicRoots solve_characteristic_cubic(double p, double q);

namespace detail {
// Same solver without the p > 0 gate (q > 0 still required, so a positive
// root exists). Lets tests probe degenerate edges such as p = 0.
CubicRoots solve_cubic_core(double p, double q);
}  // namespace detail

// Radical route to phi: R = cbrt(108q + 12*sqrt(81q^2 - 12p^3)) and
// phi = (R^2 + 12p)/(6R). When the radicand goes negative (three real roots)
// the cube root is taken on the principal complex branch. Kept strictly as a
// cross-check of the iterative solver; the report records which branch ran
// and how far the formula value lands from the solver's root.
struct RFormulaReport {
  double radicand = 0.0;  // 81q^2 - 12p^3
  std::complex<double> R;
  std::complex<double> phi_formula;
  double residual = 0.0;        // |phi_formula - phi|
  bool complex_branch = false;  // radicand < 0, principal branch used
  bool consistent = false;      // residual <= 1e-6 * phi
};
RFormulaReport check_R_formula(double p, double q, const CubicRoots& roots);

}  // namespace padovan
