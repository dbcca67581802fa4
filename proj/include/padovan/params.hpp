#pragma once

#include "padovan/rational.hpp"

#include <stdexcept>

namespace padovan {

// Coefficients of x_{n+1} = (beta*x_{n-1} + alpha) / (gamma*x_n*x_{n-1}),
// together with the reduced pair p = beta/gamma, q = alpha/gamma that all
// formulas downstream consume. Both forms are kept so output can echo them.
struct Params {
  Rational alpha, beta, gamma;
  Rational p, q;

  static Params from_alpha_beta_gamma(const Rational& alpha, const Rational& beta,
                                      const Rational& gamma) {
    if (gamma.is_zero()) throw std::invalid_argument("gamma must be nonzero");
    return Params{alpha, beta, gamma, beta / gamma, alpha / gamma};
  }

  static Params from_pq(const Rational& p, const Rational& q) {
    return Params{q, p, Rational(1), p, q};
  }

  bool positive_pq() const { return p.sign() > 0 && q.sign() > 0; }
  double p_d() const { return p.to_double(); }
  double q_d() const { return q.to_double(); }
};

}  // namespace padovan
