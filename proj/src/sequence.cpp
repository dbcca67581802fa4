#include "padovan/sequence.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace padovan {

namespace {

using Complex = std::complex<double>;

Complex cpow_int(Complex base, int n) {
  if (n < 0) return 1.0 / cpow_int(base, -n);
  Complex result = 1.0;
  while (n > 0) {
    if (n & 1) result *= base;
    base *= base;
    n >>= 1;
  }
  return result;
}

// 3x3 complex linear solve with partial pivoting; plenty for the
// Vandermonde system in three distinct roots.
std::array<Complex, 3> solve3(std::array<std::array<Complex, 3>, 3> m,
                              std::array<Complex, 3> rhs) {
  for (int col = 0; col < 3; ++col) {
    int pivot = col;
    for (int r = col + 1; r < 3; ++r)
      if (std::abs(m[r][col]) > std::abs(m[pivot][col])) pivot = r;
    std::swap(m[col], m[pivot]);
    std::swap(rhs[col], rhs[pivot]);
    for (int r = col + 1; r < 3; ++r) {
      Complex factor = m[r][col] / m[col][col];
      for (int c = col; c < 3; ++c) m[r][c] -= factor * m[col][c];
      rhs[r] -= factor * rhs[col];
    }
  }
  std::array<Complex, 3> x;
  for (int r = 2; r >= 0; --r) {
    Complex acc = rhs[r];
    for (int c = r + 1; c < 3; ++c) acc -= m[r][c] * x[c];
    x[r] = acc / m[r][r];
  }
  return x;
}

}  // namespace

GenPadovanCache::GenPadovanCache(const Params& params, const SequenceInitials& init, int n_max)
    : params_(params), init_(init), n_max_(n_max) {
  if (n_max < 0) throw std::invalid_argument("generate: n_max must be >= 0");
  min_index_ = params.q.is_zero() ? -2 : -3;
  values_.reserve(static_cast<std::size_t>(n_max - min_index_) + 1);
  if (min_index_ == -3)
    values_.push_back((init.s_0 - params.p * init.s_m2) / params.q);  // S_{-3}
  values_.push_back(init.s_m2);
  values_.push_back(init.s_m1);
  values_.push_back(init.s_0);
  for (int n = 1; n <= n_max; ++n) {
    // S_n = p*S_{n-2} + q*S_{n-3}
    const Rational& a = values_[static_cast<std::size_t>(n - 2 - min_index_)];
    const Rational& b = values_[static_cast<std::size_t>(n - 3 - min_index_)];
    values_.push_back(params.p * a + params.q * b);
  }
}

const Rational& GenPadovanCache::at(int n) const {
  if (n < min_index_ || n > n_max_)
    throw std::out_of_range("sequence cache index " + std::to_string(n) + " outside [" +
                            std::to_string(min_index_) + ", " + std::to_string(n_max_) + "]");
  return values_[static_cast<std::size_t>(n - min_index_)];
}

GenPadovanCache generate(const Params& params, int n_max, const SequenceInitials& init) {
  return GenPadovanCache(params, init, n_max);
}

Rational ratio(const GenPadovanCache& cache, int n) {
  const Rational& den = cache.at(n);
  if (den.is_zero())
    throw std::domain_error("ratio undefined: S_" + std::to_string(n) + " = 0");
  return cache.at(n + 1) / den;
}

BinetCoefficients binet_coefficients(const CubicRoots& roots, const SequenceInitials& init) {
  const std::array<Complex, 3> lambda = {Complex(roots.phi, 0.0), roots.varphi,
                                         roots.varphi_conj};
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (std::abs(lambda[i] - lambda[j]) <= 1e-9)
        throw std::domain_error(
            "binet_coefficients: near-repeated roots make the system ill-conditioned");

  std::array<std::array<Complex, 3>, 3> m;
  std::array<Complex, 3> rhs = {Complex(init.s_m2.to_double(), 0.0),
                                Complex(init.s_m1.to_double(), 0.0),
                                Complex(init.s_0.to_double(), 0.0)};
  for (int row = 0; row < 3; ++row)
    for (int col = 0; col < 3; ++col) m[row][col] = cpow_int(lambda[col], row - 2);

  auto c = solve3(m, rhs);
  return BinetCoefficients{c[0], c[1], c[2]};
}

double binet_eval(const CubicRoots& roots, const BinetCoefficients& coeff, int n) {
  Complex value = coeff.c_phi * cpow_int(Complex(roots.phi, 0.0), n) +
                  coeff.c_varphi * cpow_int(roots.varphi, n) +
                  coeff.c_varphi_conj * cpow_int(roots.varphi_conj, n);
  return value.real();
}

PaperBinetWeights paper_binet_weights(const CubicRoots& roots) {
  const Complex phi(roots.phi, 0.0);
  const Complex vp = roots.varphi;
  const Complex vc = roots.varphi_conj;
  PaperBinetWeights w;
  w.w_phi = (vp - 1.0) * (vc - 1.0) / ((phi - vp) * (phi - vc));
  w.w_varphi = (phi - 1.0) * (vc - 1.0) / ((vp - phi) * (vp - vc));
  w.w_varphi_conj = (phi - 1.0) * (vp - 1.0) / ((phi - vc) * (vp - vc));
  return w;
}

PaperBinetReport compare_paper_binet(const GenPadovanCache& cache, const CubicRoots& roots,
                                     int n_max) {
  PaperBinetReport rep;
  rep.weights = paper_binet_weights(roots);
  rep.n_checked = n_max + 1;
  double max_abs_value = 0.0;
  for (int n = 0; n <= n_max; ++n) {
    Complex rec = rep.weights.w_phi * cpow_int(Complex(roots.phi, 0.0), n) +
                  rep.weights.w_varphi * cpow_int(roots.varphi, n) +
                  rep.weights.w_varphi_conj * cpow_int(roots.varphi_conj, n);
    double exact = cache.at(n).to_double();
    double dev = std::abs(rec.real() - exact);
    max_abs_value = std::max(max_abs_value, std::abs(exact));
    if (dev > rep.max_abs_deviation) {
      rep.max_abs_deviation = dev;
      rep.argmax_n = n;
    }
  }
  rep.consistent = rep.max_abs_deviation < 1e-6 * std::max(1.0, max_abs_value);
  return rep;
}

}  // namespace padovan
