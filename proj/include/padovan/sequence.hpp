#pragma once

#include "padovan/cubic.hpp"
#include "padovan/params.hpp"
#include "padovan/rational.hpp"

#include <complex>
#include <vector>

namespace padovan {

// Seed values of the linear recurrence at indices -2, -1, 0. The default
// triple (0, 0, 1) forces S_1 = 0, S_2 = p, S_3 = q, which is exactly the
// shape the closed-form denominators are built from. Other conventions
// (Perrin 3,0,2; the all-ones classical seed) are expressed by placing their
// first three values here; the continuation values are the same, shifted.
struct SequenceInitials {
  Rational s_m2 = 0;
  Rational s_m1 = 0;
  Rational s_0 = 1;
};

// Exact cache of S_n for min_index() <= n <= n_max(). When q != 0 the
// sequence extends one step backwards via S_{n-2} = (S_{n+1} - p*S_{n-1})/q,
// giving S_{-3} = 1/q under the default seed; the closed forms need that
// term at n = -1.
class GenPadovanCache {
 public:
  GenPadovanCache(const Params& params, const SequenceInitials& init, int n_max);

  const Rational& at(int n) const;  // throws std::out_of_range outside the span
  int min_index() const { return min_index_; }
  int n_max() const { return n_max_; }
  const Params& params() const { return params_; }
  const SequenceInitials& initials() const { return init_; }

 private:
  Params params_;
  SequenceInitials init_;
  int min_index_;
  int n_max_;
  std::vector<Rational> values_;  // values_[i] = S_{min_index_ + i}
};

GenPadovanCache generate(const Params& params, int n_max,
                         const SequenceInitials& init = SequenceInitials{});

// Exact consecutive ratio S_{n+1}/S_n. Throws std::domain_error when
// S_n = 0, which the default seed hits at n = 1 and nowhere else for p,q > 0.
Rational ratio(const GenPadovanCache& cache, int n);

// Binet weights solved from the 3x3 Vandermonde system c_j * lambda_j^n = S_n
// at n = -2, -1, 0. Solved, never transcribed, so they are correct for
// whatever seed triple is passed in.
struct BinetCoefficients {
  std::complex<double> c_phi, c_varphi, c_varphi_conj;
};
BinetCoefficients binet_coefficients(const CubicRoots& roots,
                                     const SequenceInitials& init = SequenceInitials{});
double binet_eval(const CubicRoots& roots, const BinetCoefficients& coeff, int n);

// The circulating closed-form weights built from (lambda_k - 1) products:
//   w_j = prod_{k != j} (lambda_k - 1) / prod_{k != j} (lambda_j - lambda_k).
// These interpolate the solution that equals 1 at n = 0, 1, 2, not the
// (0,0,1) seed, so compare_paper_binet measures their deviation from the
// exact cache instead of assuming they agree.
struct PaperBinetWeights {
  std::complex<double> w_phi, w_varphi, w_varphi_conj;
};
PaperBinetWeights paper_binet_weights(const CubicRoots& roots);

struct PaperBinetReport {
  PaperBinetWeights weights;
  double max_abs_deviation = 0.0;
  int argmax_n = 0;
  int n_checked = 0;
  bool consistent = false;  // max deviation < 1e-6 * max |S_n|
};
PaperBinetReport compare_paper_binet(const GenPadovanCache& cache, const CubicRoots& roots,
                                     int n_max);

}  // namespace padovan
