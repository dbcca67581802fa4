#pragma once

#include "padovan/params.hpp"
#include "padovan/rational.hpp"
#include "padovan/sequence.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace padovan {

// Closed-form machinery: the orbit term is the telescoping ratio of the
// denominator family D_n = S_n*x_{-1} + S_{n-1}*x_0*x_{-1} + q*S_{n-2}, so
// zeros of D are exactly the initial data for which the orbit breaks down.

struct ScalarInitials {
  Rational x_m1, x_0;
  ScalarInitials(Rational x_m1_, Rational x_0_)
      : x_m1(std::move(x_m1_)), x_0(std::move(x_0_)) {
    if (x_m1.is_zero() || x_0.is_zero())
      throw std::invalid_argument("initial values x_{-1} and x_0 must be nonzero");
  }
};

struct SystemInitials {
  Rational x_m1, x_0, y_m1, y_0;
  SystemInitials(Rational x_m1_, Rational x_0_, Rational y_m1_, Rational y_0_)
      : x_m1(std::move(x_m1_)), x_0(std::move(x_0_)), y_m1(std::move(y_m1_)),
        y_0(std::move(y_0_)) {
    if (x_m1.is_zero() || x_0.is_zero() || y_m1.is_zero() || y_0.is_zero())
      throw std::invalid_argument("all four initial values must be nonzero");
  }
};

enum class ForbiddenSet { none, F, F1, F2 };
const char* to_string(ForbiddenSet s);

// Raised when a closed-form evaluation meets a vanishing denominator, i.e.
// the initial data lies in the forbidden set. Carries the first index where
// a denominator family vanishes and which family it was.
class ForbiddenInitialsError : public std::domain_error {
 public:
  ForbiddenInitialsError(ForbiddenSet which, int index);
  ForbiddenSet which() const { return which_; }
  int index() const { return index_; }

 private:
  ForbiddenSet which_;
  int index_;
};

struct ForbiddenReport {
  bool hit = false;
  int first_index = -1;
  ForbiddenSet which = ForbiddenSet::none;
  int horizon = 0;
  // The scan is exact but finite: a clean pass certifies nothing beyond the
  // horizon, and the note says so.
  std::string note;
};

// D_n for the scalar equation (family F).
Rational scalar_denominator(const GenPadovanCache& cache, const ScalarInitials& inits, int n);
// System family seeded by (x_{-1}, y_0) (set F1) ...
Rational system_denominator_a(const GenPadovanCache& cache, const SystemInitials& inits, int n);
// ... and the mirror family seeded by (y_{-1}, x_0) (set F2).
Rational system_denominator_b(const GenPadovanCache& cache, const SystemInitials& inits, int n);

// x_n = D_{n+1}/D_n, after checking that no D_k with k <= n vanishes.
// The cache must cover [-3, n+1].
Rational x_closed(const GenPadovanCache& cache, const ScalarInitials& inits, int n);
Rational x_closed(const Params& params, const ScalarInitials& inits, int n);

// (x_n, y_n) for the symmetric system: even n takes x from the (y_{-1}, x_0)
// family and y from the (x_{-1}, y_0) family; odd n swaps the pairings.
std::pair<Rational, Rational> system_closed(const GenPadovanCache& cache,
                                            const SystemInitials& inits, int n);
std::pair<Rational, Rational> system_closed(const Params& params, const SystemInitials& inits,
                                            int n);

inline constexpr int kDefaultForbiddenHorizon = 1000;

ForbiddenReport forbidden_scan(const Params& params, const ScalarInitials& inits,
                               int horizon = kDefaultForbiddenHorizon);
ForbiddenReport forbidden_scan(const Params& params, const SystemInitials& inits,
                               int horizon = kDefaultForbiddenHorizon);

}  // namespace padovan
