#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace padovan {

// Exact rational number with value semantics. Thin wrapper over GMP's
// mpq_class kept in canonical form (lowest terms, positive denominator), so
// equality is plain equality and to_string() output is stable. All parsing
// and rendering of rationals lives here; nothing else touches GMP directly.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // implicit by design: Rational r = 3
  Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_.canonicalize();
  }
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  // Exact value of a finite double via its binary expansion. No decimal
  // rounding is involved: from_double(0.1) is 3602879701896397/2^55.
  static Rational from_double(double d);

  // Accepts integers ("7", "-3"), fractions ("85/12") and decimal or
  // scientific literals ("0.2", "1.25e-3"). Decimal text becomes the exact
  // decimal value, so "0.2" parses to 1/5, not to the nearest double.
  static Rational parse(std::string_view text);

  double to_double() const;  // correctly rounded to nearest, ties to even
  std::string to_string() const;             // "num/den", or "num" if integral
  std::string to_decimal(int digits) const;  // fixed point, half away from zero

  bool is_zero() const { return mpq_sgn(v_.get_mpq_t()) == 0; }
  int sign() const { return mpq_sgn(v_.get_mpq_t()); }
  bool is_integer() const { return v_.get_den() == 1; }
  Rational abs() const { return sign() < 0 ? -*this : *this; }

  const mpq_class& raw() const { return v_; }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by exact zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t()) < 0;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

 private:
  mpq_class v_;
};

}  // namespace padovan
