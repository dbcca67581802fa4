#pragma once

#include "padovan/rational.hpp"

#include <string>
#include <variant>

namespace padovan {

enum class Backend { exact, floating };

const char* to_string(Backend b);

// A number tagged with the arithmetic it lives on. Arithmetic between two
// exact values stays exact; as soon as a floating operand enters, the result
// is an ordinary double. Dividing by an exact zero throws instead of
// manufacturing a NaN, so exact orbits can only fail loudly.
class Scalar {
 public:
  Scalar() : v_(Rational()) {}
  explicit Scalar(Rational r) : v_(std::move(r)) {}
  explicit Scalar(double d) : v_(d) {}

  bool is_exact() const { return v_.index() == 0; }
  Backend backend() const { return is_exact() ? Backend::exact : Backend::floating; }

  const Rational& rational() const;  // throws std::logic_error on a float value
  double to_double() const;
  bool is_zero() const;
  bool is_finite() const;

  // Exact values render as canonical "num/den"; floats with the given number
  // of significant digits.
  std::string to_string(int precision) const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);

 private:
  std::variant<Rational, double> v_;
};

// Significant-digit double formatting shared by every renderer ("%.Ng").
std::string format_double(double v, int precision);

}  // namespace padovan
