#include "padovan/scalar.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace padovan {

const char* to_string(Backend b) {
  return b == Backend::exact ? "exact" : "float";
}

const Rational& Scalar::rational() const {
  if (!is_exact()) throw std::logic_error("Scalar: float value has no exact representation");
  return std::get<Rational>(v_);
}

double Scalar::to_double() const {
  return is_exact() ? std::get<Rational>(v_).to_double() : std::get<double>(v_);
}

bool Scalar::is_zero() const {
  return is_exact() ? std::get<Rational>(v_).is_zero() : std::get<double>(v_) == 0.0;
}

bool Scalar::is_finite() const {
  return is_exact() || std::isfinite(std::get<double>(v_));
}

std::string Scalar::to_string(int precision) const {
  return is_exact() ? std::get<Rational>(v_).to_string()
                    : format_double(std::get<double>(v_), precision);
}

namespace {

template <typename ExactOp, typename FloatOp>
Scalar combine(const Scalar& a, const Scalar& b, ExactOp exact_op, FloatOp float_op) {
  if (a.is_exact() && b.is_exact()) return Scalar(exact_op(a.rational(), b.rational()));
  return Scalar(float_op(a.to_double(), b.to_double()));
}

}  // namespace

Scalar operator+(const Scalar& a, const Scalar& b) {
  return combine(a, b, [](const Rational& x, const Rational& y) { return x + y; },
                 [](double x, double y) { return x + y; });
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  return combine(a, b, [](const Rational& x, const Rational& y) { return x - y; },
                 [](double x, double y) { return x - y; });
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  return combine(a, b, [](const Rational& x, const Rational& y) { return x * y; },
                 [](double x, double y) { return x * y; });
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  return combine(a, b, [](const Rational& x, const Rational& y) { return x / y; },
                 [](double x, double y) { return x / y; });
}

std::string format_double(double v, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", precision, v);
  return buf;
}

}  // namespace padovan
