#include "padovan/rational.hpp"

#include <bit>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <limits>

namespace padovan {

namespace {

// Strict base-10 integer parse. mpz_set_str is lenient about whitespace, so
// validate the characters ourselves first.
mpz_class parse_integer(const std::string& text, const std::string& context) {
  std::size_t start = 0;
  if (start < text.size() && (text[start] == '+' || text[start] == '-')) ++start;
  if (start == text.size())
    throw std::invalid_argument("invalid " + context + ": '" + text + "'");
  for (std::size_t i = start; i < text.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw std::invalid_argument("invalid " + context + ": '" + text + "'");
  mpz_class z;
  if (mpz_set_str(z.get_mpz_t(), text.c_str(), 10) != 0)
    throw std::invalid_argument("invalid " + context + ": '" + text + "'");
  return z;
}

mpz_class pow10(unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

}  // namespace

Rational Rational::from_double(double d) {
  if (!std::isfinite(d))
    throw std::invalid_argument("Rational::from_double: value is not finite");
  return Rational(mpq_class(d));
}

double Rational::to_double() const {
  // mpq_get_d truncates toward zero, which puts values like 2/5 one ulp away
  // from the double a decimal literal produces. Truncation is under one ulp,
  // so the correctly rounded result is either that value or its neighbour
  // away from zero; the exact comparison below picks it, ties to even.
  double g = v_.get_d();
  if (!std::isfinite(g) || is_zero()) return g;
  double away = sign() > 0 ? std::numeric_limits<double>::infinity()
                           : -std::numeric_limits<double>::infinity();
  double h = std::nextafter(g, away);
  if (!std::isfinite(h)) return g;
  mpq_class gap_g = ::abs(v_ - mpq_class(g));
  mpq_class gap_h = ::abs(mpq_class(h) - v_);
  if (gap_g < gap_h) return g;
  if (gap_h < gap_g) return h;
  return (std::bit_cast<std::uint64_t>(g) & 1ull) == 0 ? g : h;
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty numeric literal");

  auto slash = s.find('/');
  if (slash != std::string::npos) {
    mpz_class num = parse_integer(s.substr(0, slash), "numerator");
    mpz_class den = parse_integer(s.substr(slash + 1), "denominator");
    if (den == 0)
      throw std::invalid_argument("zero denominator in rational literal: '" + s + "'");
    mpq_class v(num, den);
    v.canonicalize();
    return Rational(std::move(v));
  }

  // Decimal or scientific literal. Split off a base-10 exponent, then the
  // fractional part; the value is digits * 10^(exponent - fraction length).
  long exp10 = 0;
  std::string mant = s;
  auto epos = s.find_first_of("eE");
  if (epos != std::string::npos) {
    mant = s.substr(0, epos);
    mpz_class e = parse_integer(s.substr(epos + 1), "exponent");
    if (!e.fits_slong_p() || std::abs(e.get_si()) > 100000)
      throw std::invalid_argument("exponent out of range: '" + s + "'");
    exp10 = e.get_si();
  }

  bool negative = false;
  std::size_t start = 0;
  if (start < mant.size() && (mant[start] == '+' || mant[start] == '-')) {
    negative = mant[start] == '-';
    ++start;
  }
  std::string digits;
  long frac_len = 0;
  bool seen_point = false;
  for (std::size_t i = start; i < mant.size(); ++i) {
    char c = mant[i];
    if (c == '.') {
      if (seen_point) throw std::invalid_argument("invalid numeric literal: '" + s + "'");
      seen_point = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      if (seen_point) ++frac_len;
    } else {
      throw std::invalid_argument("invalid numeric literal: '" + s + "'");
    }
  }
  if (digits.empty()) throw std::invalid_argument("invalid numeric literal: '" + s + "'");

  mpz_class num = parse_integer(digits, "mantissa");
  long e = exp10 - frac_len;
  mpq_class v;
  if (e >= 0)
    v = mpq_class(num * pow10(static_cast<unsigned long>(e)), 1);
  else
    v = mpq_class(num, pow10(static_cast<unsigned long>(-e)));
  v.canonicalize();
  if (negative) v = -v;
  return Rational(std::move(v));
}

std::string Rational::to_string() const {
  return v_.get_str();
}

std::string Rational::to_decimal(int digits) const {
  if (digits < 0) throw std::invalid_argument("to_decimal: negative digit count");
  mpz_class num = v_.get_num();
  mpz_class den = v_.get_den();
  bool negative = num < 0;
  if (negative) num = -num;

  // Round |num|*10^digits / den half away from zero:
  // floor(x + 1/2) computed as (2*num*scale + den) / (2*den).
  mpz_class scale = pow10(static_cast<unsigned long>(digits));
  mpz_class scaled = (2 * num * scale + den) / (2 * den);

  mpz_class ip = scaled / scale;
  mpz_class fp = scaled % scale;
  std::string out = ip.get_str();
  if (digits > 0) {
    std::string frac = fp.get_str();
    out += "." + std::string(static_cast<std::size_t>(digits) - frac.size(), '0') + frac;
  }
  if (negative && scaled != 0) out.insert(out.begin(), '-');
  return out;
}

}  // namespace padovan
