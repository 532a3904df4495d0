#include "nwsteiner/rational.hpp"

#include <cctype>

namespace nwsteiner {

namespace {

bool isDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Rational parseDecimal(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp = s.substr(e + 1);
    bool expNegative = false;
    if (!exp.empty() && (exp.front() == '-' || exp.front() == '+')) {
      expNegative = exp.front() == '-';
      exp.remove_prefix(1);
    }
    if (!isDigits(exp) || exp.size() > 6) throw ParseError("bad exponent in '" + std::string(text) + "'");
    exponent = std::stol(std::string(exp));
    if (expNegative) exponent = -exponent;
    s = s.substr(0, e);
  }
  std::string digits;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view intPart = s.substr(0, dot);
    std::string_view fracPart = s.substr(dot + 1);
    if ((!intPart.empty() && !isDigits(intPart)) || (!fracPart.empty() && !isDigits(fracPart)) ||
        (intPart.empty() && fracPart.empty())) {
      throw ParseError("bad number '" + std::string(text) + "'");
    }
    digits = std::string(intPart) + std::string(fracPart);
    exponent -= static_cast<long>(fracPart.size());
  } else {
    if (!isDigits(s)) throw ParseError("bad number '" + std::string(text) + "'");
    digits = std::string(s);
  }
  mpz_class numerator(digits, 10);
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  Rational result = exponent < 0 ? Rational(numerator, scale) : Rational(numerator * scale);
  result.canonicalize();
  return negative ? Rational(-result) : result;
}

}  // namespace

Rational parseRational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty rational");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Rational num = parseDecimal(text.substr(0, slash));
    Rational den = parseDecimal(text.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    Rational r = num / den;
    r.canonicalize();
    return r;
  }
  return parseDecimal(text);
}

std::string toString(const Rational& value) {
  Rational v = value;
  v.canonicalize();
  return v.get_str();
}

Rational harmonic(std::size_t n) {
  Rational h = 0;
  for (std::size_t i = 1; i <= n; ++i) h += Rational(1, static_cast<unsigned long>(i));
  h.canonicalize();
  return h;
}

std::string toString(const Distance& d) { return d.isFinite() ? toString(d.value()) : std::string("inf"); }

}  // namespace nwsteiner
