#include "incat/rational.hpp"

#include <cctype>

#include "incat/error.hpp"

namespace incat {

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw Error("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error("division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::parse(std::string_view text) {
  auto digits = [&](std::string_view s, std::size_t offset, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == s.size()) throw ParseError("expected digits", offset + i);
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw ParseError("expected digit", offset + i);
  };
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  digits(num, 0, true);
  mpz_class n(std::string(num[0] == '+' ? num.substr(1) : num));
  mpz_class d(1);
  if (slash != std::string_view::npos) {
    std::string_view den = text.substr(slash + 1);
    digits(den, slash + 1, false);
    d = mpz_class(std::string(den));
    if (d == 0) throw ParseError("zero denominator", slash + 1);
  }
  return Rational(mpq_class(n, d));
}

std::string Rational::to_string() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

}  // namespace incat
