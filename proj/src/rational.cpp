#include "polydc/rational.hpp"

#include <stdexcept>

namespace polydc {

Rational rat(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  auto bad = [&] { return std::invalid_argument("bad rational literal: '" + text + "'"); };

  auto digits_only = [](const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };

  std::string body = text;
  bool negative = false;
  if (body[0] == '+' || body[0] == '-') {
    negative = body[0] == '-';
    body = body.substr(1);
  }

  Rational value;
  auto slash = body.find('/');
  auto point = body.find('.');
  if (slash != std::string::npos) {
    std::string num = body.substr(0, slash);
    std::string den = body.substr(slash + 1);
    if (!digits_only(num) || !digits_only(den)) throw bad();
    mpz_class n(num), d(den);
    if (d == 0) throw bad();
    value = Rational(n, d);
    value.canonicalize();
  } else if (point != std::string::npos) {
    std::string whole = body.substr(0, point);
    std::string frac = body.substr(point + 1);
    if (whole.empty()) whole = "0";
    if (!digits_only(whole) || (!frac.empty() && !digits_only(frac))) throw bad();
    mpz_class n(whole);
    mpz_class scale = 1;
    for (char c : frac) {
      n = n * 10 + (c - '0');
      scale *= 10;
    }
    value = Rational(n, scale);
    value.canonicalize();
  } else {
    if (!digits_only(body)) throw bad();
    value = Rational(mpz_class(body));
  }
  if (negative) value = -value;
  return value;
}

std::string format_rational(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string format_ext(const ExtValue& v) {
  return v ? format_rational(*v) : "inf";
}

}  // namespace polydc
