#include "bigm1/rational.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

namespace bigm1 {

namespace {

bool AllDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

Rational PowerOfTen(long e) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(e < 0 ? -e : e));
  if (e >= 0) return Rational(p);
  return Rational(mpz_class(1), p);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto bad = [&] { return std::invalid_argument("not a rational number: '" + std::string(text) + "'"); };
  if (text.empty()) throw bad();

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    std::string_view num_digits = (!num.empty() && (num[0] == '-' || num[0] == '+')) ? num.substr(1) : num;
    if (!AllDigits(num_digits) || !AllDigits(den)) throw bad();
    mpz_class d(std::string(den), 10);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    mpz_class n(std::string(num[0] == '+' ? num.substr(1) : num), 10);
    Rational q(n, d);
    q.canonicalize();
    return q;
  }

  // Decimal with optional exponent.
  std::string_view s = text;
  bool negative = false;
  if (s[0] == '-' || s[0] == '+') {
    negative = s[0] == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_part = s.substr(e + 1);
    bool exp_negative = false;
    if (!exp_part.empty() && (exp_part[0] == '-' || exp_part[0] == '+')) {
      exp_negative = exp_part[0] == '-';
      exp_part.remove_prefix(1);
    }
    if (!AllDigits(exp_part) || exp_part.size() > 6) throw bad();
    exponent = std::stol(std::string(exp_part));
    if (exp_negative) exponent = -exponent;
    s = s.substr(0, e);
  }
  std::string digits;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !AllDigits(whole)) || (!frac.empty() && !AllDigits(frac)))
      throw bad();
    digits = std::string(whole) + std::string(frac);
    exponent -= static_cast<long>(frac.size());
  } else {
    if (!AllDigits(s)) throw bad();
    digits = std::string(s);
  }
  Rational q{mpz_class(digits, 10)};
  q *= PowerOfTen(exponent);
  if (negative) q = -q;
  return q;
}

}  // namespace bigm1
