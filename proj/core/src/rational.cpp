#include "feitlab/rational.hpp"

#include <stdexcept>

namespace feitlab {

std::string to_string(const Rational& q) {
  return q.get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  auto valid_int = [](const std::string& part) {
    std::size_t i = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
    if (i >= part.size()) return false;
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') return false;
    return true;
  };
  if (slash == std::string::npos) {
    if (!valid_int(s)) throw std::invalid_argument("not a rational: '" + s + "'");
    return Rational(mpz_class(s[0] == '+' ? s.substr(1) : s));
  }
  std::string num = s.substr(0, slash), den = s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    throw std::invalid_argument("not a rational: '" + s + "'");
  mpz_class d(den);
  if (d == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
  Rational q(mpz_class(num[0] == '+' ? num.substr(1) : num), d);
  q.canonicalize();
  return q;
}

Rational ratio(Int n, Int d) {
  if (d == 0) throw std::domain_error("zero denominator");
  Rational q(mpz_class(static_cast<long>(n)), mpz_class(static_cast<long>(d)));
  q.canonicalize();
  return q;
}

bool is_integer(const Rational& q) {
  return q.get_den() == 1;
}

Int to_int(const Rational& q) {
  if (!is_integer(q)) throw std::domain_error("rational " + q.get_str() + " is not an integer");
  const mpz_class& n = q.get_num();
  if (!n.fits_slong_p()) throw std::domain_error("integer " + n.get_str() + " exceeds 64 bits");
  return static_cast<Int>(n.get_si());
}

}  // namespace feitlab
