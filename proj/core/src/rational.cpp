#include "eulercg/rational.hpp"

#include "eulercg/errors.hpp"

namespace ecg {

Rational make_rational(const std::string& num, const std::string& den) {
  Integer n, d;
  if (n.set_str(num, 10) != 0 || d.set_str(den, 10) != 0)
    throw ParseError("bad rational: " + num + "/" + den);
  if (d == 0) throw ParseError("zero denominator");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string rational_to_string(const Rational& q) { return q.get_str(); }
std::string numerator_string(const Rational& q) {
  return q.get_num().get_str();
}
std::string denominator_string(const Rational& q) {
  return q.get_den().get_str();
}

}  // namespace ecg
