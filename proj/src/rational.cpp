#include "triplex/rational.hpp"

namespace triplex {

Rational parse_rational(const std::string& s) {
  mpq_class q;
  try {
    q = mpq_class(s, 10);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("not a rational: '" + s + "'");
  }
  if (q.get_den() == 0) {
    throw std::invalid_argument("zero denominator: '" + s + "'");
  }
  q.canonicalize();
  return q;
}

std::string rational_str(const Rational& r) { return r.get_str(); }

bool is_integer(const Rational& r) { return r.get_den() == 1; }

}  // namespace triplex
