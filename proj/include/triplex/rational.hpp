#pragma once

#include <gmpxx.h>

#include <Eigen/Core>

#include <stdexcept>
#include <string>

namespace triplex {

/// Exact rational scalar. Every computation in this library runs over this
/// field; there is no floating point anywhere.
using Rational = mpq_class;

/// Parses "p" or "p/q" (arbitrary precision, optional sign) into lowest terms
/// with a positive denominator. Throws std::invalid_argument on malformed
/// input or a zero denominator.
Rational parse_rational(const std::string& s);

/// Canonical text form: "p" when the denominator is 1, otherwise "p/q".
std::string rational_str(const Rational& r);

bool is_integer(const Rational& r);

}  // namespace triplex

// Eigen glue for the exact scalar: zero tolerances, nothing approximate.
namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  using Real = mpq_class;
  using NonInteger = mpq_class;
  using Nested = mpq_class;

  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }

  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 8,
    MulCost = 16,
  };
};

}  // namespace Eigen
