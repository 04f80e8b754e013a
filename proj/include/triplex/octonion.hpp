#pragma once

#include <array>

#include "triplex/linalg.hpp"

namespace triplex {

/// One octonion over the ordered basis (e0 = unit, e1 .. e7 imaginary units).
class Octonion {
 public:
  using Coords = Eigen::Matrix<Rational, 8, 1>;

  Octonion() { c_.setZero(); }
  explicit Octonion(Coords c) : c_(std::move(c)) {}

  static Octonion unit() { return basis(0); }
  static Octonion basis(int a);

  const Rational& operator[](int a) const { return c_[a]; }
  Rational& operator[](int a) { return c_[a]; }
  const Coords& coords() const { return c_; }

  bool is_zero() const;

  friend Octonion operator+(const Octonion& x, const Octonion& y) {
    return Octonion(x.c_ + y.c_);
  }
  friend Octonion operator-(const Octonion& x, const Octonion& y) {
    return Octonion(x.c_ - y.c_);
  }
  friend Octonion operator-(const Octonion& x) { return Octonion(Coords(-x.c_)); }
  friend Octonion operator*(const Rational& s, const Octonion& x) {
    return Octonion(Coords(s * x.c_));
  }
  friend bool operator==(const Octonion& x, const Octonion& y) {
    return exact_eq(x.c_, y.c_);
  }

 private:
  Coords c_;
};

/// The multiplication convention: seven oriented triples (a,b,c) meaning
/// e_a e_b = e_c. Every other imaginary product follows by cycling the
/// triples, antisymmetry, and e_a e_a = -e0. Changing the convention is a
/// one-line edit here; everything downstream is derived from this table.
inline constexpr std::array<std::array<int, 3>, 7> kFanoTriples = {{
    {{1, 2, 3}},
    {{1, 4, 5}},
    {{1, 7, 6}},
    {{2, 4, 6}},
    {{2, 5, 7}},
    {{3, 4, 7}},
    {{3, 6, 5}},
}};

/// Signed basis product: e_a e_b = sign * e_index.
struct BasisProduct {
  int sign;
  int index;
};
const BasisProduct& octonion_basis_product(int a, int b);

/// Bilinear extension of the basis table.
Octonion omul(const Octonion& x, const Octonion& y);

/// Conjugation: fixes the unit, negates the imaginary part.
Octonion oconj(const Octonion& x);

/// Symmetric bilinear form with an orthonormal basis, unit included.
Rational oform(const Octonion& x, const Octonion& y);

/// (x*y)*z - x*(y*z); identically zero iff the arguments associate.
Octonion associator(const Octonion& x, const Octonion& y, const Octonion& z);

/// Component orthogonal to the unit.
Octonion imaginary_part(const Octonion& x);

}  // namespace triplex
