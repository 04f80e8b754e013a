#include "triplex/octonion.hpp"

namespace triplex {

namespace {

struct ProductTable {
  BasisProduct p[8][8];

  ProductTable() {
    for (int b = 0; b < 8; ++b) {
      p[0][b] = {1, b};
      p[b][0] = {1, b};
    }
    for (int a = 1; a < 8; ++a) p[a][a] = {-1, 0};
    for (const auto& t : kFanoTriples) {
      const int x = t[0], y = t[1], z = t[2];
      p[x][y] = {1, z};
      p[y][z] = {1, x};
      p[z][x] = {1, y};
      p[y][x] = {-1, z};
      p[z][y] = {-1, x};
      p[x][z] = {-1, y};
    }
  }
};

const ProductTable& table() {
  static const ProductTable t;
  return t;
}

}  // namespace

Octonion Octonion::basis(int a) {
  Octonion e;
  e.c_[a] = 1;
  return e;
}

bool Octonion::is_zero() const { return exact_zero(c_); }

const BasisProduct& octonion_basis_product(int a, int b) { return table().p[a][b]; }

Octonion omul(const Octonion& x, const Octonion& y) {
  Octonion out;
  for (int a = 0; a < 8; ++a) {
    if (x[a] == 0) continue;
    for (int b = 0; b < 8; ++b) {
      if (y[b] == 0) continue;
      const BasisProduct& bp = octonion_basis_product(a, b);
      Rational t = x[a] * y[b];
      if (bp.sign < 0) {
        out[bp.index] -= t;
      } else {
        out[bp.index] += t;
      }
    }
  }
  return out;
}

Octonion oconj(const Octonion& x) {
  Octonion out = -x;
  out[0] = x[0];
  return out;
}

Rational oform(const Octonion& x, const Octonion& y) {
  Rational s = 0;
  for (int a = 0; a < 8; ++a) s += x[a] * y[a];
  return s;
}

Octonion associator(const Octonion& x, const Octonion& y, const Octonion& z) {
  return omul(omul(x, y), z) - omul(x, omul(y, z));
}

Octonion imaginary_part(const Octonion& x) {
  Octonion out = x;
  out[0] = 0;
  return out;
}

}  // namespace triplex
