#include "triplex/analysis.hpp"

namespace triplex {

Mat adjoint(const GradedAlgebra& g, int i) {
  const int d = g.dim();
  if (i < 0 || i >= d) throw DimensionMismatch("adjoint: basis index out of range");
  Mat m(d, d);
  for (int j = 0; j < d; ++j) {
    auto col = g.f.column(i, j);
    for (int r = 0; r < d; ++r) m(r, j) = col[r];
  }
  return m;
}

Mat supertrace_form(const GradedAlgebra& g) {
  const int d = g.dim();
  std::vector<Mat> ad;
  ad.reserve(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) ad.push_back(adjoint(g, i));

  Mat b = Mat::Zero(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Rational s = 0;
      for (int k = 0; k < d; ++k) {
        Rational t = 0;
        for (int l = 0; l < d; ++l) {
          if (ad[static_cast<std::size_t>(i)](k, l) != 0 &&
              ad[static_cast<std::size_t>(j)](l, k) != 0) {
            t += ad[static_cast<std::size_t>(i)](k, l) * ad[static_cast<std::size_t>(j)](l, k);
          }
        }
        if (g.is_super && g.grading[static_cast<std::size_t>(k)] < 0) {
          s -= t;
        } else {
          s += t;
        }
      }
      b(i, j) = s;
    }
  return b;
}

AxiomReport invariance_check(const GradedAlgebra& g) {
  return invariance_check(g, supertrace_form(g));
}

AxiomReport invariance_check(const GradedAlgebra& g, const Mat& b) {
  const int d = g.dim();
  if (b.rows() != d || b.cols() != d) {
    throw DimensionMismatch("invariance_check: form shape does not match the algebra");
  }
  AxiomReport rep;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        Rational lhs = 0, rhs = 0;
        {
          auto col = g.f.column(i, j);
          for (int m = 0; m < d; ++m) {
            if (col[m] != 0 && b(m, k) != 0) lhs += col[m] * b(m, k);
          }
        }
        {
          auto col = g.f.column(j, k);
          for (int m = 0; m < d; ++m) {
            if (col[m] != 0 && b(i, m) != 0) rhs += col[m] * b(i, m);
          }
        }
        ++rep.identities;
        if (lhs != rhs) {
          ++rep.total_failures;
          if (static_cast<int>(rep.failures.size()) < 100) {
            Vec res(1);
            res[0] = lhs - rhs;
            rep.failures.push_back({"invariance", {i, j, k}, std::move(res)});
          }
        }
      }
  return rep;
}

std::optional<Mat> distinguished_invariant_form(const GradedAlgebra& g) {
  const int d = g.dim();
  if (d == 0) return std::nullopt;
  auto grade = [&](int i) { return g.is_super ? g.grading[static_cast<std::size_t>(i)] : 1; };

  // Unknowns: one slot per independent entry of an even form, symmetric on
  // the even block and antisymmetric on the odd block.
  Matrix<int> slot(d, d), sgn(d, d);
  slot.setConstant(-1);
  sgn.setZero();
  int nu = 0;
  for (int a = 0; a < d; ++a)
    for (int b = a; b < d; ++b) {
      if (grade(a) != grade(b)) continue;
      const bool odd_pair = grade(a) < 0;
      if (odd_pair && a == b) continue;
      slot(a, b) = nu;
      sgn(a, b) = 1;
      slot(b, a) = nu;
      sgn(b, a) = odd_pair ? -1 : 1;
      ++nu;
    }
  if (nu == 0) return std::nullopt;

  // One linear constraint per basis triple: B([e_i,e_j],e_k) = B(e_i,[e_j,e_k]).
  std::vector<Vec> rows;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        Vec row = Vec::Zero(nu);
        for (int m = 0; m < d; ++m) {
          const Rational& c = g.f(m, i, j);
          if (c != 0 && slot(m, k) >= 0) row[slot(m, k)] += Rational(sgn(m, k)) * c;
        }
        for (int m = 0; m < d; ++m) {
          const Rational& c = g.f(m, j, k);
          if (c != 0 && slot(i, m) >= 0) row[slot(i, m)] -= Rational(sgn(i, m)) * c;
        }
        if (!exact_zero(row)) rows.push_back(std::move(row));
      }

  // Row-reduce and read the kernel off the free columns.
  Mat a(static_cast<int>(rows.size()), nu);
  for (std::size_t i = 0; i < rows.size(); ++i) a.row(static_cast<int>(i)) = rows[i].transpose();
  std::vector<int> lead;
  int rr = 0;
  for (int c = 0; c < nu && rr < a.rows(); ++c) {
    int p = -1;
    for (int i = rr; i < a.rows(); ++i) {
      if (a(i, c) != 0) {
        p = i;
        break;
      }
    }
    if (p < 0) continue;
    if (p != rr) a.row(p).swap(a.row(rr));
    Rational pv = a(rr, c);
    for (int q = c; q < nu; ++q) a(rr, q) /= pv;
    for (int i = 0; i < a.rows(); ++i) {
      if (i == rr || a(i, c) == 0) continue;
      Rational f = a(i, c);
      for (int q = c; q < nu; ++q) a(i, q) -= f * a(rr, q);
    }
    lead.push_back(c);
    ++rr;
  }
  if (nu - rr != 1) return std::nullopt;

  std::vector<bool> is_lead(static_cast<std::size_t>(nu), false);
  for (int c : lead) is_lead[static_cast<std::size_t>(c)] = true;
  int free_col = -1;
  for (int c = 0; c < nu; ++c) {
    if (!is_lead[static_cast<std::size_t>(c)]) {
      free_col = c;
      break;
    }
  }
  Vec u = Vec::Zero(nu);
  u[free_col] = 1;
  for (std::size_t r = 0; r < lead.size(); ++r) {
    u[lead[r]] = -a(static_cast<int>(r), free_col);
  }

  Mat b = Mat::Zero(d, d);
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y) {
      if (slot(x, y) >= 0 && u[slot(x, y)] != 0) b(x, y) = Rational(sgn(x, y)) * u[slot(x, y)];
    }
  return b;
}

namespace {

// Largest m with m(m-1)/2 == twice, or 0.
int orthogonal_rank_from_dim(int dim) {
  for (int m = 1; m * (m - 1) / 2 <= dim; ++m) {
    if (m * (m - 1) / 2 == dim) return m;
  }
  return 0;
}

}  // namespace

std::vector<std::string> identify(const AlgebraProfile& p) {
  std::vector<std::string> names;
  const int de = p.dim_even, dn = p.dim_odd;
  const int total = de + dn;
  if (total == 0) return names;
  if (p.killing_rank != total) return names;

  if (dn == 0) {
    const int m = orthogonal_rank_from_dim(de);
    if (m >= 2) names.push_back("so(" + std::to_string(m) + ")");
  } else {
    if (dn % 2 == 0 && de == dn * (dn + 1) / 2) {
      names.push_back("osp(1," + std::to_string(dn) + ")");
    }
    if (de == 9 && dn == 8) names.push_back("D(2,1;α)");
    if (de == 24 && dn == 16) names.push_back("F(4)");
    if (de == 17 && dn == 14) names.push_back("G(3)");
    if (dn % 2 == 0) {
      const int n = dn / 2;
      if (n >= 1 && de == n * (n - 1) / 2 + 3) {
        names.push_back("osp(" + std::to_string(n) + "|2)");
      }
    }
  }
  return names;
}

AlgebraProfile profile(const GradedAlgebra& g) {
  AlgebraProfile p;
  const int d = g.dim();
  if (g.is_super) {
    p.dim_even = g.dim_even;
    p.dim_odd = g.dim_odd;
  } else {
    p.dim_even = d;
    p.dim_odd = 0;
  }

  // derived subalgebra: span of all bracket values
  {
    SpanSolver span;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        Vec v = g.f.column(i, j);
        span.insert(v);
      }
    p.derived_dim = span.rank();
  }

  p.killing_rank = d == 0 ? 0 : rank(supertrace_form(g));
  if (d > 0 && p.killing_rank == 0 && p.derived_dim == d) {
    // The adjoint trace form of a simple superalgebra can vanish identically;
    // the solved invariant form still witnesses nondegeneracy there.
    if (auto b = distinguished_invariant_form(g)) p.killing_rank = rank(*b);
  }

  // center: kernel of x -> ad(x), stacked over all (m, i)
  {
    SpanSolver span;
    for (int j = 0; j < d; ++j) {
      Vec v(static_cast<Eigen::Index>(d) * d);
      Eigen::Index t = 0;
      for (int i = 0; i < d; ++i) {
        auto col = g.f.column(j, i);
        for (int m = 0; m < d; ++m) v[t++] = col[m];
      }
      span.insert(v);
    }
    p.center_dim = d - span.rank();
  }

  p.candidate_names = identify(p);
  return p;
}

}  // namespace triplex
