#include "triplex/canon.hpp"

#include <sstream>
#include <utility>

#include "parallel.hpp"

namespace triplex {

LeftMultiplication lmul(const TripleSystem& ts, int j, int k) {
  const int n = ts.dim;
  Mat m(n, n);
  for (int l = 0; l < n; ++l) {
    auto col = ts.c.column(j, k, l);
    for (int i = 0; i < n; ++i) m(i, l) = col[i];
  }
  return {j, k, std::move(m)};
}

namespace {

std::vector<LeftMultiplication> span_for_eps(const TripleSystem& ts, int eps) {
  const int n = ts.dim;
  std::vector<LeftMultiplication> candidates;
  for (int j = 0; j < n; ++j) {
    const int k0 = eps == -1 ? j + 1 : j;  // the diagonal vanishes for eps = -1
    for (int k = k0; k < n; ++k) candidates.push_back(lmul(ts, j, k));
  }

  SpanSolver span;
  std::vector<LeftMultiplication> kept;
  for (LeftMultiplication& c : candidates) {
    if (span.insert(flatten(c.mat))) kept.push_back(std::move(c));
  }
  return kept;
}

}  // namespace

std::vector<LeftMultiplication> operator_span(const TripleSystem& ts) {
  return span_for_eps(ts, ts.epsilon);
}

GradedAlgebra canonical(const TripleSystem& ts, bool super, bool force,
                        const CheckOptions& opts) {
  const int eps = super ? +1 : -1;
  if (!force) {
    AxiomReport rep = check_lie_triple(ts, eps, opts);
    if (!rep.passed()) {
      std::ostringstream msg;
      msg << "canonical: input fails the triple-system axioms (" << rep.total_failures
          << " of " << rep.identities << " identities)";
      throw AxiomCheckFailed(msg.str(), std::move(rep));
    }
  }

  GradedAlgebra g;
  g.even_basis = span_for_eps(ts, eps);
  g.dim_even = static_cast<int>(g.even_basis.size());
  g.dim_odd = ts.dim;
  g.is_super = super;

  const int E = g.dim_even, N = g.dim_odd, D = E + N;
  g.f = BracketTensor(D);
  g.grading.assign(static_cast<std::size_t>(D), 1);
  for (int i = E; i < D; ++i) g.grading[static_cast<std::size_t>(i)] = -1;

  SpanSolver span;
  for (const LeftMultiplication& op : g.even_basis) span.insert(flatten(op.mat));

  // even-even: matrix commutators, closed in the operator span
  for (int a = 0; a < E; ++a)
    for (int b = 0; b < E; ++b) {
      if (a == b) continue;
      Mat comm = g.even_basis[a].mat * g.even_basis[b].mat -
                 g.even_basis[b].mat * g.even_basis[a].mat;
      auto coeff = span.solve(flatten(comm));
      if (!coeff) {
        throw ClosureViolation("canonical: operator commutator escapes the span");
      }
      for (int m = 0; m < E; ++m) {
        if ((*coeff)[static_cast<std::size_t>(m)] != 0)
          g.f(m, a, b) = (*coeff)[static_cast<std::size_t>(m)];
      }
    }

  // even-odd: the operator action on V, and the formal reverse bracket
  for (int a = 0; a < E; ++a) {
    const Mat& m = g.even_basis[a].mat;
    for (int j = 0; j < N; ++j)
      for (int i = 0; i < N; ++i) {
        if (m(i, j) != 0) {
          g.f(E + i, a, E + j) = m(i, j);
          g.f(E + i, E + j, a) = -m(i, j);
        }
      }
  }

  // odd-odd: [x, y] is the operator built from (x, y)
  for (int x = 0; x < N; ++x)
    for (int y = 0; y < N; ++y) {
      LeftMultiplication L = lmul(ts, x, y);
      auto coeff = span.solve(flatten(L.mat));
      if (!coeff) {
        throw ClosureViolation("canonical: odd-odd bracket escapes the operator span");
      }
      for (int m = 0; m < E; ++m) {
        if ((*coeff)[static_cast<std::size_t>(m)] != 0)
          g.f(m, E + x, E + y) = (*coeff)[static_cast<std::size_t>(m)];
      }
    }

  return g;
}

namespace {

using SparseVec = std::vector<std::pair<int, Rational>>;

// Nonzero bracket columns, built once per check.
struct Brackets {
  int d;
  std::vector<SparseVec> cols;

  explicit Brackets(const BracketTensor& f)
      : d(f.dim()), cols(static_cast<std::size_t>(d) * d) {
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        SparseVec& col = cols[static_cast<std::size_t>(i) * d + j];
        for (int m = 0; m < d; ++m) {
          const Rational& v = f(m, i, j);
          if (v != 0) col.emplace_back(m, v);
        }
      }
  }

  const SparseVec& operator()(int i, int j) const {
    return cols[static_cast<std::size_t>(i) * d + j];
  }
};

struct Buf {
  long long identities = 0;
  long long fails = 0;
  std::vector<AxiomFailure> recorded;
};

AxiomReport jacobi_impl(const GradedAlgebra& g, bool super, const char* axiom,
                        const CheckOptions& opts) {
  const int d = g.dim();
  const Brackets br(g.f);
  AxiomReport rep;
  const int cap = opts.max_recorded;

  std::vector<Buf> bufs(static_cast<std::size_t>(detail::chunk_count(d, opts.jobs)));
  detail::chunked_for(d, opts.jobs, [&](int chunk, int begin, int end) {
    Buf& buf = bufs[static_cast<std::size_t>(chunk)];
    std::vector<Rational> acc(static_cast<std::size_t>(d));
    auto term = [&](int x, int y, int z) {
      // sign * [[e_x, e_y], e_z]; the graded sign is -1 iff e_x, e_z both odd
      const bool flip = super && g.grading[static_cast<std::size_t>(x)] < 0 &&
                        g.grading[static_cast<std::size_t>(z)] < 0;
      for (const auto& [m, c] : br(x, y)) {
        for (const auto& [p, v] : br(m, z)) {
          if (flip) {
            acc[static_cast<std::size_t>(p)] -= c * v;
          } else {
            acc[static_cast<std::size_t>(p)] += c * v;
          }
        }
      }
    };

    for (int i = begin; i < end; ++i)
      for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k) {
          for (Rational& x : acc) x = 0;
          term(i, j, k);
          term(j, k, i);
          term(k, i, j);
          ++buf.identities;
          bool zero = true;
          for (const Rational& x : acc) {
            if (x != 0) {
              zero = false;
              break;
            }
          }
          if (!zero) {
            ++buf.fails;
            if (static_cast<int>(buf.recorded.size()) < cap) {
              Vec res(d);
              for (int m = 0; m < d; ++m) res[m] = acc[static_cast<std::size_t>(m)];
              buf.recorded.push_back({axiom, {i, j, k}, std::move(res)});
            }
          }
        }
  });

  for (Buf& b : bufs) {
    rep.identities += b.identities;
    rep.total_failures += b.fails;
    for (AxiomFailure& f : b.recorded) {
      if (static_cast<int>(rep.failures.size()) >= cap) break;
      rep.failures.push_back(std::move(f));
    }
  }
  return rep;
}

}  // namespace

AxiomReport check_jacobi(const GradedAlgebra& g, const CheckOptions& opts) {
  return jacobi_impl(g, false, "jacobi", opts);
}

AxiomReport check_super_jacobi(const GradedAlgebra& g, const CheckOptions& opts) {
  return jacobi_impl(g, true, "super-jacobi", opts);
}

}  // namespace triplex
