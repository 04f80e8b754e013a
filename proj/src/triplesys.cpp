#include "triplex/triplesys.hpp"

#include <utility>

#include "parallel.hpp"
#include "triplex/octonion.hpp"

namespace triplex {

std::string to_string(SystemKind k) {
  switch (k) {
    case SystemKind::LieTriple:
      return "lie-triple";
    case SystemKind::AntiLieTriple:
      return "anti-lie-triple";
    case SystemKind::BFKTS:
      return "bfkts";
    case SystemKind::Doubled:
      return "doubled";
  }
  return "unknown";
}

std::optional<SystemKind> system_kind_from(const std::string& s) {
  if (s == "lie-triple") return SystemKind::LieTriple;
  if (s == "anti-lie-triple") return SystemKind::AntiLieTriple;
  if (s == "bfkts") return SystemKind::BFKTS;
  if (s == "doubled") return SystemKind::Doubled;
  return std::nullopt;
}

namespace {

using SparseVec = std::vector<std::pair<int, Rational>>;

// Nonzero entries of every basis product column, built once per check so the
// exhaustive loops touch only nonzero structure constants.
struct Cols {
  int n;
  std::vector<SparseVec> cols;

  explicit Cols(const Tensor3& c) : n(c.dim()), cols(static_cast<std::size_t>(n) * n * n) {
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          SparseVec& col = cols[off(j, k, l)];
          for (int m = 0; m < n; ++m) {
            const Rational& v = c(m, j, k, l);
            if (v != 0) col.emplace_back(m, v);
          }
        }
  }

  std::size_t off(int j, int k, int l) const {
    return (static_cast<std::size_t>(j) * n + k) * n + l;
  }
  const SparseVec& operator()(int j, int k, int l) const { return cols[off(j, k, l)]; }
};

// Dense residual accumulator, reused across identity evaluations.
class Residual {
 public:
  explicit Residual(int n) : v_(static_cast<std::size_t>(n)) {}

  void add(int sign, const SparseVec& col) {
    if (sign >= 0) {
      for (const auto& [m, val] : col) v_[m] += val;
    } else {
      for (const auto& [m, val] : col) v_[m] -= val;
    }
  }
  void add_scaled(const Rational& coef, const SparseVec& col) {
    for (const auto& [m, val] : col) v_[m] += coef * val;
  }
  void add_unit(const Rational& coef, int m) { v_[m] += coef; }

  bool is_zero() const {
    for (const Rational& x : v_) {
      if (x != 0) return false;
    }
    return true;
  }

  Vec take() const {
    Vec out(static_cast<Eigen::Index>(v_.size()));
    for (std::size_t i = 0; i < v_.size(); ++i) out[static_cast<Eigen::Index>(i)] = v_[i];
    return out;
  }

  void reset() {
    for (Rational& x : v_) x = 0;
  }

 private:
  std::vector<Rational> v_;
};

struct ChunkBuf {
  long long identities = 0;
  long long fails = 0;
  std::vector<AxiomFailure> recorded;
};

void record(ChunkBuf& buf, int cap, const char* axiom, std::initializer_list<int> at,
            const Residual& r) {
  ++buf.fails;
  if (static_cast<int>(buf.recorded.size()) < cap) {
    buf.recorded.push_back({axiom, std::vector<int>(at), r.take()});
  }
}

void merge(AxiomReport& rep, std::vector<ChunkBuf>& bufs, int cap) {
  for (ChunkBuf& b : bufs) {
    rep.identities += b.identities;
    rep.total_failures += b.fails;
    for (AxiomFailure& f : b.recorded) {
      if (static_cast<int>(rep.failures.size()) >= cap) break;
      rep.failures.push_back(std::move(f));
    }
  }
}

}  // namespace

Vec tri(const TripleSystem& ts, const Vec& x, const Vec& y, const Vec& z) {
  const int n = ts.dim;
  if (x.size() != n || y.size() != n || z.size() != n) {
    throw DimensionMismatch("tri: vector length does not match the system dimension");
  }
  Vec out = Vec::Zero(n);
  for (int j = 0; j < n; ++j) {
    if (x[j] == 0) continue;
    for (int k = 0; k < n; ++k) {
      if (y[k] == 0) continue;
      Rational xy = x[j] * y[k];
      for (int l = 0; l < n; ++l) {
        if (z[l] == 0) continue;
        Rational s = xy * z[l];
        auto col = ts.c.column(j, k, l);
        for (int m = 0; m < n; ++m) {
          if (col[m] != 0) out[m] += s * col[m];
        }
      }
    }
  }
  return out;
}

AxiomReport check_lie_triple(const TripleSystem& ts, int eps, const CheckOptions& opts) {
  const int n = ts.dim;
  const Cols cols(ts.c);
  AxiomReport rep;
  const int cap = opts.max_recorded;

  // Pair symmetry and cyclic sum, n^3 tuples each.
  {
    std::vector<ChunkBuf> bufs(static_cast<std::size_t>(detail::chunk_count(n, opts.jobs)));
    detail::chunked_for(n, opts.jobs, [&](int chunk, int begin, int end) {
      ChunkBuf& buf = bufs[static_cast<std::size_t>(chunk)];
      Residual r(n);
      for (int j = begin; j < end; ++j)
        for (int k = 0; k < n; ++k)
          for (int l = 0; l < n; ++l) {
            r.reset();
            r.add(+1, cols(j, k, l));
            r.add(-eps, cols(k, j, l));
            ++buf.identities;
            if (!r.is_zero()) record(buf, cap, "pair-symmetry", {j, k, l}, r);

            r.reset();
            r.add(+1, cols(j, k, l));
            r.add(+1, cols(k, l, j));
            r.add(+1, cols(l, j, k));
            ++buf.identities;
            if (!r.is_zero()) record(buf, cap, "cyclic-sum", {j, k, l}, r);
          }
    });
    merge(rep, bufs, cap);
  }

  // Derivation identity, n^5 quintuples (p,q,j,k,l) standing for (u,v,x,y,z).
  {
    std::vector<ChunkBuf> bufs(static_cast<std::size_t>(detail::chunk_count(n, opts.jobs)));
    detail::chunked_for(n, opts.jobs, [&](int chunk, int begin, int end) {
      ChunkBuf& buf = bufs[static_cast<std::size_t>(chunk)];
      Residual r(n);
      for (int p = begin; p < end; ++p)
        for (int q = 0; q < n; ++q)
          for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
              for (int l = 0; l < n; ++l) {
                r.reset();
                for (const auto& [m, w] : cols(j, k, l)) r.add_scaled(w, cols(p, q, m));
                for (const auto& [m, a] : cols(p, q, j)) r.add_scaled(-a, cols(m, k, l));
                for (const auto& [m, b] : cols(p, q, k)) r.add_scaled(-b, cols(j, m, l));
                for (const auto& [m, c] : cols(p, q, l)) r.add_scaled(-c, cols(j, k, m));
                ++buf.identities;
                if (!r.is_zero()) record(buf, cap, "derivation", {p, q, j, k, l}, r);
              }
    });
    merge(rep, bufs, cap);
  }

  return rep;
}

AxiomReport check_bfkts(const TripleSystem& ts, int eps, const CheckOptions& opts) {
  if (!ts.form) throw MissingForm("check_bfkts: system carries no bilinear form");
  const Mat& G = *ts.form;
  const int n = ts.dim;
  const Cols cols(ts.c);
  AxiomReport rep;
  const int cap = opts.max_recorded;

  // xyz - eps zyx = 2<x|z>y  and  xyz - eps yxz = 2<x|y>z, n^3 tuples each.
  {
    std::vector<ChunkBuf> bufs(static_cast<std::size_t>(detail::chunk_count(n, opts.jobs)));
    detail::chunked_for(n, opts.jobs, [&](int chunk, int begin, int end) {
      ChunkBuf& buf = bufs[static_cast<std::size_t>(chunk)];
      Residual r(n);
      for (int j = begin; j < end; ++j)
        for (int k = 0; k < n; ++k)
          for (int l = 0; l < n; ++l) {
            r.reset();
            r.add(+1, cols(j, k, l));
            r.add(-eps, cols(l, k, j));
            if (G(j, l) != 0) r.add_unit(Rational(-2) * G(j, l), k);
            ++buf.identities;
            if (!r.is_zero()) record(buf, cap, "outer-exchange", {j, k, l}, r);

            r.reset();
            r.add(+1, cols(j, k, l));
            r.add(-eps, cols(k, j, l));
            if (G(j, k) != 0) r.add_unit(Rational(-2) * G(j, k), l);
            ++buf.identities;
            if (!r.is_zero()) record(buf, cap, "inner-exchange", {j, k, l}, r);
          }
    });
    merge(rep, bufs, cap);
  }

  // uv(xyz) = (uvx)yz + eps x(vuy)z + xy(uvz), n^5 quintuples (p,q,j,k,l).
  // Note the swapped pair (v,u) in the middle term.
  {
    std::vector<ChunkBuf> bufs(static_cast<std::size_t>(detail::chunk_count(n, opts.jobs)));
    detail::chunked_for(n, opts.jobs, [&](int chunk, int begin, int end) {
      ChunkBuf& buf = bufs[static_cast<std::size_t>(chunk)];
      Residual r(n);
      const Rational meps(-eps);
      for (int p = begin; p < end; ++p)
        for (int q = 0; q < n; ++q)
          for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
              for (int l = 0; l < n; ++l) {
                r.reset();
                for (const auto& [m, w] : cols(j, k, l)) r.add_scaled(w, cols(p, q, m));
                for (const auto& [m, a] : cols(p, q, j)) r.add_scaled(-a, cols(m, k, l));
                for (const auto& [m, b] : cols(q, p, k)) {
                  Rational s = meps * b;
                  r.add_scaled(s, cols(j, m, l));
                }
                for (const auto& [m, c] : cols(p, q, l)) r.add_scaled(-c, cols(j, k, m));
                ++buf.identities;
                if (!r.is_zero()) record(buf, cap, "derivation", {p, q, j, k, l}, r);
              }
    });
    merge(rep, bufs, cap);
  }

  return rep;
}

Mat orthonormal_gram(int n) { return Mat::Identity(n, n); }

Mat symplectic_gram(int n) {
  if (n <= 0 || n % 2 != 0) throw BadForm("symplectic_gram: dimension must be even");
  Mat g = Mat::Zero(n, n);
  const int h = n / 2;
  for (int i = 0; i < h; ++i) {
    g(i, h + i) = 1;
    g(h + i, i) = -1;
  }
  return g;
}

namespace {

void require_form_symmetry(const Mat& gram, int n, int eps, const char* who) {
  if (gram.rows() != n || gram.cols() != n) {
    throw BadForm(std::string(who) + ": gram matrix has the wrong shape");
  }
  if (eps != 1 && eps != -1) {
    throw BadForm(std::string(who) + ": eps must be +1 or -1");
  }
  // G^T = -eps G: symmetric for eps = -1, antisymmetric for eps = +1.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rational want = Rational(-eps) * gram(i, j);
      if (gram(j, i) != want) {
        throw BadForm(std::string(who) + ": gram symmetry type does not match eps");
      }
    }
}

}  // namespace

TripleSystem build_form_triple(int n, const Mat& gram, int eps) {
  require_form_symmetry(gram, n, eps, "build_form_triple");
  if (eps == 1) {
    if (n % 2 != 0) throw BadForm("build_form_triple: eps = +1 needs even dimension");
    if (rank(gram) != n) throw BadForm("build_form_triple: eps = +1 needs a nondegenerate form");
  }

  TripleSystem ts;
  ts.dim = n;
  ts.c = Tensor3(n);
  ts.form = gram;
  ts.epsilon = eps;
  ts.kind = eps == -1 ? SystemKind::LieTriple : SystemKind::AntiLieTriple;

  // [e_j, e_k, e_l] = G(j,l) e_k + eps G(k,l) e_j
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l) {
        ts.c(k, j, k, l) += gram(j, l);
        ts.c(j, j, k, l) += Rational(eps) * gram(k, l);
      }
  return ts;
}

TripleSystem build_bfkts_basic(int n, const Mat& gram, int eps) {
  require_form_symmetry(gram, n, eps, "build_bfkts_basic");

  TripleSystem ts;
  ts.dim = n;
  ts.c = Tensor3(n);
  ts.form = gram;
  ts.epsilon = eps;
  ts.kind = SystemKind::BFKTS;

  // e_j e_k e_l = G(j,l) e_k - eps G(j,k) e_l + eps G(k,l) e_j
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l) {
        ts.c(k, j, k, l) += gram(j, l);
        ts.c(l, j, k, l) -= Rational(eps) * gram(j, k);
        ts.c(j, j, k, l) += Rational(eps) * gram(k, l);
      }
  return ts;
}

int levi_civita4(int j, int k, int l, int m) {
  const int p[4] = {j, k, l, m};
  int sign = 1;
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) {
      if (p[a] == p[b]) return 0;
      if (p[a] > p[b]) sign = -sign;
    }
  return sign;
}

TripleSystem build_example1(const Rational& sigma) {
  const int n = 4;
  TripleSystem ts;
  ts.dim = n;
  ts.c = Tensor3(n);
  ts.form = orthonormal_gram(n);
  ts.epsilon = -1;
  ts.kind = SystemKind::BFKTS;

  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l) {
        for (int m = 0; m < n; ++m) {
          const int s = levi_civita4(j, k, l, m);
          if (s != 0) ts.c(m, j, k, l) += Rational(s) * sigma;
        }
        if (k == l) ts.c(j, j, k, l) -= 1;
        if (j == l) ts.c(k, j, k, l) += 1;
        if (j == k) ts.c(l, j, k, l) += 1;
      }
  return ts;
}

TripleSystem build_example2() {
  const int n = 8;
  TripleSystem ts;
  ts.dim = n;
  ts.c = Tensor3(n);
  ts.form = orthonormal_gram(n);
  ts.epsilon = -1;
  ts.kind = SystemKind::BFKTS;

  const Rational third(1, 3);
  for (int j = 0; j < n; ++j) {
    const Octonion x = Octonion::basis(j);
    for (int k = 0; k < n; ++k) {
      const Octonion xyc = omul(x, oconj(Octonion::basis(k)));
      for (int l = 0; l < n; ++l) {
        const Octonion t = omul(xyc, Octonion::basis(l));
        for (int m = 0; m < n; ++m) {
          if (t[m] != 0) ts.c(m, j, k, l) += third * t[m];
        }
        if (k == l) ts.c(j, j, k, l) -= Rational(4, 3);
        if (j == l) ts.c(k, j, k, l) += Rational(4, 3);
        if (j == k) ts.c(l, j, k, l) += Rational(2, 3);
      }
    }
  }
  return ts;
}

TripleSystem build_example3() {
  const int n = 7;  // system index a <-> imaginary unit e_{a+1}
  TripleSystem ts;
  ts.dim = n;
  ts.c = Tensor3(n);
  ts.form = orthonormal_gram(n);
  ts.epsilon = -1;
  ts.kind = SystemKind::BFKTS;

  const Rational quarter(-1, 4);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l) {
        const Octonion as =
            associator(Octonion::basis(j + 1), Octonion::basis(k + 1), Octonion::basis(l + 1));
        if (as[0] != 0) {
          throw ClosureViolation("build_example3: basis product leaves the imaginary subspace");
        }
        for (int m = 0; m < n; ++m) {
          if (as[m + 1] != 0) ts.c(m, j, k, l) += quarter * as[m + 1];
        }
        if (k == l) ts.c(j, j, k, l) -= 1;
        if (j == l) ts.c(k, j, k, l) += 1;
        if (j == k) ts.c(l, j, k, l) += 1;
      }
  return ts;
}

TripleSystem double_system(const TripleSystem& ts) {
  if (ts.kind != SystemKind::BFKTS) {
    throw WrongKind("double_system: input must be a BFKTS");
  }
  if (!ts.form) throw MissingForm("double_system: input carries no bilinear form");

  const int n = ts.dim;
  const int eps = ts.epsilon;
  const Mat& G = *ts.form;

  TripleSystem out;
  out.dim = 2 * n;
  out.c = Tensor3(2 * n);
  out.form = std::nullopt;
  out.epsilon = -eps;
  out.kind = SystemKind::Doubled;

  // Component products of [(x1,x2),(y1,y2),(z1,z2)]:
  //   top    = x1 y2 z1 - eps y1 x2 z1 + 2 eps <x1|y1> z2
  //   bottom = eps y2 x1 z2 - x2 y1 z2 - 2 eps <x2|y2> z1
  // Each term fixes which copy every argument lives in, so on basis vectors
  // at most one term fires per slot pattern.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      for (int z = 0; z < n; ++z) {
        // (top a, bottom b, top z): x1 y2 z1
        for (int m = 0; m < n; ++m) {
          const Rational& v = ts.c(m, a, b, z);
          if (v != 0) out.c(m, a, n + b, z) += v;
        }
        // (bottom a, top b, top z): -eps (y1 x2 z1) with y1 = e_b, x2 = e_a
        for (int m = 0; m < n; ++m) {
          const Rational& v = ts.c(m, b, a, z);
          if (v != 0) out.c(m, n + a, b, z) -= Rational(eps) * v;
        }
        // (top a, bottom b, bottom z): eps (y2 x1 z2) with y2 = e_b, x1 = e_a
        for (int m = 0; m < n; ++m) {
          const Rational& v = ts.c(m, b, a, z);
          if (v != 0) out.c(n + m, a, n + b, n + z) += Rational(eps) * v;
        }
        // (bottom a, top b, bottom z): -(x2 y1 z2)
        for (int m = 0; m < n; ++m) {
          const Rational& v = ts.c(m, a, b, z);
          if (v != 0) out.c(n + m, n + a, b, n + z) -= v;
        }
      }
      if (G(a, b) != 0) {
        const Rational twice = Rational(2 * eps) * G(a, b);
        for (int z = 0; z < n; ++z) {
          // (top a, top b, bottom z): 2 eps <x1|y1> z2 lands in the top copy
          out.c(z, a, b, n + z) += twice;
          // (bottom a, bottom b, top z): -2 eps <x2|y2> z1 lands in the bottom copy
          out.c(n + z, n + a, n + b, z) -= twice;
        }
      }
    }
  return out;
}

Rational alpha_from_sigma(const Rational& sigma) {
  if (sigma == -1) throw AlphaPole("alpha_from_sigma: pole at sigma = -1");
  Rational num = Rational(1) - sigma;
  Rational den = Rational(1) + sigma;
  return num / den;
}

bool alpha_degenerate(const Rational& alpha) { return alpha == 0 || alpha == -1; }

}  // namespace triplex
