#pragma once

#include <Eigen/Dense>

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "triplex/rational.hpp"

namespace triplex {

template <typename T>
using Matrix = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;
template <typename T>
using Vector = Eigen::Matrix<T, Eigen::Dynamic, 1>;

using Mat = Matrix<Rational>;
using Vec = Vector<Rational>;

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Entry-wise exact equality.
template <typename DA, typename DB>
bool exact_eq(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (a.derived()(i, j) != b.derived()(i, j)) return false;
  return true;
}

template <typename D>
bool exact_zero(const Eigen::MatrixBase<D>& a) {
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (a.derived()(i, j) != 0) return false;
  return true;
}

/// Exact rank by rational Gaussian elimination. The first nonzero entry in a
/// column is the pivot; over an exact field no magnitude pivoting is needed.
template <typename Derived>
int rank(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  Matrix<Scalar> a = m;
  const Eigen::Index rows = a.rows(), cols = a.cols();
  int r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = -1;
    for (Eigen::Index i = r; i < rows; ++i) {
      if (a(i, c) != 0) {
        p = i;
        break;
      }
    }
    if (p < 0) continue;
    if (p != r) a.row(p).swap(a.row(r));
    for (Eigen::Index i = r + 1; i < rows; ++i) {
      if (a(i, c) == 0) continue;
      Scalar f = a(i, c) / a(r, c);
      for (Eigen::Index j = c; j < cols; ++j) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return r;
}

/// Column-major flattening of a matrix into a vector.
Vec flatten(const Mat& m);

/// Incremental exact span. insert() keeps a vector iff it is independent of
/// everything kept so far; solve() expresses a target over the inserted
/// vectors (coefficients indexed by insertion order, zero on the dependent
/// ones) or reports that the target is outside the span.
class SpanSolver {
 public:
  bool insert(const Vec& v);
  std::optional<std::vector<Rational>> solve(const Vec& target) const;
  int rank() const { return static_cast<int>(rows_.size()); }
  int inserted() const { return n_inserted_; }

 private:
  struct EchelonRow {
    Vec value;                    // normalized so value[lead] == 1
    std::vector<Rational> combo;  // value = sum combo[i] * inserted_i
    Eigen::Index lead = 0;
  };
  std::vector<EchelonRow> rows_;
  Eigen::Index len_ = -1;
  int n_inserted_ = 0;
};

/// Exact coefficients c with sum_i c[i] * basis[i] == target, or nullopt when
/// target is outside the span. All matrices must share one shape.
std::optional<std::vector<Rational>> solve_in_span(const std::vector<Mat>& basis,
                                                   const Mat& target);

/// Indices, in input order, of a maximal linearly independent subset of the
/// candidates. Greedy first-independent scan, so the choice is reproducible
/// for a given input order.
std::vector<int> gauss_select(const std::vector<Mat>& candidates);

/// Structure constants of a triple product over a fixed basis:
/// [e_j, e_k, e_l] = sum_m c(m, j, k, l) e_m. Dense; m varies fastest, so a
/// product column is a contiguous map.
class Tensor3 {
 public:
  Tensor3() = default;
  explicit Tensor3(int dim)
      : dim_(dim),
        a_(static_cast<std::size_t>(dim) * dim * dim * dim) {}

  int dim() const { return dim_; }

  Rational& operator()(int m, int j, int k, int l) { return a_[idx(m, j, k, l)]; }
  const Rational& operator()(int m, int j, int k, int l) const {
    return a_[idx(m, j, k, l)];
  }

  /// The product [e_j, e_k, e_l] as a vector view.
  Eigen::Map<const Vec> column(int j, int k, int l) const {
    return {a_.data() + off(j, k, l), dim_};
  }

  bool operator==(const Tensor3& o) const { return dim_ == o.dim_ && a_ == o.a_; }

 private:
  std::size_t off(int j, int k, int l) const {
    return ((static_cast<std::size_t>(j) * dim_ + k) * dim_ + l) * dim_;
  }
  std::size_t idx(int m, int j, int k, int l) const { return off(j, k, l) + m; }

  int dim_ = 0;
  std::vector<Rational> a_;
};

}  // namespace triplex
