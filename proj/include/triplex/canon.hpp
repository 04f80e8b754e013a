#pragma once

#include <vector>

#include "triplex/triplesys.hpp"

namespace triplex {

/// Thrown by canonical() when the default pre-verification of the input
/// triple system fails. Carries the offending report.
struct AxiomCheckFailed : std::runtime_error {
  AxiomCheckFailed(std::string msg, AxiomReport rep)
      : std::runtime_error(std::move(msg)), report(std::move(rep)) {}
  AxiomReport report;
};

/// The operator z -> [e_j, e_k, z] as an exact N x N matrix, with the basis
/// pair it came from. Column l holds the coordinates of [e_j, e_k, e_l].
struct LeftMultiplication {
  int x_index = 0;
  int y_index = 0;
  Mat mat;
};

/// Bracket structure constants over a graded basis:
/// [e_i, e_j] = sum_m f(m, i, j) e_m. Dense; m varies fastest.
class BracketTensor {
 public:
  BracketTensor() = default;
  explicit BracketTensor(int dim)
      : dim_(dim), a_(static_cast<std::size_t>(dim) * dim * dim) {}

  int dim() const { return dim_; }

  Rational& operator()(int m, int i, int j) { return a_[idx(m, i, j)]; }
  const Rational& operator()(int m, int i, int j) const { return a_[idx(m, i, j)]; }

  /// [e_i, e_j] as a vector view.
  Eigen::Map<const Vec> column(int i, int j) const {
    return {a_.data() + off(i, j), dim_};
  }

  bool operator==(const BracketTensor& o) const { return dim_ == o.dim_ && a_ == o.a_; }

 private:
  std::size_t off(int i, int j) const {
    return (static_cast<std::size_t>(i) * dim_ + j) * dim_;
  }
  std::size_t idx(int m, int i, int j) const { return off(i, j) + m; }

  int dim_ = 0;
  std::vector<Rational> a_;
};

/// The enlarged algebra on (operator span) + (odd space V), basis ordered
/// even-then-odd. dim_even / dim_odd record the construction sectors for
/// both the super and the plain case; grading holds +1 on the operator
/// sector and -1 on V. For is_super = false the result is an ordinary Lie
/// algebra and the sectors are bookkeeping only.
struct GradedAlgebra {
  int dim_even = 0;
  int dim_odd = 0;
  std::vector<LeftMultiplication> even_basis;
  BracketTensor f;
  std::vector<int> grading;
  bool is_super = false;

  int dim() const { return dim_even + dim_odd; }
};

LeftMultiplication lmul(const TripleSystem& ts, int j, int k);

/// Deterministic basis of the operator space: candidates lmul(j,k) scanned in
/// lexicographic order (j < k when ts.epsilon = -1, where the diagonal
/// vanishes; j <= k when ts.epsilon = +1), keeping the first independent ones.
std::vector<LeftMultiplication> operator_span(const TripleSystem& ts);

/// Builds the graded algebra from a Lie (super = false) or anti-Lie
/// (super = true) triple system:
///   even-even: matrix commutator, expressed over the chosen operator basis;
///   even-odd:  the operator action on V, and its negative in reverse order;
///   odd-odd:   [x, y] = the operator built from (x, y), expressed over the
///              operator basis.
/// By default the input is re-verified first (check_lie_triple with
/// eps = +1 / -1 per super) and AxiomCheckFailed is thrown on violation;
/// force = true skips that for pipelines that already verified. Throws
/// ClosureViolation if any bracket falls outside the operator span, which
/// can only happen for inputs that do not satisfy the triple-system axioms.
GradedAlgebra canonical(const TripleSystem& ts, bool super, bool force = false,
                        const CheckOptions& opts = {});

/// Cyclic Jacobi identity over all basis triples, by exact contraction of f.
AxiomReport check_jacobi(const GradedAlgebra& g, const CheckOptions& opts = {});

/// Graded Jacobi identity over all basis triples; the sign on each term
/// flips exactly when the two outer elements are both odd.
AxiomReport check_super_jacobi(const GradedAlgebra& g, const CheckOptions& opts = {});

}  // namespace triplex
