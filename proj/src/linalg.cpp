#include "triplex/linalg.hpp"

namespace triplex {

Vec flatten(const Mat& m) {
  Vec v(m.size());
  Eigen::Index k = 0;
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i) v[k++] = m(i, j);
  return v;
}

bool SpanSolver::insert(const Vec& v) {
  if (len_ < 0) {
    len_ = v.size();
  } else if (v.size() != len_) {
    throw DimensionMismatch("SpanSolver: vector length changed between insertions");
  }

  Vec w = v;
  std::vector<Rational> combo(static_cast<std::size_t>(n_inserted_) + 1);
  combo[static_cast<std::size_t>(n_inserted_)] = 1;
  ++n_inserted_;

  for (const EchelonRow& row : rows_) {
    Rational c = w[row.lead];
    if (c == 0) continue;
    for (Eigen::Index i = 0; i < len_; ++i) {
      if (row.value[i] != 0) w[i] -= c * row.value[i];
    }
    for (std::size_t i = 0; i < row.combo.size(); ++i) combo[i] -= c * row.combo[i];
  }

  Eigen::Index lead = -1;
  for (Eigen::Index i = 0; i < len_; ++i) {
    if (w[i] != 0) {
      lead = i;
      break;
    }
  }
  if (lead < 0) return false;

  Rational inv = Rational(1) / w[lead];
  for (Eigen::Index i = lead; i < len_; ++i) {
    if (w[i] != 0) w[i] *= inv;
  }
  for (Rational& c : combo) c *= inv;
  rows_.push_back({std::move(w), std::move(combo), lead});
  return true;
}

std::optional<std::vector<Rational>> SpanSolver::solve(const Vec& target) const {
  if (len_ < 0) {
    if (exact_zero(target)) return std::vector<Rational>{};
    return std::nullopt;
  }
  if (target.size() != len_) {
    throw DimensionMismatch("SpanSolver: target length does not match the span");
  }

  Vec w = target;
  std::vector<Rational> coeff(static_cast<std::size_t>(n_inserted_));
  for (const EchelonRow& row : rows_) {
    Rational c = w[row.lead];
    if (c == 0) continue;
    for (Eigen::Index i = 0; i < len_; ++i) {
      if (row.value[i] != 0) w[i] -= c * row.value[i];
    }
    for (std::size_t i = 0; i < row.combo.size(); ++i) coeff[i] += c * row.combo[i];
  }
  if (!exact_zero(w)) return std::nullopt;
  return coeff;
}

std::optional<std::vector<Rational>> solve_in_span(const std::vector<Mat>& basis,
                                                   const Mat& target) {
  for (const Mat& b : basis) {
    if (b.rows() != target.rows() || b.cols() != target.cols()) {
      throw DimensionMismatch("solve_in_span: matrices must share one shape");
    }
  }
  SpanSolver span;
  for (const Mat& b : basis) span.insert(flatten(b));
  return span.solve(flatten(target));
}

std::vector<int> gauss_select(const std::vector<Mat>& candidates) {
  SpanSolver span;
  std::vector<int> kept;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (span.insert(flatten(candidates[i]))) kept.push_back(static_cast<int>(i));
  }
  return kept;
}

}  // namespace triplex
