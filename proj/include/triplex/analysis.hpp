#pragma once

#include <string>
#include <vector>

#include "triplex/canon.hpp"

namespace triplex {

/// Computable evidence about a constructed algebra. dim_even / dim_odd are
/// the Z2 dimensions of the algebra as an algebra: a plain Lie algebra
/// reports (total, 0) regardless of how it was assembled.
struct AlgebraProfile {
  int dim_even = 0;
  int dim_odd = 0;
  int killing_rank = 0;
  int derived_dim = 0;
  int center_dim = 0;
  std::vector<std::string> candidate_names;
};

/// Matrix of ad(e_i) = [e_i, .] in the graded basis.
Mat adjoint(const GradedAlgebra& g, int i);

/// B(i,j) = str(ad e_i . ad e_j): supertrace (even diagonal block minus odd
/// diagonal block) when is_super, plain trace otherwise.
Mat supertrace_form(const GradedAlgebra& g);

/// B([X,Y],Z) = B(X,[Y,Z]) over all basis triples, for B = supertrace_form(g).
AxiomReport invariance_check(const GradedAlgebra& g);
/// Same identity against a caller-supplied form.
AxiomReport invariance_check(const GradedAlgebra& g, const Mat& b);

/// Solves the invariance equations exactly for an even, supersymmetric
/// bilinear form. When the solution space is one-dimensional (the case for a
/// simple algebra) returns its generator; otherwise nullopt. Some simple
/// superalgebras have an identically zero adjoint trace form, and this is the
/// nondegeneracy instrument that still works there.
std::optional<Mat> distinguished_invariant_form(const GradedAlgebra& g);

/// Signature lookup. Matches only when the trace form has full rank; returns
/// every name whose signature fits, since signatures can genuinely collide.
std::vector<std::string> identify(const AlgebraProfile& profile);

/// Dimensions, invariant-form rank, derived-subalgebra and center dimensions,
/// and the name candidates. killing_rank is the rank of the adjoint trace
/// form; when that form is identically zero on a perfect algebra it falls
/// back to the rank of the distinguished invariant form.
AlgebraProfile profile(const GradedAlgebra& g);

}  // namespace triplex
