#pragma once

#include <optional>
#include <string>
#include <vector>

#include "triplex/linalg.hpp"

namespace triplex {

enum class SystemKind { LieTriple, AntiLieTriple, BFKTS, Doubled };

std::string to_string(SystemKind k);
std::optional<SystemKind> system_kind_from(const std::string& s);

struct BadForm : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct MissingForm : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct WrongKind : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct ClosureViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct AlphaPole : std::domain_error {
  using std::domain_error::domain_error;
};

/// A triple system on an N-dimensional space: product tensor, optional
/// bilinear form (Gram matrix), sign convention and a kind tag.
///
/// The tag records what the builder intended; the axiom checkers are the
/// source of truth. For kind Doubled, epsilon is the sign with which the
/// system satisfies the Lie/anti-Lie triple identities (the opposite of
/// the sign of the system it was doubled from).
struct TripleSystem {
  int dim = 0;
  Tensor3 c;
  std::optional<Mat> form;
  int epsilon = -1;
  SystemKind kind = SystemKind::BFKTS;
};

/// One violated identity: which axiom, at which basis tuple (zero-based),
/// with the exact left-minus-right residual vector.
struct AxiomFailure {
  std::string axiom;
  std::vector<int> indices;
  Vec residual;
};

/// Outcome of an exhaustive axiom suite. Only the first max_recorded
/// failures are stored in full; total_failures counts all of them.
struct AxiomReport {
  long long identities = 0;
  long long total_failures = 0;
  std::vector<AxiomFailure> failures;

  bool passed() const { return total_failures == 0; }
};

struct CheckOptions {
  int jobs = 1;
  int max_recorded = 100;
};

/// Trilinear contraction of the product tensor against arbitrary vectors.
Vec tri(const TripleSystem& ts, const Vec& x, const Vec& y, const Vec& z);

/// Lie (eps = -1) / anti-Lie (eps = +1) triple system identities, checked
/// exhaustively over basis tuples: pair symmetry and the cyclic sum over all
/// N^3 triples, the derivation identity over all N^5 quintuples.
/// Multilinearity makes basis tuples sufficient.
AxiomReport check_lie_triple(const TripleSystem& ts, int eps,
                             const CheckOptions& opts = {});

/// Balanced Freudenthal-Kantor identities for sign eps, exhaustive over basis
/// tuples (N^3 + N^3 + N^5). Requires the bilinear form.
AxiomReport check_bfkts(const TripleSystem& ts, int eps,
                        const CheckOptions& opts = {});

Mat orthonormal_gram(int n);
/// Block form [[0, I], [-I, 0]]; n must be even.
Mat symplectic_gram(int n);

/// Triple product [x,y,z] = <x|z>y + eps <y|z>x. Gram must satisfy
/// G^T = -eps G; for eps = +1 it must also be nondegenerate with n even.
TripleSystem build_form_triple(int n, const Mat& gram, int eps);

/// Triple product xyz = <x|z>y - eps <x|y>z + eps <y|z>x (kind BFKTS).
TripleSystem build_bfkts_basic(int n, const Mat& gram, int eps);

/// The four-dimensional one-parameter family
///   e_j e_k e_l = sigma * sum_m eps_{jklm} e_m
///                 - delta_{kl} e_j + delta_{jl} e_k + delta_{jk} e_l
/// over an orthonormal basis, with the orientation eps_{0123} = +1
/// (zero-based). Its canonical double generates D(2,1;alpha).
TripleSystem build_example1(const Rational& sigma);

/// The octonion product
///   xyz = (1/3)(x * conj(y)) * z - (4/3)<y|z>x + (4/3)<x|z>y + (2/3)<x|y>z
/// on all eight dimensions; the coefficients are the unique multiples of the
/// printed family that satisfy the balanced axioms over the orthonormal
/// form. Its canonical double generates F(4).
TripleSystem build_example2();

/// The associator-based product
///   xyz = -(1/4)[(x*y)*z - x*(y*z)] - <y|z>x + <x|z>y + <x|y>z
/// on the seven imaginary octonion units. Closure off the unit is an exact
/// property of the associator; a nonzero unit component would throw
/// ClosureViolation. Its canonical double generates G(3).
TripleSystem build_example3();

/// Doubling to W = V + V. For input basis e_j, indices 0..N-1 are the top
/// copy and N..2N-1 the bottom copy. The output satisfies the Lie/anti-Lie
/// identities with the flipped sign, so the result carries
/// epsilon = -ts.epsilon and no bilinear form (the form is baked into the
/// product). Input must be kind BFKTS with a form.
TripleSystem double_system(const TripleSystem& ts);

/// alpha = (1 - sigma) / (1 + sigma). Throws AlphaPole at sigma = -1.
Rational alpha_from_sigma(const Rational& sigma);

/// alpha in {0, -1}: the algebra exists but degenerates out of the simple
/// one-parameter family.
bool alpha_degenerate(const Rational& alpha);

/// Totally antisymmetric symbol on four zero-based indices, (0,1,2,3) -> +1.
int levi_civita4(int j, int k, int l, int m);

}  // namespace triplex
