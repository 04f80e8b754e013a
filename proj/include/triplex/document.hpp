#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "triplex/analysis.hpp"
#include "triplex/canon.hpp"
#include "triplex/triplesys.hpp"

namespace triplex {

/// Interchange documents are JSON with insertion-ordered keys and every
/// scalar value exact: rationals travel as canonical "p/q" strings, indices
/// as zero-based integers. Rendering is deterministic, so equal objects
/// produce byte-identical documents.
using Json = nlohmann::ordered_json;

struct DocumentError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Sparse records [m, j, k, l, "p/q"] in (j, k, l, m) order.
Json tensor_records(const Tensor3& t);
Tensor3 tensor_from_records(const Json& records, int dim);

/// Sparse records [i, j, "p/q"] in row-major order.
Json form_records(const Mat& g);
Mat form_from_records(const Json& records, int n);

/// Sparse records [m, i, j, "p/q"] in (i, j, m) order.
Json bracket_records(const BracketTensor& f);
BracketTensor bracket_from_records(const Json& records, int dim);

/// One axiom-suite outcome for the meta.checks list, with up to ten sample
/// failure tuples.
Json check_json(const std::string& name, std::optional<int> eps, const AxiomReport& rep);

Json profile_json(const AlgebraProfile& p);

/// The conventions every document embeds so an independent implementation
/// can reproduce the tensors byte for byte.
Json conventions_json();

/// Fills the non-meta sections of a triple-system document.
void put_system_sections(Json& doc, const TripleSystem& ts);
TripleSystem system_from_document(const Json& doc);

/// Fills the non-meta sections of a graded-algebra document (on top of the
/// source system's sections).
void put_algebra_sections(Json& doc, const GradedAlgebra& g);
GradedAlgebra algebra_from_document(const Json& doc);

std::string render_document(const Json& doc);
Json parse_document(const std::string& text);
Json load_document_file(const std::string& path);

}  // namespace triplex
