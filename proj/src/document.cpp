#include "triplex/document.hpp"

#include <fstream>
#include <sstream>

#include "triplex/octonion.hpp"

namespace triplex {

namespace {

int require_index(const Json& v, int limit, const char* what) {
  if (!v.is_number_integer()) throw DocumentError(std::string(what) + ": index is not an integer");
  const long long i = v.get<long long>();
  if (i < 0 || i >= limit) throw DocumentError(std::string(what) + ": index out of range");
  return static_cast<int>(i);
}

Rational require_rational(const Json& v, const char* what) {
  if (!v.is_string()) throw DocumentError(std::string(what) + ": value is not a string");
  try {
    return parse_rational(v.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw DocumentError(std::string(what) + ": " + e.what());
  }
}

const Json& require_field(const Json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) throw DocumentError(std::string("document: missing '") + key + "'");
  return *it;
}

}  // namespace

Json tensor_records(const Tensor3& t) {
  Json out = Json::array();
  const int n = t.dim();
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l)
        for (int m = 0; m < n; ++m) {
          const Rational& v = t(m, j, k, l);
          if (v != 0) out.push_back(Json::array({m, j, k, l, rational_str(v)}));
        }
  return out;
}

Tensor3 tensor_from_records(const Json& records, int dim) {
  if (!records.is_array()) throw DocumentError("tensor: not an array");
  Tensor3 t(dim);
  for (const Json& r : records) {
    if (!r.is_array() || r.size() != 5) throw DocumentError("tensor: bad record shape");
    const int m = require_index(r[0], dim, "tensor");
    const int j = require_index(r[1], dim, "tensor");
    const int k = require_index(r[2], dim, "tensor");
    const int l = require_index(r[3], dim, "tensor");
    if (t(m, j, k, l) != 0) throw DocumentError("tensor: duplicate record");
    t(m, j, k, l) = require_rational(r[4], "tensor");
  }
  return t;
}

Json form_records(const Mat& g) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < g.rows(); ++i)
    for (Eigen::Index j = 0; j < g.cols(); ++j) {
      if (g(i, j) != 0) {
        out.push_back(Json::array(
            {static_cast<int>(i), static_cast<int>(j), rational_str(g(i, j))}));
      }
    }
  return out;
}

Mat form_from_records(const Json& records, int n) {
  if (!records.is_array()) throw DocumentError("form: not an array");
  Mat g = Mat::Zero(n, n);
  for (const Json& r : records) {
    if (!r.is_array() || r.size() != 3) throw DocumentError("form: bad record shape");
    const int i = require_index(r[0], n, "form");
    const int j = require_index(r[1], n, "form");
    if (g(i, j) != 0) throw DocumentError("form: duplicate record");
    g(i, j) = require_rational(r[2], "form");
  }
  return g;
}

Json bracket_records(const BracketTensor& f) {
  Json out = Json::array();
  const int d = f.dim();
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int m = 0; m < d; ++m) {
        const Rational& v = f(m, i, j);
        if (v != 0) out.push_back(Json::array({m, i, j, rational_str(v)}));
      }
  return out;
}

BracketTensor bracket_from_records(const Json& records, int dim) {
  if (!records.is_array()) throw DocumentError("bracket: not an array");
  BracketTensor f(dim);
  for (const Json& r : records) {
    if (!r.is_array() || r.size() != 4) throw DocumentError("bracket: bad record shape");
    const int m = require_index(r[0], dim, "bracket");
    const int i = require_index(r[1], dim, "bracket");
    const int j = require_index(r[2], dim, "bracket");
    if (f(m, i, j) != 0) throw DocumentError("bracket: duplicate record");
    f(m, i, j) = require_rational(r[3], "bracket");
  }
  return f;
}

Json check_json(const std::string& name, std::optional<int> eps, const AxiomReport& rep) {
  Json c;
  c["name"] = name;
  if (eps) c["eps"] = *eps;
  c["passed"] = rep.passed();
  c["identities"] = rep.identities;
  c["failures"] = rep.total_failures;
  if (!rep.failures.empty()) {
    Json sample = Json::array();
    int count = 0;
    for (const AxiomFailure& f : rep.failures) {
      if (count++ >= 10) break;
      Json residual = Json::array();
      for (Eigen::Index i = 0; i < f.residual.size(); ++i) {
        residual.push_back(rational_str(f.residual[i]));
      }
      sample.push_back(Json{{"axiom", f.axiom}, {"at", f.indices}, {"residual", residual}});
    }
    c["sample"] = sample;
  }
  return c;
}

Json profile_json(const AlgebraProfile& p) {
  Json out;
  out["dim_even"] = p.dim_even;
  out["dim_odd"] = p.dim_odd;
  out["killing_rank"] = p.killing_rank;
  out["derived_dim"] = p.derived_dim;
  out["center_dim"] = p.center_dim;
  out["names"] = p.candidate_names;
  return out;
}

Json conventions_json() {
  Json oct = Json::array();
  for (const auto& t : kFanoTriples) oct.push_back(Json::array({t[0], t[1], t[2]}));
  Json out;
  out["indices"] = "zero-based";
  out["octonion_triples"] = oct;
  out["levi_civita_orientation"] = "+1 on (0,1,2,3)";
  return out;
}

void put_system_sections(Json& doc, const TripleSystem& ts) {
  if (ts.form) doc["form"] = form_records(*ts.form);
  doc["tensor"] = tensor_records(ts.c);
}

TripleSystem system_from_document(const Json& doc) {
  const Json& meta = require_field(doc, "meta");
  TripleSystem ts;
  const Json& dim = require_field(meta, "dim");
  if (!dim.is_number_integer() || dim.get<long long>() < 0 || dim.get<long long>() > 4096) {
    throw DocumentError("meta.dim: not a sane dimension");
  }
  ts.dim = dim.get<int>();

  const Json& eps = require_field(meta, "epsilon");
  if (!eps.is_number_integer() || (eps.get<int>() != 1 && eps.get<int>() != -1)) {
    throw DocumentError("meta.epsilon: must be +1 or -1");
  }
  ts.epsilon = eps.get<int>();

  const Json& kind = require_field(meta, "kind");
  if (!kind.is_string()) throw DocumentError("meta.kind: not a string");
  auto k = system_kind_from(kind.get<std::string>());
  if (!k) throw DocumentError("meta.kind: unknown kind '" + kind.get<std::string>() + "'");
  ts.kind = *k;

  ts.c = tensor_from_records(require_field(doc, "tensor"), ts.dim);
  if (doc.contains("form")) ts.form = form_from_records(doc["form"], ts.dim);
  return ts;
}

void put_algebra_sections(Json& doc, const GradedAlgebra& g) {
  doc["grading"] = g.grading;
  doc["bracket"] = bracket_records(g.f);
}

GradedAlgebra algebra_from_document(const Json& doc) {
  const Json& meta = require_field(doc, "meta");
  GradedAlgebra g;

  const Json& super = require_field(meta, "super");
  if (!super.is_boolean()) throw DocumentError("meta.super: not a boolean");
  g.is_super = super.get<bool>();

  const Json& grading = require_field(doc, "grading");
  if (!grading.is_array()) throw DocumentError("grading: not an array");
  for (const Json& s : grading) {
    if (!s.is_number_integer() || (s.get<int>() != 1 && s.get<int>() != -1)) {
      throw DocumentError("grading: entries must be +1 or -1");
    }
    g.grading.push_back(s.get<int>());
  }
  // even-then-odd basis order
  bool seen_odd = false;
  for (int s : g.grading) {
    if (s < 0) {
      seen_odd = true;
      ++g.dim_odd;
    } else {
      if (seen_odd) throw DocumentError("grading: basis must be ordered even-then-odd");
      ++g.dim_even;
    }
  }

  g.f = bracket_from_records(require_field(doc, "bracket"), g.dim());
  return g;
}

std::string render_document(const Json& doc) { return doc.dump(2) + "\n"; }

Json parse_document(const std::string& text) {
  Json doc = Json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw DocumentError("document: invalid JSON");
  if (!doc.is_object()) throw DocumentError("document: not a JSON object");
  return doc;
}

Json load_document_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DocumentError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str());
}

}  // namespace triplex
