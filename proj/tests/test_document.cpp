#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "triplex/document.hpp"

using namespace triplex;

namespace {

Json system_doc(const TripleSystem& ts) {
  Json doc;
  Json meta;
  meta["format"] = "triplex-1";
  meta["doc"] = "triple-system";
  meta["kind"] = to_string(ts.kind);
  meta["epsilon"] = ts.epsilon;
  meta["dim"] = ts.dim;
  doc["meta"] = meta;
  put_system_sections(doc, ts);
  return doc;
}

}  // namespace

TEST_CASE("rational strings parse back to themselves") {
  for (const char* s : {"0", "1", "-1", "2/3", "-7/5", "123456789123456789/2"}) {
    CHECK(rational_str(parse_rational(s)) == s);
  }
  CHECK(rational_str(parse_rational("-4/6")) == "-2/3");
  CHECK(rational_str(parse_rational("4/2")) == "2");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("triple-system documents round-trip losslessly") {
  TripleSystem ts = build_example1(parse_rational("5/3"));
  Json doc = system_doc(ts);
  std::string text = render_document(doc);

  TripleSystem back = system_from_document(parse_document(text));
  CHECK(back.dim == ts.dim);
  CHECK(back.epsilon == ts.epsilon);
  CHECK(back.kind == ts.kind);
  CHECK(back.c == ts.c);
  REQUIRE(back.form.has_value());
  CHECK(exact_eq(*back.form, *ts.form));
}

TEST_CASE("a doubled system document carries no form") {
  TripleSystem d = double_system(build_example1(Rational(2)));
  Json doc = system_doc(d);
  CHECK_FALSE(doc.contains("form"));
  TripleSystem back = system_from_document(doc);
  CHECK_FALSE(back.form.has_value());
  CHECK(back.c == d.c);
}

TEST_CASE("rendering is deterministic and parse-stable") {
  TripleSystem ts = build_example2();
  std::string a = render_document(system_doc(ts));
  std::string b = render_document(system_doc(ts));
  CHECK(a == b);
  CHECK(render_document(parse_document(a)) == a);
}

TEST_CASE("graded-algebra sections round-trip") {
  GradedAlgebra g = canonical(build_form_triple(2, symplectic_gram(2), +1), true);
  Json doc;
  Json meta;
  meta["doc"] = "graded-algebra";
  meta["super"] = true;
  doc["meta"] = meta;
  put_algebra_sections(doc, g);

  GradedAlgebra back = algebra_from_document(doc);
  CHECK(back.is_super == g.is_super);
  CHECK(back.dim_even == g.dim_even);
  CHECK(back.dim_odd == g.dim_odd);
  CHECK(back.f == g.f);
  CHECK(back.grading == g.grading);
}

TEST_CASE("malformed documents are rejected") {
  TripleSystem ts = build_example1(Rational(0));
  Json good = system_doc(ts);

  Json no_meta = good;
  no_meta.erase("meta");
  CHECK_THROWS_AS(system_from_document(no_meta), DocumentError);

  Json bad_eps = good;
  bad_eps["meta"]["epsilon"] = 2;
  CHECK_THROWS_AS(system_from_document(bad_eps), DocumentError);

  Json bad_kind = good;
  bad_kind["meta"]["kind"] = "mystery";
  CHECK_THROWS_AS(system_from_document(bad_kind), DocumentError);

  Json bad_index = good;
  bad_index["tensor"].push_back(Json::array({9, 0, 0, 0, "1"}));
  CHECK_THROWS_AS(system_from_document(bad_index), DocumentError);

  Json bad_value = good;
  bad_value["tensor"][0][4] = "not-a-number";
  CHECK_THROWS_AS(system_from_document(bad_value), DocumentError);

  Json dup = good;
  dup["tensor"].push_back(dup["tensor"][0]);
  CHECK_THROWS_AS(system_from_document(dup), DocumentError);

  CHECK_THROWS_AS(parse_document("not json at all"), DocumentError);
  CHECK_THROWS_AS(parse_document("[1,2,3]"), DocumentError);
}

TEST_CASE("grading must be even-then-odd signs") {
  Json doc;
  Json meta;
  meta["doc"] = "graded-algebra";
  meta["super"] = true;
  doc["meta"] = meta;
  doc["grading"] = Json::array({1, -1, 1});
  doc["bracket"] = Json::array();
  CHECK_THROWS_AS(algebra_from_document(doc), DocumentError);

  doc["grading"] = Json::array({1, 0});
  CHECK_THROWS_AS(algebra_from_document(doc), DocumentError);
}

TEST_CASE("check records serialize outcome counts and samples") {
  TripleSystem ts = build_example1(Rational(0));
  ts.c(0, 0, 0, 1) += 1;
  AxiomReport rep = check_bfkts(ts, -1);
  Json c = check_json("bfkts", -1, rep);
  CHECK(c["name"] == "bfkts");
  CHECK(c["eps"] == -1);
  CHECK(c["passed"] == false);
  CHECK(c["failures"].get<long long>() == rep.total_failures);
  REQUIRE(c.contains("sample"));
  CHECK(c["sample"].size() <= 10);
  CHECK(c["sample"][0].contains("axiom"));
  CHECK(c["sample"][0].contains("at"));
  CHECK(c["sample"][0].contains("residual"));
}

TEST_CASE("tensor records are sparse") {
  Tensor3 t(3);
  t(1, 0, 2, 1) = Rational(7, 2);
  Json records = tensor_records(t);
  REQUIRE(records.size() == 1);
  CHECK(records[0] == Json::array({1, 0, 2, 1, "7/2"}));
}
