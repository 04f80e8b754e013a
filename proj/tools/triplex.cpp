// Command-line driver: build triple systems from the named families, verify
// their axiom suites, double them, run the canonical construction, analyze
// the result, and exchange everything as exact JSON documents.
//
// Exit codes: 0 all checks passed, 2 usage or input error, 3 a mathematical
// check failed. Indices are zero-based everywhere, in files and in messages.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "triplex/analysis.hpp"
#include "triplex/canon.hpp"
#include "triplex/document.hpp"
#include "triplex/triplesys.hpp"

using namespace triplex;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FamilyArgs {
  std::string family;
  int n = 0;
  int eps = 0;  // 0 = not given
  std::string sigma;
  std::string gram = "orthonormal";
};

struct CommonArgs {
  std::string out;
  int jobs = 1;
  bool force = false;
};

Mat gram_from_spec(const std::string& spec, int n) {
  if (spec == "orthonormal") return orthonormal_gram(n);
  if (spec == "symplectic") return symplectic_gram(n);
  // anything else is a path to {"n": k, "entries": [[i, j, "p/q"], ...]}
  Json doc = load_document_file(spec);
  if (!doc.contains("n") || !doc["n"].is_number_integer()) {
    throw UsageError("gram file '" + spec + "' needs an integer field 'n'");
  }
  const int fn = doc["n"].get<int>();
  if (fn != n) throw UsageError("gram file dimension does not match --n");
  if (!doc.contains("entries")) throw UsageError("gram file needs 'entries'");
  return form_from_records(doc["entries"], n);
}

// Builds the described system and records the descriptor fields that were
// actually used, in a fixed order, for the document meta.
TripleSystem make_system(const FamilyArgs& a, Json& params, std::optional<Rational>& alpha) {
  if (a.family == "form-triple" || a.family == "bfkts-basic") {
    if (a.n <= 0) throw UsageError(a.family + " requires --n");
    int eps = a.eps;
    if (a.family == "form-triple" && eps == 0) throw UsageError("form-triple requires --eps");
    if (eps == 0) eps = -1;
    if (eps != 1 && eps != -1) throw UsageError("--eps must be 1 or -1");
    Mat gram = gram_from_spec(a.gram, a.n);
    params["n"] = a.n;
    params["eps"] = eps;
    params["gram"] = a.gram;
    return a.family == "form-triple" ? build_form_triple(a.n, gram, eps)
                                     : build_bfkts_basic(a.n, gram, eps);
  }
  if (a.family == "example1") {
    if (a.sigma.empty()) throw UsageError("example1 requires --sigma");
    Rational sigma = parse_rational(a.sigma);
    params["sigma"] = rational_str(sigma);
    if (sigma != -1) alpha = alpha_from_sigma(sigma);
    return build_example1(sigma);
  }
  if (a.family == "example2") return build_example2();
  if (a.family == "example3") return build_example3();
  throw UsageError("unknown family '" + a.family +
                   "' (expected form-triple, bfkts-basic, example1, example2, example3)");
}

AxiomReport run_system_suite(const TripleSystem& ts, const CheckOptions& opts,
                             std::string& name, std::optional<int>& eps_used) {
  if (ts.kind == SystemKind::BFKTS) {
    name = "bfkts";
    eps_used = ts.epsilon;
    return check_bfkts(ts, ts.epsilon, opts);
  }
  name = "lie-triple";
  eps_used = ts.epsilon;
  return check_lie_triple(ts, ts.epsilon, opts);
}

void print_report(const std::string& name, const AxiomReport& rep) {
  std::cerr << "check " << name << ": " << (rep.passed() ? "passed" : "FAILED") << " ("
            << rep.identities << " identities";
  if (!rep.passed()) std::cerr << ", " << rep.total_failures << " failures";
  std::cerr << ")\n";
  int shown = 0;
  for (const AxiomFailure& f : rep.failures) {
    if (shown++ >= 10) break;
    std::cerr << "  " << f.axiom << " at (";
    for (std::size_t i = 0; i < f.indices.size(); ++i) {
      if (i) std::cerr << ",";
      std::cerr << f.indices[i];
    }
    std::cerr << ")\n";
  }
}

void emit(const Json& doc, const std::string& out) {
  const std::string text = render_document(doc);
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw UsageError("cannot write '" + out + "'");
  f << text;
}

Json meta_header(const char* doc_type, const std::string& family, const Json& params,
                 const TripleSystem& ts) {
  Json meta;
  meta["format"] = "triplex-1";
  meta["doc"] = doc_type;
  if (!family.empty()) meta["family"] = family;
  if (!params.empty()) meta["parameters"] = params;
  meta["kind"] = to_string(ts.kind);
  meta["epsilon"] = ts.epsilon;
  meta["dim"] = ts.dim;
  return meta;
}

int cmd_build(const FamilyArgs& fa, const CommonArgs& ca, bool report_alpha) {
  Json params;
  std::optional<Rational> alpha;
  TripleSystem ts = make_system(fa, params, alpha);

  CheckOptions opts{ca.jobs, 100};
  std::string suite;
  std::optional<int> eps_used;
  AxiomReport rep = run_system_suite(ts, opts, suite, eps_used);
  print_report(suite, rep);

  if (report_alpha && fa.family == "example1") {
    if (!alpha) {
      std::cerr << "warning: alpha has a pole at sigma = -1; no alpha for this system\n";
    } else {
      std::cerr << "alpha = " << rational_str(*alpha);
      if (alpha_degenerate(*alpha)) std::cerr << "  (degenerate member of the family)";
      std::cerr << "\n";
    }
  }

  Json doc;
  Json meta = meta_header("triple-system", fa.family, params, ts);
  if (alpha) meta["alpha"] = rational_str(*alpha);
  meta["checks"] = Json::array({check_json(suite, eps_used, rep)});
  meta["conventions"] = conventions_json();
  doc["meta"] = meta;
  put_system_sections(doc, ts);
  emit(doc, ca.out);
  return rep.passed() ? 0 : 3;
}

int cmd_verify(const std::string& path, const CommonArgs& ca) {
  Json doc = load_document_file(path);
  CheckOptions opts{ca.jobs, 100};
  const std::string dtype = doc.contains("meta") && doc["meta"].contains("doc")
                                ? doc["meta"]["doc"].get<std::string>()
                                : "";
  bool ok = true;
  if (dtype == "triple-system") {
    TripleSystem ts = system_from_document(doc);
    std::cerr << "kind claim: " << to_string(ts.kind) << " (epsilon " << ts.epsilon << ")\n";
    std::string suite;
    std::optional<int> eps_used;
    AxiomReport rep = run_system_suite(ts, opts, suite, eps_used);
    print_report(suite, rep);
    ok = rep.passed();
  } else if (dtype == "graded-algebra") {
    GradedAlgebra g = algebra_from_document(doc);
    AxiomReport jac = g.is_super ? check_super_jacobi(g, opts) : check_jacobi(g, opts);
    print_report(g.is_super ? "super-jacobi" : "jacobi", jac);
    AxiomReport inv = invariance_check(g);
    print_report("invariance", inv);
    ok = jac.passed() && inv.passed();
  } else {
    throw DocumentError("meta.doc must be 'triple-system' or 'graded-algebra'");
  }
  return ok ? 0 : 3;
}

int cmd_double(const std::string& path, const CommonArgs& ca) {
  Json doc = load_document_file(path);
  TripleSystem ts = system_from_document(doc);
  TripleSystem d = double_system(ts);

  Json checks = Json::array();
  bool ok = true;
  if (!ca.force) {
    CheckOptions opts{ca.jobs, 100};
    AxiomReport rep = check_lie_triple(d, d.epsilon, opts);
    print_report("lie-triple", rep);
    checks.push_back(check_json("lie-triple", d.epsilon, rep));
    ok = rep.passed();
  }

  Json params = doc["meta"].contains("parameters") ? doc["meta"]["parameters"] : Json::object();
  params["doubled"] = true;
  const std::string family =
      doc["meta"].contains("family") ? doc["meta"]["family"].get<std::string>() : "";
  Json out_doc;
  Json meta = meta_header("triple-system", family, params, d);
  meta["checks"] = checks;
  meta["conventions"] = conventions_json();
  out_doc["meta"] = meta;
  put_system_sections(out_doc, d);
  emit(out_doc, ca.out);
  return ok ? 0 : 3;
}

int cmd_construct(const FamilyArgs& fa, const CommonArgs& ca, bool doubled) {
  Json params;
  std::optional<Rational> alpha;
  TripleSystem ts = make_system(fa, params, alpha);
  CheckOptions opts{ca.jobs, 100};

  Json checks = Json::array();
  if (!ca.force) {
    std::string suite;
    std::optional<int> eps_used;
    AxiomReport rep = run_system_suite(ts, opts, suite, eps_used);
    print_report(suite, rep);
    checks.push_back(check_json(suite, eps_used, rep));
    if (!rep.passed()) return 3;
  }

  TripleSystem sys = ts;
  if (doubled) {
    if (ts.kind != SystemKind::BFKTS) {
      throw UsageError("--doubled applies to the balanced families only");
    }
    params["doubled"] = true;
    sys = double_system(ts);
    if (!ca.force) {
      AxiomReport rep = check_lie_triple(sys, sys.epsilon, opts);
      print_report("lie-triple", rep);
      checks.push_back(check_json("lie-triple", sys.epsilon, rep));
      if (!rep.passed()) return 3;
    }
  } else if (ts.kind == SystemKind::BFKTS) {
    throw UsageError("balanced families need --doubled before the canonical construction");
  }

  const bool super = sys.epsilon == +1;
  GradedAlgebra g = canonical(sys, super, /*force=*/true, opts);

  AxiomReport jac = super ? check_super_jacobi(g, opts) : check_jacobi(g, opts);
  print_report(super ? "super-jacobi" : "jacobi", jac);
  checks.push_back(check_json(super ? "super-jacobi" : "jacobi", std::nullopt, jac));

  AxiomReport inv = invariance_check(g);
  print_report("invariance", inv);
  checks.push_back(check_json("invariance", std::nullopt, inv));

  AlgebraProfile prof = profile(g);
  std::cerr << "even " << prof.dim_even << "  odd " << prof.dim_odd << "  total "
            << (g.dim()) << "  invariant-form rank " << prof.killing_rank << "\n";
  std::cerr << "names:";
  if (prof.candidate_names.empty()) std::cerr << " (unrecognized)";
  for (const std::string& n : prof.candidate_names) std::cerr << " " << n;
  std::cerr << "\n";

  Json doc;
  Json meta = meta_header("graded-algebra", fa.family, params, sys);
  meta["super"] = g.is_super;
  meta["dims"] = Json{{"even", g.dim_even}, {"odd", g.dim_odd}};
  if (alpha) meta["alpha"] = rational_str(*alpha);
  meta["checks"] = checks;
  meta["profile"] = profile_json(prof);
  meta["conventions"] = conventions_json();
  doc["meta"] = meta;
  put_system_sections(doc, sys);
  put_algebra_sections(doc, g);
  emit(doc, ca.out);

  return jac.passed() && inv.passed() ? 0 : 3;
}

int cmd_analyze(const std::string& path, const CommonArgs& ca) {
  Json doc = load_document_file(path);
  GradedAlgebra g = algebra_from_document(doc);
  AlgebraProfile prof = profile(g);
  AxiomReport inv = invariance_check(g);
  print_report("invariance", inv);
  std::cerr << "even " << prof.dim_even << "  odd " << prof.dim_odd << "  invariant-form rank "
            << prof.killing_rank << "  derived " << prof.derived_dim << "  center "
            << prof.center_dim << "\n";
  std::cerr << "names:";
  if (prof.candidate_names.empty()) std::cerr << " (unrecognized)";
  for (const std::string& n : prof.candidate_names) std::cerr << " " << n;
  std::cerr << "\n";

  if (!ca.out.empty()) {
    // refresh the stored profile and the invariance outcome
    Json checks = Json::array();
    if (doc["meta"].contains("checks")) {
      for (const Json& c : doc["meta"]["checks"]) {
        if (!c.contains("name") || c["name"] != "invariance") checks.push_back(c);
      }
    }
    checks.push_back(check_json("invariance", std::nullopt, inv));
    doc["meta"]["checks"] = checks;
    doc["meta"]["profile"] = profile_json(prof);
    emit(doc, ca.out);
  }
  return inv.passed() ? 0 : 3;
}

int cmd_export(const std::string& path, const CommonArgs& ca) {
  Json doc = load_document_file(path);
  // validate that the sections parse back into objects before re-emitting
  const std::string dtype = doc.contains("meta") && doc["meta"].contains("doc")
                                ? doc["meta"]["doc"].get<std::string>()
                                : "";
  if (dtype == "triple-system") {
    system_from_document(doc);
  } else if (dtype == "graded-algebra") {
    system_from_document(doc);
    algebra_from_document(doc);
  } else {
    throw DocumentError("meta.doc must be 'triple-system' or 'graded-algebra'");
  }
  emit(doc, ca.out);
  return 0;
}

int cmd_mutate(const std::string& path, const CommonArgs& ca, std::vector<int> at,
               const std::string& delta_str) {
  Json doc = load_document_file(path);
  if (!doc.contains("meta") || !doc["meta"].contains("doc") ||
      doc["meta"]["doc"] != "triple-system") {
    throw UsageError("mutate works on triple-system documents");
  }
  TripleSystem ts = system_from_document(doc);
  if (at.size() != 4) throw UsageError("--at needs four indices: m j k l");
  for (int i : at) {
    if (i < 0 || i >= ts.dim) throw UsageError("--at index out of range");
  }
  Rational delta = parse_rational(delta_str);
  ts.c(at[0], at[1], at[2], at[3]) += delta;

  CheckOptions opts{ca.jobs, 100};
  std::string suite;
  std::optional<int> eps_used;
  AxiomReport rep = run_system_suite(ts, opts, suite, eps_used);
  print_report(suite, rep);

  doc["meta"]["checks"] = Json::array({check_json(suite, eps_used, rep)});
  Json sections;
  put_system_sections(sections, ts);
  if (sections.contains("form")) doc["form"] = sections["form"];
  doc["tensor"] = sections["tensor"];
  emit(doc, ca.out);
  return rep.passed() ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "triplex: exact triple product systems and the Lie (super)algebras "
      "they generate"};
  app.require_subcommand(1);

  FamilyArgs fa_build, fa_construct;
  CommonArgs ca_build, ca_verify, ca_double, ca_construct, ca_analyze, ca_export, ca_mutate;
  bool report_alpha = false, doubled = false;
  std::string in_verify, in_double, in_analyze, in_export, in_mutate;
  std::vector<int> mutate_at;
  std::string mutate_delta;

  auto add_family = [](CLI::App* cmd, FamilyArgs& fa) {
    cmd->add_option("family", fa.family,
                    "form-triple | bfkts-basic | example1 | example2 | example3")
        ->required();
    cmd->add_option("--n", fa.n, "dimension (form-triple, bfkts-basic)");
    cmd->add_option("--eps", fa.eps, "sign convention, 1 or -1");
    cmd->add_option("--sigma", fa.sigma, "rational parameter p/q (example1)");
    cmd->add_option("--gram", fa.gram, "orthonormal | symplectic | path to a gram file");
  };
  auto add_common = [](CLI::App* cmd, CommonArgs& ca, bool with_force = true) {
    cmd->add_option("--out", ca.out, "write the document here instead of stdout");
    cmd->add_option("--jobs", ca.jobs, "worker threads for the exhaustive checks");
    if (with_force) cmd->add_flag("--force", ca.force, "skip re-verification");
  };

  CLI::App* build = app.add_subcommand("build", "build a system and run its axiom suite");
  add_family(build, fa_build);
  add_common(build, ca_build, false);
  build->add_flag("--report-alpha", report_alpha, "print alpha for example1");

  CLI::App* verify = app.add_subcommand("verify", "re-run the axiom suite of a document");
  verify->add_option("file", in_verify, "input document")->required();
  add_common(verify, ca_verify, false);

  CLI::App* dbl = app.add_subcommand("double", "double a balanced system document");
  dbl->add_option("file", in_double, "input document (kind bfkts)")->required();
  add_common(dbl, ca_double);

  CLI::App* construct =
      app.add_subcommand("construct", "full pipeline: build, check, construct, analyze");
  add_family(construct, fa_construct);
  construct->add_flag("--doubled", doubled, "double the system first (balanced families)");
  add_common(construct, ca_construct);

  CLI::App* analyze = app.add_subcommand("analyze", "profile a graded-algebra document");
  analyze->add_option("file", in_analyze, "input document")->required();
  add_common(analyze, ca_analyze, false);

  CLI::App* exp = app.add_subcommand("export", "validate and re-emit a document");
  exp->add_option("file", in_export, "input document")->required();
  add_common(exp, ca_export, false);

  CLI::App* mutate = app.add_subcommand("mutate", "perturb one tensor entry and re-check");
  mutate->add_option("file", in_mutate, "input triple-system document")->required();
  mutate->add_option("--at", mutate_at, "entry indices m j k l (zero-based)")
      ->expected(4)
      ->required();
  mutate->add_option("--delta", mutate_delta, "rational increment p/q")->required();
  add_common(mutate, ca_mutate, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (build->parsed()) return cmd_build(fa_build, ca_build, report_alpha);
    if (verify->parsed()) return cmd_verify(in_verify, ca_verify);
    if (dbl->parsed()) return cmd_double(in_double, ca_double);
    if (construct->parsed()) return cmd_construct(fa_construct, ca_construct, doubled);
    if (analyze->parsed()) return cmd_analyze(in_analyze, ca_analyze);
    if (exp->parsed()) return cmd_export(in_export, ca_export);
    if (mutate->parsed()) return cmd_mutate(in_mutate, ca_mutate, mutate_at, mutate_delta);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DocumentError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const AxiomCheckFailed& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const ClosureViolation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
