#include "sgforge/record.hpp"

#include <chrono>
#include <sstream>

#include "json.hpp"
#include "sgforge/tangent_cone.hpp"

namespace sgforge {

using nlohmann::json;

namespace {

template <class T>
void put(json& j, const char* key, const std::optional<T>& v) {
  if (v) j[key] = *v;
}

template <class T>
void get(const json& j, const char* key, std::optional<T>& v) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) {
    v.reset();
  } else {
    v = it->template get<T>();
  }
}

template <class T>
void get(const json& j, const char* key, T& v) {
  j.at(key).get_to(v);
}

json to_json(const StretchedRecord& s) {
  json j;
  j["stretched"] = s.stretched;
  j["ell"] = s.ell;
  put(j, "lambda", s.lambda);
  put(j, "mu", s.mu);
  put(j, "offending_element", s.offending_element);
  return j;
}

StretchedRecord stretched_from(const json& j) {
  StretchedRecord s;
  get(j, "stretched", s.stretched);
  get(j, "ell", s.ell);
  get(j, "lambda", s.lambda);
  get(j, "mu", s.mu);
  get(j, "offending_element", s.offending_element);
  return s;
}

json to_json(const CertificateRecord& c) {
  json j;
  j["branch"] = c.branch;
  j["j"] = c.j;
  j["a"] = c.a;
  put(j, "b", c.b);
  j["h"] = c.h;
  j["h1"] = c.h1;
  j["ell"] = c.ell;
  j["alpha"] = c.alpha;
  j["p"] = c.p;
  j["permuted_generators"] = c.permuted_generators;
  j["matrix"] = c.matrix;
  j["permuted_matrix"] = c.permuted_matrix;
  put(j, "common_difference", c.common_difference);
  put(j, "dimension", c.dimension);
  j["certified"] = c.certified;
  return j;
}

CertificateRecord certificate_from(const json& j) {
  CertificateRecord c;
  get(j, "branch", c.branch);
  get(j, "j", c.j);
  get(j, "a", c.a);
  get(j, "b", c.b);
  get(j, "h", c.h);
  get(j, "h1", c.h1);
  get(j, "ell", c.ell);
  get(j, "alpha", c.alpha);
  get(j, "p", c.p);
  get(j, "permuted_generators", c.permuted_generators);
  get(j, "matrix", c.matrix);
  get(j, "permuted_matrix", c.permuted_matrix);
  get(j, "common_difference", c.common_difference);
  get(j, "dimension", c.dimension);
  get(j, "certified", c.certified);
  return c;
}

json to_json(const TheoremRecord& t) {
  json j;
  j["in_hypothesis"] = t.in_hypothesis;
  put(j, "pf_h", t.pf_h);
  put(j, "pf_alpha", t.pf_alpha);
  j["condition2_attempted"] = t.condition2_attempted;
  if (t.certificate) j["certificate"] = to_json(*t.certificate);
  put(j, "condition2_error", t.condition2_error);
  j["condition2_message"] = t.condition2_message;
  j["ideal_generators"] = t.ideal_generators;
  j["betti_degrees"] = t.betti_degrees;
  put(j, "generators_error", t.generators_error);
  j["generators_message"] = t.generators_message;
  put(j, "minors_match_generators", t.minors_match_generators);
  put(j, "minors_same_structure", t.minors_same_structure);
  put(j, "shape_match", t.shape_match);
  j["notes"] = t.notes;
  j["falsifying"] = t.falsifying;
  return j;
}

TheoremRecord theorem_from(const json& j) {
  TheoremRecord t;
  get(j, "in_hypothesis", t.in_hypothesis);
  get(j, "pf_h", t.pf_h);
  get(j, "pf_alpha", t.pf_alpha);
  get(j, "condition2_attempted", t.condition2_attempted);
  if (auto it = j.find("certificate"); it != j.end() && !it->is_null()) t.certificate = certificate_from(*it);
  get(j, "condition2_error", t.condition2_error);
  get(j, "condition2_message", t.condition2_message);
  get(j, "ideal_generators", t.ideal_generators);
  get(j, "betti_degrees", t.betti_degrees);
  get(j, "generators_error", t.generators_error);
  get(j, "generators_message", t.generators_message);
  get(j, "minors_match_generators", t.minors_match_generators);
  get(j, "minors_same_structure", t.minors_same_structure);
  get(j, "shape_match", t.shape_match);
  get(j, "notes", t.notes);
  get(j, "falsifying", t.falsifying);
  return t;
}

json to_json(const TangentConeRecord& t) {
  json j;
  j["branch"] = t.branch;
  j["cm_formula"] = t.cm_formula;
  j["cm_sally"] = t.cm_sally;
  put(j, "sally_target", t.sally_target);
  put(j, "sally_order", t.sally_order);
  put(j, "sally_witness", t.sally_witness);
  put(j, "h1_bound", t.h1_bound);
  put(j, "ell_two_last", t.ell_two_last);
  put(j, "ell_two_iff", t.ell_two_iff);
  j["criterion_lhs"] = t.criterion_lhs;
  j["criterion_rhs"] = t.criterion_rhs;
  j["agrees"] = t.agrees;
  j["shortcuts_consistent"] = t.shortcuts_consistent;
  return j;
}

TangentConeRecord tangent_cone_from(const json& j) {
  TangentConeRecord t;
  get(j, "branch", t.branch);
  get(j, "cm_formula", t.cm_formula);
  get(j, "cm_sally", t.cm_sally);
  get(j, "sally_target", t.sally_target);
  get(j, "sally_order", t.sally_order);
  get(j, "sally_witness", t.sally_witness);
  get(j, "h1_bound", t.h1_bound);
  get(j, "ell_two_last", t.ell_two_last);
  get(j, "ell_two_iff", t.ell_two_iff);
  get(j, "criterion_lhs", t.criterion_lhs);
  get(j, "criterion_rhs", t.criterion_rhs);
  get(j, "agrees", t.agrees);
  get(j, "shortcuts_consistent", t.shortcuts_consistent);
  return t;
}

std::string join(const std::vector<Int>& v, const char* sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

std::string braces(const std::vector<Int>& v) { return "{" + join(v, ",") + "}"; }

const char* yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

bool RunRecord::falsifying() const {
  if (theorem.falsifying || tangent_cone_error) return true;
  return tangent_cone && (!tangent_cone->agrees || !tangent_cone->shortcuts_consistent);
}

StretchedRecord make_stretched_record(const NumericalSemigroup& H, const StretchedVerdict& v) {
  StretchedRecord s;
  if (const auto* p = std::get_if<StretchedProfile>(&v)) {
    s.stretched = true;
    s.ell = p->ell;
    if (p->lambda_index) s.lambda = H.generators()[*p->lambda_index];
    if (p->mu_index) s.mu = H.generators()[*p->mu_index];
  } else {
    const auto& ns = std::get<NotStretched>(v);
    s.ell = ns.ell;
    s.offending_element = ns.offending_element;
  }
  return s;
}

CertificateRecord make_certificate_record(const DeterminantalCertificate& cert) {
  CertificateRecord c;
  c.branch = to_string(cert.branch);
  c.j = cert.j;
  c.a = cert.a;
  c.b = cert.b;
  c.h = cert.h;
  c.h1 = cert.h1;
  c.ell = cert.ell;
  c.alpha = cert.alpha;
  c.p = cert.p;
  c.permuted_generators = cert.permuted_generators;
  c.matrix = to_string(cert.matrix_in_original_variables());
  c.permuted_matrix = to_string(cert.matrix);
  c.common_difference = cert.common_difference;
  c.dimension = cert.dimension;
  c.certified = cert.certified;
  return c;
}

TheoremRecord make_theorem_record(const MainTheoremReport& report) {
  TheoremRecord t;
  t.in_hypothesis = report.in_hypothesis;
  if (report.condition3) {
    t.pf_h = report.condition3->h;
    t.pf_alpha = report.condition3->alpha;
  }
  t.condition2_attempted = report.condition2_attempted;
  if (report.certificate) t.certificate = make_certificate_record(*report.certificate);
  if (report.condition2_error) t.condition2_error = std::string(to_string(*report.condition2_error));
  t.condition2_message = report.condition2_message;
  if (report.generators) {
    for (const auto& b : report.generators->binomials) t.ideal_generators.push_back(to_string(b));
    for (Int d : report.generators->degrees) {
      if (t.betti_degrees.empty() || t.betti_degrees.back() != d) t.betti_degrees.push_back(d);
    }
  }
  if (report.generators_error) t.generators_error = std::string(to_string(*report.generators_error));
  t.generators_message = report.generators_message;
  t.minors_match_generators = report.minors_match_generators;
  t.minors_same_structure = report.minors_same_structure;
  if (report.shape_match) t.shape_match = to_string(report.shape_match->matrix);
  t.notes = report.notes;
  t.falsifying = report.falsifying();
  return t;
}

TangentConeRecord make_tangent_cone_record(const TangentConeReport& report) {
  TangentConeRecord t;
  t.branch = to_string(report.branch);
  t.cm_formula = report.cm_formula;
  t.cm_sally = report.sally.cohen_macaulay;
  t.sally_target = report.sally.target;
  t.sally_order = report.sally.order;
  if (report.sally.witness) t.sally_witness = report.sally.witness->coefficients;
  t.h1_bound = report.shortcuts.h1_bound;
  t.ell_two_last = report.shortcuts.ell_two_last;
  t.ell_two_iff = report.shortcuts.ell_two_iff;
  t.criterion_lhs = report.criterion_lhs;
  t.criterion_rhs = report.criterion_rhs;
  t.agrees = report.agrees();
  t.shortcuts_consistent = report.shortcuts_consistent();
  return t;
}

RunRecord analyze(const NumericalSemigroup& H, const MainTheoremOptions& options, bool timing) {
  const auto start = std::chrono::steady_clock::now();
  RunRecord r;
  r.generators = H.generators();
  r.redundant = H.redundant();
  r.multiplicity = H.multiplicity();
  r.embedding_dimension = static_cast<Int>(H.embedding_dimension());
  r.frobenius = H.frobenius();
  r.pseudo_frobenius = H.pseudo_frobenius();
  r.apery = H.apery().sorted();

  const MainTheoremReport report = verify_main_theorem(H, options);
  r.stretched = make_stretched_record(H, report.stretched);
  r.theorem = make_theorem_record(report);
  if (report.condition2_holds()) {
    try {
      r.tangent_cone = make_tangent_cone_record(analyze_tangent_cone(H, *report.certificate));
    } catch (const Error& e) {
      r.tangent_cone_error = e.what();
    }
  }
  if (timing) {
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  return r;
}

std::string to_json_line(const RunRecord& r) {
  json j;
  j["schema"] = r.schema;
  j["generators"] = r.generators;
  j["redundant"] = r.redundant;
  j["multiplicity"] = r.multiplicity;
  j["embedding_dimension"] = r.embedding_dimension;
  j["frobenius"] = r.frobenius;
  j["pseudo_frobenius"] = r.pseudo_frobenius;
  j["apery"] = r.apery;
  j["stretched"] = to_json(r.stretched);
  j["theorem"] = to_json(r.theorem);
  if (r.tangent_cone) j["tangent_cone"] = to_json(*r.tangent_cone);
  put(j, "tangent_cone_error", r.tangent_cone_error);
  put(j, "elapsed_ms", r.elapsed_ms);
  return j.dump();
}

RunRecord record_from_json(const std::string& text) {
  try {
    const json j = json::parse(text);
    RunRecord r;
    get(j, "schema", r.schema);
    if (r.schema != 1) throw Error(ErrorCode::ParseError, "unsupported schema " + std::to_string(r.schema));
    get(j, "generators", r.generators);
    get(j, "redundant", r.redundant);
    get(j, "multiplicity", r.multiplicity);
    get(j, "embedding_dimension", r.embedding_dimension);
    get(j, "frobenius", r.frobenius);
    get(j, "pseudo_frobenius", r.pseudo_frobenius);
    get(j, "apery", r.apery);
    r.stretched = stretched_from(j.at("stretched"));
    r.theorem = theorem_from(j.at("theorem"));
    if (auto it = j.find("tangent_cone"); it != j.end() && !it->is_null()) r.tangent_cone = tangent_cone_from(*it);
    get(j, "tangent_cone_error", r.tangent_cone_error);
    get(j, "elapsed_ms", r.elapsed_ms);
    return r;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

std::string to_text(const RunRecord& r) {
  std::ostringstream out;
  out << "generators: " << join(r.generators) << "\n";
  if (!r.redundant.empty()) out << "redundant: " << join(r.redundant) << "\n";
  out << "multiplicity: " << r.multiplicity << "\n";
  out << "embedding dimension: " << r.embedding_dimension << "\n";
  out << "frobenius: " << r.frobenius << "\n";
  out << "PF: " << braces(r.pseudo_frobenius) << "\n";
  out << "apery: " << braces(r.apery) << "\n";

  const auto& s = r.stretched;
  out << "stretched: " << yes_no(s.stretched) << " (ell = " << s.ell;
  if (s.lambda) out << ", lambda = " << *s.lambda;
  if (s.mu) out << ", mu = " << *s.mu;
  if (s.offending_element) out << ", offending " << *s.offending_element;
  out << ")\n";

  const auto& t = r.theorem;
  out << "arithmetic PF: ";
  if (t.pf_h) {
    out << "h = " << *t.pf_h << ", alpha = " << *t.pf_alpha << "\n";
  } else {
    out << "no\n";
  }
  if (t.certificate) {
    const auto& c = *t.certificate;
    out << "matrix: " << c.matrix << "\n";
    out << "  branch " << c.branch << ", j = " << c.j << ", a = " << c.a;
    if (c.b) out << ", b = " << *c.b;
    out << ", h1 = " << c.h1 << ", p = " << c.p << ", certified " << yes_no(c.certified) << "\n";
  } else if (t.condition2_attempted) {
    out << "matrix: failed: " << t.condition2_message << "\n";
  }
  if (!t.generators_error) {
    out << "ideal (" << t.ideal_generators.size() << " generators):\n";
    for (const auto& g : t.ideal_generators) out << "  " << g << "\n";
    out << "betti degrees: " << join(t.betti_degrees) << "\n";
  } else {
    out << "ideal: " << t.generators_message << "\n";
  }
  if (t.minors_match_generators) out << "minors equal generators: " << yes_no(*t.minors_match_generators) << "\n";
  if (t.minors_same_structure) out << "minors generate minimally: " << yes_no(*t.minors_same_structure) << "\n";
  if (t.shape_match) out << "shape match: " << *t.shape_match << "\n";
  for (const auto& n : t.notes) out << "note: " << n << "\n";

  if (r.tangent_cone) {
    const auto& tc = *r.tangent_cone;
    out << "tangent cone: " << (tc.cm_formula ? "CM" : "NOT CM") << " (" << tc.criterion_lhs
        << (tc.cm_formula ? " >= " : " < ") << tc.criterion_rhs << ")\n";
    out << "  sally: " << (tc.cm_sally ? "CM" : "NOT CM");
    if (tc.sally_target) out << ", order(" << *tc.sally_target << ") = " << *tc.sally_order;
    if (tc.sally_witness) out << " via (" << join(*tc.sally_witness, ",") << ")";
    out << "\n";
  }
  if (r.tangent_cone_error) out << "tangent cone: " << *r.tangent_cone_error << "\n";
  if (r.falsifying()) out << "FALSIFYING INSTANCE\n";
  if (r.elapsed_ms) out << "elapsed: " << *r.elapsed_ms << " ms\n";
  return out.str();
}

}  // namespace sgforge
