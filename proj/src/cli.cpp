#include "sgforge/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sgforge/families.hpp"
#include "sgforge/record.hpp"
#include "sgforge/search.hpp"
#include "sgforge/tangent_cone.hpp"

namespace sgforge {

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

bool is_input_error(ErrorCode c) {
  switch (c) {
    case ErrorCode::EmptyInput:
    case ErrorCode::GcdNotOne:
    case ErrorCode::InvalidGenerator:
    case ErrorCode::ParseError:
    case ErrorCode::PreconditionFailed:
    case ErrorCode::BaseNotInSemigroup:
      return true;
    default:
      return false;
  }
}

std::string join(const std::vector<Int>& v, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

std::string braces(const std::vector<Int>& v) { return "{" + join(v) + "}"; }
std::string angle(const std::vector<Int>& v) { return "<" + join(v) + ">"; }

void print_stretched(std::ostream& out, const NumericalSemigroup& H) {
  const auto s = make_stretched_record(H, stretched_profile(H));
  if (s.stretched) {
    out << "stretched: ell = " << s.ell;
    if (s.lambda) out << ", lambda = " << *s.lambda;
    if (s.mu) out << ", mu = " << *s.mu;
    out << "\n";
  } else {
    out << "not stretched: ell = " << s.ell << ", offending Apery element " << *s.offending_element << "\n";
  }
}

void print_certificate(std::ostream& out, const DeterminantalCertificate& c) {
  out << "matrix: " << to_string(c.matrix_in_original_variables()) << "\n";
  out << "branch: " << to_string(c.branch) << " (j = " << c.j << ")\n";
  out << "a = " << c.a;
  if (c.b) out << ", b = " << *c.b;
  out << ", h = " << c.h << ", h1 = " << c.h1 << ", ell = " << c.ell << ", alpha = " << c.alpha << ", p = " << c.p
      << "\n";
  out << "variable order: " << join(c.permuted_generators, " ") << "\n";
  out << "certified: " << (c.certified ? "yes" : "no");
  if (c.dimension) out << " (dim S/(I2(M)+(X1)) = " << *c.dimension << ")";
  out << "\n";
}

void print_tangent_cone(std::ostream& out, const TangentConeReport& t) {
  out << "formula: " << (t.cm_formula ? "CM" : "NOT CM") << " (" << t.criterion_lhs << (t.cm_formula ? " >= " : " < ")
      << t.criterion_rhs << ")\n";
  out << "sally: " << (t.sally.cohen_macaulay ? "CM" : "NOT CM");
  if (t.sally.target) {
    out << " (order of " << *t.sally.target << " is " << *t.sally.order << ", witness ("
        << join(t.sally.witness->coefficients) << "))";
  }
  out << "\n";
  if (t.shortcuts.h1_bound) out << "shortcut h1 >= ell^2 - ell - alpha: CM\n";
  if (t.shortcuts.ell_two_last) out << "shortcut ell = 2, j = n-1: CM\n";
  if (t.shortcuts.ell_two_iff) out << "shortcut ell = 2: " << (*t.shortcuts.ell_two_iff ? "CM" : "NOT CM") << "\n";
  out << (t.agrees() && t.shortcuts_consistent() ? "agree" : "DISAGREE") << "\n";
}

struct Checker {
  std::ostream& out;
  int passed = 0;
  int failed = 0;

  void operator()(const std::string& label, bool ok) {
    out << (ok ? "ok    " : "FAIL  ") << label << "\n";
    (ok ? passed : failed) += 1;
  }
};

std::vector<Binomial> parse_all(const std::vector<std::string>& texts, std::size_t n) {
  std::vector<Binomial> out;
  for (const auto& t : texts) out.push_back(parse_binomial(t, n));
  return out;
}

// 2x2 minors of a matrix whose entries need not be pure powers.
std::vector<Binomial> general_minors(const std::vector<std::string>& top, const std::vector<std::string>& bottom,
                                     std::size_t n) {
  std::vector<Binomial> out;
  for (std::size_t i = 0; i < top.size(); ++i) {
    for (std::size_t j = i + 1; j < top.size(); ++j) {
      out.push_back(canonical(Binomial(parse_monomial(top[i], n) * parse_monomial(bottom[j], n),
                                       parse_monomial(top[j], n) * parse_monomial(bottom[i], n))));
    }
  }
  return out;
}

int verify_examples(std::ostream& out, const GroebnerCaps& caps) {
  const auto start = std::chrono::steady_clock::now();
  Checker check{out};
  MainTheoremOptions opts;
  opts.caps = caps;

  {
    const auto H = make_semigroup({6, 13, 40, 41});
    const std::string tag = "<6,13,40,41> ";
    check(tag + "Ap = {0,13,26,39,40,41}", H.apery().sorted() == std::vector<Int>{0, 13, 26, 39, 40, 41});
    check(tag + "PF = {33,34,35}", H.pseudo_frobenius() == std::vector<Int>{33, 34, 35});
    check(tag + "stretched", is_stretched(stretched_profile(H)));
    const auto cert = construct_matrix(H, caps);
    check(tag + "certified [X1^2, X2^3, X3, X4; X2, X3, X4, X1^7]",
          cert.certified && cert.matrix_in_original_variables() ==
                                parse_matrix("[X1^2, X2^3, X3, X4; X2, X3, X4, X1^7]", 4));
    const auto tc = analyze_tangent_cone(H, cert);
    check(tag + "tangent cone NOT CM (formula and Sally)", !tc.cm_formula && !tc.sally.cohen_macaulay);
    check(tag + "family j1 ell=3 n=4 alpha=1 h1=1", family_j1({3, 4, 1, 1}) == H);
  }
  {
    const auto H = make_semigroup({7, 39, 43, 47, 17});
    const std::string tag = "<7,39,43,47,17> ";
    check(tag + "Ap = {0,17,34,39,43,47,51}", H.apery().sorted() == std::vector<Int>{0, 17, 34, 39, 43, 47, 51});
    check(tag + "PF = {32,36,40,44}", H.pseudo_frobenius() == std::vector<Int>{32, 36, 40, 44});
    check(tag + "stretched", is_stretched(stretched_profile(H)));
    const auto cert = construct_matrix(H, caps);
    check(tag + "certified [X1^5, X2, X3, X4, X5; X2, X3, X4, X5^3, X1^3]",
          cert.certified && cert.matrix_in_original_variables() ==
                                parse_matrix("[X1^5, X2, X3, X4, X5; X2, X3, X4, X5^3, X1^3]", 5));
    const auto tc = analyze_tangent_cone(H, cert);
    check(tag + "tangent cone CM (formula and Sally)", tc.cm_formula && tc.sally.cohen_macaulay);
    check(tag + "family jn1 ell=3 n=5 alpha=4 h1=4", family_jn1({3, 5, 4, 4}) == H);
  }
  {
    const auto H = make_semigroup({6, 11, 13, 16, 20});
    const std::string tag = "<6,11,13,16,20> ";
    check(tag + "Ap = {0,11,13,16,20,27}", H.apery().sorted() == std::vector<Int>{0, 11, 13, 16, 20, 27});
    check(tag + "stretched", is_stretched(stretched_profile(H)));
    check(tag + "PF = {7,14,21}", H.pseudo_frobenius() == std::vector<Int>{7, 14, 21});
    check(tag + "PF arithmetic of length 3 != n-1", !arithmetic_pf_profile(H));
    auto J = general_minors({"X3", "X1^3", "X5", "X1^2*X2", "X2*X4"}, {"X1", "X2", "X3", "X4", "X5"}, 5);
    J.push_back(parse_binomial("X2^2 - X1*X4", 5));
    J.push_back(parse_binomial("X4^2 - X1^2*X5", 5));
    check(tag + "I_H = I2(M) + (X2^2 - X1*X4, X4^2 - X1^2*X5)", nak_certificate(H, J, caps).holds);
    check(tag + "9 minimal generators", minimal_generators(H, {std::nullopt, caps}).binomials.size() == 9);
  }
  {
    const auto H = make_semigroup({8, 9, 31, 37, 38});
    const std::string tag = "<8,9,31,37,38> ";
    check(tag + "Ap = {0,9,18,27,31,36,37,38}", H.apery().sorted() == std::vector<Int>{0, 9, 18, 27, 31, 36, 37, 38});
    check(tag + "stretched", is_stretched(stretched_profile(H)));
    check(tag + "PF = {23,28,29,30}", H.pseudo_frobenius() == std::vector<Int>{23, 28, 29, 30});
    check(tag + "PF not arithmetic", !arithmetic_pf_profile(H));
    const auto J = parse_all({"X2^5 - X1*X4", "X2*X3 - X1^5", "X2*X4 - X1*X5", "X2*X5 - X1^2*X3",
                              "X3^2 - X1*X2^6", "X3*X4 - X1^4*X2^4", "X3*X5 - X1^3*X2^5",
                              "X4^2 - X1^2*X2^3*X3", "X4*X5 - X1*X2^4*X3", "X5^2 - X1*X3*X4"},
                             5);
    check(tag + "I_H has the listed 10 generators", nak_certificate(H, J, caps).holds &&
                                                        minimal_generators(H, {std::nullopt, caps}).binomials.size() == 10);
    auto two = general_minors({"X1", "X2^4", "X3", "X4", "X5"}, {"X2", "X4", "X1^4", "X5", "X1*X3"}, 5);
    const auto more = general_minors({"X1^3", "X2", "X3", "X4", "X5"}, {"X3", "X1^2", "X5", "X1*X2^4", "X2^5"}, 5);
    two.insert(two.end(), more.begin(), more.end());
    check(tag + "I_H = I2(M1) + I2(M2)", nak_certificate(H, two, caps).holds);
  }
  {
    const auto H = make_semigroup({8, 9, 28, 29, 15});
    const std::string tag = "<8,9,28,29,15> ";
    check(tag + "Ap = {0,9,15,18,27,28,29,30}", H.apery().sorted() == std::vector<Int>{0, 9, 15, 18, 27, 28, 29, 30});
    check(tag + "not stretched", !is_stretched(stretched_profile(H)));
    check(tag + "PF = {19,20,21,22}", H.pseudo_frobenius() == std::vector<Int>{19, 20, 21, 22});
    out << "      (the value {10,11,12,13} sometimes quoted for this semigroup is not PF(H): 10 + 9 = 19 is a gap)\n";
    const auto report = verify_main_theorem(H, opts);
    const auto printed = parse_matrix("[X1, X2^3, X3, X4, X5; X2, X3, X4, X5^2, X1^2]", 5);
    check(tag + "shape match finds [X1, X2^3, X3, X4, X5; X2, X3, X4, X5^2, X1^2]",
          report.shape_match && report.shape_match->matrix == printed);
    check(tag + "minors of that matrix are I_H", nak_certificate(H, minors2(printed), caps).holds);
  }
  {
    const auto H = make_semigroup({6, 7, 11, 15});
    check("<6,7,11,15> not stretched", !is_stretched(stretched_profile(H)));
  }

  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  out << check.passed << "/" << (check.passed + check.failed) << " checks passed";
  out << " (" << static_cast<long long>(ms) << " ms)\n";
  return check.failed == 0 ? kOk : kFailure;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical semigroups: Apery sets, stretchedness, determinantal presentations, tangent cones"};
  app.name("sgforge");
  app.require_subcommand(1);

  std::vector<Int> gens;
  bool json_output = false;
  bool timing = false;
  Int base = 0;

  auto with_gens = [&](const std::string& name, const std::string& help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("generators", gens, "generators of H")->required()->expected(1, -1);
    return sub;
  };

  auto* analyze_cmd = with_gens("analyze", "full record of invariants, presentation and tangent cone");
  analyze_cmd->add_flag("--json", json_output, "emit one JSON object");
  analyze_cmd->add_flag("--timing", timing, "record elapsed time");
  auto* apery_cmd = with_gens("apery", "Apery set");
  apery_cmd->add_option("--base", base, "element h of H (default: multiplicity)");
  auto* pf_cmd = with_gens("pf", "pseudo-Frobenius numbers");
  auto* gaps_cmd = with_gens("gaps", "gaps of H");
  auto* stretched_cmd = with_gens("stretched", "stretchedness of k[H]/(t^a1)");
  auto* ideal_cmd = with_gens("ideal", "minimal binomial generators of I_H");
  auto* matrix_cmd = with_gens("matrix", "certified 2 x n determinantal presentation");
  auto* tangent_cmd = with_gens("tangent-cone", "Cohen-Macaulayness of the tangent cone");

  std::string family_kind;
  FamilyParams params;
  auto* family_cmd = app.add_subcommand("family", "semigroup from the two-parameter families");
  family_cmd->add_option("kind", family_kind, "j1 or jn1")->required()->check(CLI::IsMember({"j1", "jn1"}));
  family_cmd->add_option("--ell", params.ell)->required();
  family_cmd->add_option("--n", params.n)->required();
  family_cmd->add_option("--alpha", params.alpha)->required();
  family_cmd->add_option("--h1", params.h1)->required();

  auto* verify_cmd = app.add_subcommand("verify-paper", "reproduce the worked examples");

  SearchOptions search;
  std::string out_path;
  auto* search_cmd = app.add_subcommand("search", "exhaustive check over bounded semigroups");
  search_cmd->add_option("--max-multiplicity", search.bounds.max_multiplicity)->required()->check(CLI::Range(2, 64));
  search_cmd->add_option("--max-frobenius", search.bounds.max_frobenius)->required()->check(CLI::Range(1, 400));
  search_cmd->add_option("--jobs", search.jobs, "worker threads")->check(CLI::Range(1, 1024));
  search_cmd->add_option("--out", out_path, "append JSON lines to this file");
  search_cmd->add_flag("--timing", search.timing, "record elapsed time per semigroup");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const GroebnerCaps caps = caps_from_environment();
    MainTheoremOptions theorem;
    theorem.caps = caps;

    if (*verify_cmd) return verify_examples(out, caps);

    if (*family_cmd) {
      const auto H = family_kind == "j1" ? family_j1(params) : family_jn1(params);
      out << "H = " << angle(H.generators()) << "\n";
      out << "multiplicity " << H.multiplicity() << ", embedding dimension " << H.embedding_dimension() << "\n";
      out << "PF = " << braces(H.pseudo_frobenius()) << "\n";
      out << "validated\n";
      return kOk;
    }

    if (*search_cmd) {
      search.theorem = theorem;
      const auto semigroups = enumerate_semigroups(search.bounds);
      const auto records = search.jobs == 1 ? analyze_serial(semigroups, theorem, search.timing)
                                            : analyze_parallel(semigroups, search.jobs, theorem, search.timing);
      if (!out_path.empty()) {
        std::ofstream file(out_path, std::ios::app);
        if (!file) throw Error(ErrorCode::ParseError, "cannot open " + out_path);
        for (const auto& r : records) file << to_json_line(r) << "\n";
      }
      const auto summary = summarize(records);
      out << "semigroups: " << summary.total << "\n";
      for (const auto& [name, count] : summary.verdicts) out << "  " << name << ": " << count << "\n";
      out << "in hypothesis: " << summary.in_hypothesis << "\n";
      out << "certified: " << summary.certified << "\n";
      out << "minors equal generators: " << summary.minors_equal_generators << "\n";
      out << "minors generate minimally: " << summary.minors_generate_minimally << "\n";
      out << "shape matches beyond hypothesis: " << summary.shape_matches << "\n";
      out << "sweep errors: " << summary.sweep_errors << "\n";
      out << "falsifying: " << summary.falsifying.size() << "\n";
      for (const auto& g : summary.falsifying) err << "FALSIFYING INSTANCE " << angle(g) << "\n";
      return summary.falsifying.empty() ? kOk : kFailure;
    }

    const auto H = make_semigroup(std::span<const Int>(gens));

    if (*analyze_cmd) {
      const auto r = analyze(H, theorem, timing);
      if (json_output) {
        out << to_json_line(r) << "\n";
      } else {
        out << to_text(r);
      }
      return r.falsifying() ? kFailure : kOk;
    }
    if (*apery_cmd) {
      const Int h = base == 0 ? H.multiplicity() : base;
      const auto ap = apery_set(H, h).sorted();
      out << "Ap(H, " << h << ") = " << braces(ap) << "\n";
      return kOk;
    }
    if (*pf_cmd) {
      out << "PF = " << braces(H.pseudo_frobenius()) << "\n";
      out << "frobenius: " << H.frobenius() << "\n";
      return kOk;
    }
    if (*gaps_cmd) {
      const auto g = gaps(H);
      out << "genus " << g.size() << ": " << braces(g) << "\n";
      return kOk;
    }
    if (*stretched_cmd) {
      print_stretched(out, H);
      return kOk;
    }
    if (*ideal_cmd) {
      const auto G = minimal_generators(H, {std::nullopt, caps});
      out << G.binomials.size() << " minimal generators\n";
      for (std::size_t i = 0; i < G.binomials.size(); ++i) {
        out << "  deg " << G.degrees[i] << ": " << to_string(G.binomials[i]) << "\n";
      }
      std::vector<Int> betti = G.degrees;
      betti.erase(std::unique(betti.begin(), betti.end()), betti.end());
      out << "betti degrees: " << join(betti, " ") << "\n";
      return kOk;
    }
    if (*matrix_cmd) {
      print_certificate(out, construct_matrix(H, caps));
      return kOk;
    }
    if (*tangent_cmd) {
      const auto cert = construct_matrix(H, caps);
      const auto t = analyze_tangent_cone(H, cert);
      out << "branch: " << to_string(t.branch) << "\n";
      print_tangent_cone(out, t);
      return t.agrees() && t.shortcuts_consistent() ? kOk : kFailure;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return is_input_error(e.code()) ? kUsage : kFailure;
  }
  return kUsage;
}

}  // namespace sgforge
