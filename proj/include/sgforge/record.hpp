#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sgforge/semigroup.hpp"
#include "sgforge/structure.hpp"
#include "sgforge/tangent_cone.hpp"

namespace sgforge {

// Plain-data snapshot of everything `analyze` reports. Polynomials are stored
// in their text form so a record re-parses without the library.

struct StretchedRecord {
  bool stretched = false;
  Int ell = 1;
  std::optional<Int> lambda;       // generator value, not index
  std::optional<Int> mu;
  std::optional<Int> offending_element;

  bool operator==(const StretchedRecord&) const = default;
};

struct CertificateRecord {
  std::string branch;
  Int j = 0;
  Int a = 0;
  std::optional<Int> b;
  Int h = 0;
  Int h1 = 0;
  Int ell = 1;
  Int alpha = 1;
  Int p = 0;
  std::vector<Int> permuted_generators;
  std::string matrix;              // original variables
  std::string permuted_matrix;     // X1..Xn carry permuted_generators
  std::optional<Int> common_difference;
  std::optional<Int> dimension;
  bool certified = false;

  bool operator==(const CertificateRecord&) const = default;
};

struct TheoremRecord {
  bool in_hypothesis = false;
  std::optional<Int> pf_h;
  std::optional<Int> pf_alpha;
  bool condition2_attempted = false;
  std::optional<CertificateRecord> certificate;
  std::optional<std::string> condition2_error;
  std::string condition2_message;
  std::vector<std::string> ideal_generators;
  std::vector<Int> betti_degrees;
  std::optional<std::string> generators_error;
  std::string generators_message;
  std::optional<bool> minors_match_generators;
  std::optional<bool> minors_same_structure;
  std::optional<std::string> shape_match;
  std::vector<std::string> notes;
  bool falsifying = false;

  bool operator==(const TheoremRecord&) const = default;
};

struct TangentConeRecord {
  std::string branch;
  bool cm_formula = true;
  bool cm_sally = true;
  std::optional<Int> sally_target;
  std::optional<Int> sally_order;
  std::optional<std::vector<Int>> sally_witness;
  std::optional<bool> h1_bound;
  std::optional<bool> ell_two_last;
  std::optional<bool> ell_two_iff;
  Int criterion_lhs = 0;
  Int criterion_rhs = 1;
  bool agrees = true;                // formula == Sally
  bool shortcuts_consistent = true;

  bool operator==(const TangentConeRecord&) const = default;
};

struct RunRecord {
  int schema = 1;
  std::vector<Int> generators;
  std::vector<Int> redundant;
  Int multiplicity = 0;
  Int embedding_dimension = 0;
  Int frobenius = -1;
  std::vector<Int> pseudo_frobenius;
  std::vector<Int> apery;          // Ap(H, a1), ascending
  StretchedRecord stretched;
  TheoremRecord theorem;
  std::optional<TangentConeRecord> tangent_cone;
  std::optional<std::string> tangent_cone_error;
  std::optional<double> elapsed_ms;

  // Theorem falsified, or formula and Sally disagree, or Sally could not run
  // on a certified instance.
  bool falsifying() const;
  bool operator==(const RunRecord&) const = default;
};

StretchedRecord make_stretched_record(const NumericalSemigroup& H, const StretchedVerdict& v);
CertificateRecord make_certificate_record(const DeterminantalCertificate& cert);
TheoremRecord make_theorem_record(const MainTheoremReport& report);
TangentConeRecord make_tangent_cone_record(const TangentConeReport& report);

// Full analysis of one semigroup. Timing is recorded only when asked for, so
// records stay byte-for-byte reproducible by default.
RunRecord analyze(const NumericalSemigroup& H, const MainTheoremOptions& options = {}, bool timing = false);

std::string to_json_line(const RunRecord& r);
RunRecord record_from_json(const std::string& text);  // throws ParseError

// Human-readable multi-line rendering.
std::string to_text(const RunRecord& r);

}  // namespace sgforge
