#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sgforge/binomial.hpp"
#include "sgforge/groebner.hpp"
#include "sgforge/semigroup.hpp"
#include "sgforge/stretched.hpp"
#include "sgforge/toric.hpp"

namespace sgforge {

enum class Branch { J1, JnMinus1, Med };

std::string to_string(Branch b);

// Index into H.generators() of the generator whose multiples fill Ap(H, a1);
// nullopt for maximal embedding dimension (ell == 1). Requires n >= 3,
// a1 >= 3, stretched, and the given arithmetic PF profile.
// Throws HypothesisViolated naming the failed hypothesis.
std::optional<std::size_t> classify_apery(const NumericalSemigroup& H, const ArithmeticPFProfile& profile);
std::optional<std::size_t> classify_apery(const NumericalSemigroup& H);

struct JDetection {
  Branch branch = Branch::Med;
  Int j = 0;                          // 1 or n-1; 0 for Med
  std::optional<Int> b;               // (h + j*alpha + a) / ell
  std::optional<std::size_t> b_index; // position of b in H.generators()
};

// Locates j with ell * a_lambda = h + j*alpha + a1. Throws
// InternalContradiction when j is not in {1, n-1}, gcd(a1, b) != 1, or the
// remaining generators are not the h + i*alpha + a1.
JDetection detect_j(const NumericalSemigroup& H, const ArithmeticPFProfile& profile);

struct DeterminantalCertificate {
  // Variable X_{k+1} of `matrix` carries generator H.generators()[permutation[k]].
  std::vector<std::size_t> permutation;
  std::vector<Int> permuted_generators;
  Branch branch = Branch::Med;
  Int j = 0;
  Int a = 0;
  std::optional<Int> b;
  Int h = 0;
  Int h1 = 0;
  Int ell = 1;
  Int alpha = 1;
  Int p = 0;                         // exponent of X1 in the bottom-right entry
  MonomialMatrix matrix;             // in permuted variables
  std::optional<Int> common_difference;
  std::optional<Int> dimension;      // dim_k S/(I_2(M) + (X1))
  bool certified = false;

  MonomialMatrix matrix_in_original_variables() const;
  std::vector<Binomial> minors_in_original_variables() const;
};

// Builds the 2 x n matrix for the detected branch and certifies its minors
// with nak_certificate. Throws HypothesisViolated, NonIntegralParameter or
// CertificationFailed.
DeterminantalCertificate construct_matrix(const NumericalSemigroup& H, const ArithmeticPFProfile& profile,
                                          const GroebnerCaps& caps = {});
DeterminantalCertificate construct_matrix(const NumericalSemigroup& H, const GroebnerCaps& caps = {});

// True iff {0..ell} U {ell + r, ..., ell + (n-2) r} covers Z/(ell + n - 1).
bool complete_residue_check(Int ell, Int n, Int r);

// Two sets of binomials in I_H are interchangeable minimal generating sets when
// in every degree both are spanning trees over the components of that
// degree's factorization graph.
bool same_minimal_generator_structure(const NumericalSemigroup& H, const std::vector<Binomial>& first,
                                      const std::vector<Binomial>& second);

// A matrix of the cyclic shape (powers of X_s(i) over powers of X_s(i+1))
// whose minors generate I_H, found by search over arrangements.
struct ShapeMatch {
  std::vector<std::size_t> permutation;
  MonomialMatrix matrix;  // in the original variables of H
};

// Searches arrangements with the multiplicity first (at most (n-1)! of them)
// and column exponents compatible with the common difference `difference`.
// Returns the first certified match in enumeration order.
std::optional<ShapeMatch> find_cyclic_presentation(const NumericalSemigroup& H, const ToricGenerators& generators,
                                                   Int difference, const GroebnerCaps& caps = {});

struct MainTheoremOptions {
  GroebnerCaps caps;
  std::size_t shape_match_max_n = 7;
};

struct MainTheoremReport {
  std::size_t embedding_dimension = 0;
  Int multiplicity = 0;
  bool in_hypothesis = false;        // n >= 3 and a1 >= 3
  StretchedVerdict stretched;
  std::optional<ArithmeticPFProfile> condition3;
  bool condition2_attempted = false;
  std::optional<DeterminantalCertificate> certificate;
  std::optional<ErrorCode> condition2_error;
  std::string condition2_message;
  std::optional<ToricGenerators> generators;
  std::optional<ErrorCode> generators_error;
  std::string generators_message;
  std::optional<bool> minors_match_generators;      // literal set equality
  std::optional<bool> minors_same_structure;        // degree-wise spanning-tree equivalence
  std::optional<ShapeMatch> shape_match;
  std::vector<std::string> notes;

  bool stretched_holds() const { return is_stretched(stretched); }
  bool condition2_holds() const { return certificate.has_value() && certificate->certified; }
  // A structure theorem failed on an instance satisfying its hypotheses.
  bool falsifying() const;
};

MainTheoremReport verify_main_theorem(const NumericalSemigroup& H, const MainTheoremOptions& options = {});

}  // namespace sgforge
